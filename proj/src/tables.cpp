#include "coxcat/tables.hpp"

#include "json.hpp"

#include <sstream>

namespace coxcat {

GroupContext::GroupContext(const std::string& type, bool allowHeavy)
    : sys(CoxeterSystem::fromString(type)),
      full((sys.enumerate(allowHeavy), SubSystem::full(sys))),
      flats(full),
      nc(full, flats),
      tm(ThetaMatrices::build(nc)) {}

const ClusterComplex& GroupContext::cluster(int m) {
  auto it = clusters_.find(m);
  if (it == clusters_.end())
    it = clusters_.emplace(m, std::make_unique<ClusterComplex>(full, flats, m)).first;
  return *it->second;
}

const CharacterData& GroupContext::characters() {
  if (!chars_) chars_ = std::make_unique<CharacterData>(full, flats);
  return *chars_;
}

GroupContext::SubData::SubData(const CoxeterSystem& W, const std::vector<int>& simples)
    : sub(SubSystem::standard(W, simples)), flats(sub), nc(sub, flats) {}

const CharacterData& GroupContext::SubData::characters() {
  if (!chars) chars = std::make_unique<CharacterData>(sub, flats);
  return *chars;
}

GroupContext::SubData& GroupContext::subset(uint32_t bits) {
  auto it = subs_.find(bits);
  if (it == subs_.end()) {
    std::vector<int> simples;
    for (int i = 0; i < full.rank(); ++i)
      if (bits & (1u << i)) simples.push_back(full.simples[i]);
    it = subs_.emplace(bits, std::make_unique<SubData>(sys, simples)).first;
  }
  return *it->second;
}

const std::vector<UniPoly>& GroupContext::kappaPlusPolys() {
  if (!kappaPlusPolys_.empty() || flats.numOrbits() == 0) return kappaPlusPolys_;
  int r = full.rank();
  kappaPlusPolys_.assign(flats.numOrbits(), UniPoly(Var::m));
  for (uint32_t bits = 0; bits < (1u << r); ++bits) {
    SubData& sd = subset(bits);
    Rational sign = (r - __builtin_popcount(bits)) % 2 == 0 ? 1 : -1;
    for (int k = 0; k < flats.numOrbits(); ++k) {
      std::vector<char> adm(sd.nc.size(), 0);
      bool any = false;
      for (int i = 0; i < sd.nc.size(); ++i) {
        adm[i] = flats.orbitOf(sd.nc.elem(i)) == k;
        any = any || adm[i];
      }
      if (!any) continue;
      UniPoly p = sd.nc.kappaPolyFor(adm);
      p.scale(sign);
      kappaPlusPolys_[k] += p;
    }
  }
  return kappaPlusPolys_;
}

GroupTables buildTables(GroupContext& ctx, int m) {
  GroupTables out;
  out.group = ctx.sys.type().str();
  out.m = m;
  const ClusterComplex& cc = ctx.cluster(m);
  auto kappa = ctx.nc.kappaCensus(m);
  auto kappaP = ctx.nc.kappaPlusCensus(m);
  auto gamma = cc.gammaCensus();
  auto gammaP = cc.gammaPlusCensus();
  for (int k = 0; k < ctx.flats.numOrbits(); ++k) {
    OrbitRow row;
    row.label = ctx.flats.label(k);
    row.dim = ctx.flats.orbitDim(k);
    row.coxeter_type = ctx.flats.orbitType(k).factors.empty() ? "1" : ctx.flats.orbitType(k).str();
    for (const Int& b : ctx.flats.osExponents(k)) row.os_exponents.push_back(long(b));
    row.nu = ctx.flats.nu(k);
    row.normalizer_index = ctx.flats.normalizerIndex(k);
    row.kappa = kappa[k];
    row.kappa_plus = kappaP[k];
    row.gamma = gamma[k];
    row.gamma_plus = gammaP[k];
    UniPoly phi = factor::phiForOrbit(ctx.nc, k);
    for (const Rational& c : phi.coeffs()) row.phi_coeffs.push_back(asInt(c));
    out.orbits.push_back(std::move(row));
  }
  out.f_vector = cc.fVector();
  for (const Rational& h : ClusterComplex::hFromF(out.f_vector)) out.h_vector.push_back(asInt(h));
  out.facets = cc.facetCount();
  out.positive_facets = cc.positiveFacetCount();
  return out;
}

GroupTables combineTables(const GroupTables& a, const GroupTables& b) {
  if (a.m != b.m) throw std::invalid_argument("combineTables: mismatched m");
  GroupTables out;
  out.group = a.group + "x" + b.group;
  out.m = a.m;
  for (const OrbitRow& ra : a.orbits)
    for (const OrbitRow& rb : b.orbits) {
      OrbitRow row;
      auto joinLabel = [](const std::string& x, const std::string& y) {
        if (x == "1") return y;
        if (y == "1") return x;
        return x + "x" + y;
      };
      row.label = joinLabel(ra.label, rb.label);
      row.coxeter_type = joinLabel(ra.coxeter_type, rb.coxeter_type);
      row.dim = ra.dim + rb.dim;
      row.os_exponents = ra.os_exponents;
      row.os_exponents.insert(row.os_exponents.end(), rb.os_exponents.begin(),
                              rb.os_exponents.end());
      std::sort(row.os_exponents.begin(), row.os_exponents.end());
      row.nu = ra.nu * rb.nu;
      row.normalizer_index = ra.normalizer_index * rb.normalizer_index;
      row.kappa = ra.kappa * rb.kappa;
      row.kappa_plus = ra.kappa_plus * rb.kappa_plus;
      row.gamma = ra.gamma * rb.gamma;
      row.gamma_plus = ra.gamma_plus * rb.gamma_plus;
      // phi multiplies with the binomial shuffle of the two tails; the tail
      // lengths are the class dimensions (phi may have smaller degree).
      int k1 = ra.dim, k2 = rb.dim;
      int d1 = int(ra.phi_coeffs.size()) - 1, d2 = int(rb.phi_coeffs.size()) - 1;
      row.phi_coeffs.assign(std::max(d1 + d2 + 1, 1), Int(0));
      for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d2; ++j)
          row.phi_coeffs[i + j] += ra.phi_coeffs[i] * rb.phi_coeffs[j];
      for (Int& c : row.phi_coeffs) c *= binomial(k1 + k2, k1);
      out.orbits.push_back(std::move(row));
    }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const OrbitRow& x, const OrbitRow& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.label < y.label;
  });
  // f-vectors convolve; the h-vector is recomputed from the product f-vector.
  out.f_vector.assign(a.f_vector.size() + b.f_vector.size() - 1, Int(0));
  for (size_t i = 0; i < a.f_vector.size(); ++i)
    for (size_t j = 0; j < b.f_vector.size(); ++j) out.f_vector[i + j] += a.f_vector[i] * b.f_vector[j];
  for (const Rational& h : ClusterComplex::hFromF(out.f_vector)) out.h_vector.push_back(asInt(h));
  out.facets = a.facets * b.facets;
  out.positive_facets = a.positive_facets * b.positive_facets;
  return out;
}

namespace {

nlohmann::ordered_json tableJson(const GroupTables& t) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["group"] = t.group;
  doc["m"] = t.m;
  doc["orbits"] = nlohmann::ordered_json::array();
  for (const OrbitRow& row : t.orbits) {
    nlohmann::ordered_json o;
    o["label"] = row.label;
    o["dim"] = row.dim;
    o["coxeter_type"] = row.coxeter_type;
    o["os_exponents"] = row.os_exponents;
    o["nu"] = row.nu;
    o["normalizer_index"] = long(row.normalizer_index);
    o["kappa"] = long(row.kappa);
    o["kappa_plus"] = long(row.kappa_plus);
    o["gamma"] = long(row.gamma);
    o["gamma_plus"] = long(row.gamma_plus);
    std::vector<long> phi;
    for (const Int& c : row.phi_coeffs) phi.push_back(long(c));
    o["phi_coeffs"] = phi;
    doc["orbits"].push_back(o);
  }
  std::vector<long> fv, hv;
  for (const Int& x : t.f_vector) fv.push_back(long(x));
  for (const Int& x : t.h_vector) hv.push_back(long(x));
  doc["f_vector"] = fv;
  doc["h_vector"] = hv;
  doc["facets"] = long(t.facets);
  doc["positive_facets"] = long(t.positive_facets);
  return doc;
}

}  // namespace

std::string toJson(const std::vector<GroupTables>& tables) {
  if (tables.size() == 1) return tableJson(tables[0]).dump(2) + "\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& t : tables) arr.push_back(tableJson(t));
  return arr.dump(2) + "\n";
}

namespace {

std::string joinInts(const std::vector<Int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << " ";
    out << v[i];
  }
  return out.str();
}

std::string joinLongs(const std::vector<long>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << " ";
    out << v[i];
  }
  return out.str();
}

}  // namespace

std::string toCsv(const std::vector<GroupTables>& tables) {
  std::ostringstream out;
  out << "group,m,label,dim,coxeter_type,os_exponents,nu,normalizer_index,kappa,kappa_plus,"
         "gamma,gamma_plus,phi_coeffs\n";
  for (const auto& t : tables)
    for (const OrbitRow& row : t.orbits)
      out << t.group << "," << t.m << "," << row.label << "," << row.dim << ","
          << row.coxeter_type << "," << joinLongs(row.os_exponents) << "," << row.nu << ","
          << row.normalizer_index << "," << row.kappa << "," << row.kappa_plus << ","
          << row.gamma << "," << row.gamma_plus << "," << joinInts(row.phi_coeffs) << "\n";
  return out.str();
}

std::string toText(const std::vector<GroupTables>& tables) {
  std::ostringstream out;
  for (const auto& t : tables) {
    out << "group " << t.group << ", m = " << t.m << "\n";
    out << "  facets " << t.facets << ", positive facets " << t.positive_facets << "\n";
    out << "  f-vector: " << joinInts(t.f_vector) << "\n";
    out << "  h-vector: " << joinInts(t.h_vector) << "\n";
    out << "  orbits (label dim type os nu [N:W] kappa kappa+ gamma gamma+ phi):\n";
    for (const OrbitRow& row : t.orbits) {
      out << "    " << row.label << " " << row.dim << " " << row.coxeter_type << " ["
          << joinLongs(row.os_exponents) << "] " << row.nu << " " << row.normalizer_index << " "
          << row.kappa << " " << row.kappa_plus << " " << row.gamma << " " << row.gamma_plus
          << " [" << joinInts(row.phi_coeffs) << "]\n";
    }
  }
  return out.str();
}

}  // namespace coxcat
