#include "coxcat/types.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxcat {

bool IrrFactor::operator<(const IrrFactor& o) const {
  if (family != o.family) return family < o.family;
  if (rank != o.rank) return rank < o.rank;
  return bond < o.bond;
}

std::string IrrFactor::str() const {
  std::ostringstream out;
  if (family == 'I')
    out << "I2(" << bond << ")";
  else
    out << family << rank;
  return out.str();
}

std::vector<int> IrrFactor::exponents() const {
  std::vector<int> e;
  switch (family) {
    case 'A':
      for (int i = 1; i <= rank; ++i) e.push_back(i);
      break;
    case 'B':
      for (int i = 1; i <= rank; ++i) e.push_back(2 * i - 1);
      break;
    case 'D':
      for (int i = 1; i < rank; ++i) e.push_back(2 * i - 1);
      e.push_back(rank - 1);
      break;
    case 'E':
      if (rank == 6) e = {1, 4, 5, 7, 8, 11};
      if (rank == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (rank == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case 'F': e = {1, 5, 7, 11}; break;
    case 'H':
      if (rank == 3) e = {1, 5, 9};
      if (rank == 4) e = {1, 11, 19, 29};
      break;
    case 'I': e = {1, bond - 1}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<int> IrrFactor::degrees() const {
  auto e = exponents();
  for (auto& x : e) ++x;
  return e;
}

Int IrrFactor::order() const {
  Int r = 1;
  for (int d : degrees()) r *= d;
  return r;
}

int IrrFactor::coxeterNumber() const { return exponents().back() + 1; }

int IrrFactor::numReflections() const { return rank * coxeterNumber() / 2; }

int IrrFactor::maxBond() const {
  switch (family) {
    case 'A': return rank >= 2 ? 3 : 2;
    case 'B': return 4;
    case 'D':
    case 'E': return 3;
    case 'F': return 4;
    case 'H': return 5;
    case 'I': return bond;
  }
  return 2;
}

std::vector<std::vector<int>> IrrFactor::coxeterMatrix() const {
  int n = rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto bondAt = [&](int i, int j, int v) { m[i][j] = m[j][i] = v; };
  switch (family) {
    case 'A':
    case 'B':
    case 'H':
    case 'F':
      for (int i = 0; i + 1 < n; ++i) bondAt(i, i + 1, 3);
      if (family == 'B') bondAt(n - 2, n - 1, 4);
      if (family == 'F') bondAt(1, 2, 4);
      if (family == 'H') bondAt(0, 1, 5);
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) bondAt(i, i + 1, 3);
      bondAt(n - 3, n - 1, 3);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7-8) with node 2 attached to node 4.
      bondAt(0, 2, 3);
      for (int i = 2; i + 1 < n; ++i) bondAt(i, i + 1, 3);
      bondAt(1, 3, 3);
      break;
    case 'I': bondAt(0, 1, bond); break;
  }
  return m;
}

std::vector<Rational> IrrFactor::norms() const {
  std::vector<Rational> v(rank, Rational(2));
  if (family == 'B') v[rank - 1] = 1;
  if (family == 'F') v[2] = v[3] = 1;
  return v;
}

CoxeterType CoxeterType::parse(const std::string& text) {
  CoxeterType ct;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse Coxeter type \"" + text + "\": " + why);
  };
  while (pos < text.size()) {
    char fam = text[pos];
    IrrFactor f;
    if (fam == 'I') {
      if (text.compare(pos, 3, "I2(") != 0) fail("expected I2(m)");
      pos += 3;
      size_t close = text.find(')', pos);
      if (close == std::string::npos) fail("missing ')'");
      int m = 0;
      for (size_t i = pos; i < close; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("bad I2 parameter");
        m = m * 10 + (text[i] - '0');
      }
      if (m < 3) fail("I2(m) requires m >= 3");
      f = {'I', 2, m};
      pos = close + 1;
    } else {
      if (std::string("ABDEFGH").find(fam) == std::string::npos) fail("unknown family");
      ++pos;
      int r = 0;
      size_t digits = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        r = r * 10 + (text[pos] - '0');
        ++pos;
        ++digits;
      }
      if (digits == 0) fail("missing rank");
      bool ok = false;
      switch (fam) {
        case 'A': ok = r >= 1; break;
        case 'B': ok = r >= 2; break;
        case 'D': ok = r >= 4; break;
        case 'E': ok = r >= 6 && r <= 8; break;
        case 'F': ok = r == 4; break;
        case 'G': ok = r == 2; break;
        case 'H': ok = r == 3 || r == 4; break;
      }
      if (!ok) fail("rank out of range for family");
      if (fam == 'G')
        f = {'I', 2, 6};
      else
        f = {fam, r, 0};
    }
    ct.factors.push_back(f);
    if (pos < text.size()) {
      if (text[pos] != 'x') fail("expected 'x' between factors");
      ++pos;
      if (pos == text.size()) fail("trailing 'x'");
    }
  }
  if (ct.factors.empty()) fail("empty type");
  return ct;
}

std::string CoxeterType::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out << "x";
    out << factors[i].str();
  }
  return out.str();
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

Int CoxeterType::order() const {
  Int r = 1;
  for (const auto& f : factors) r *= f.order();
  return r;
}

std::vector<int> CoxeterType::exponents() const {
  std::vector<int> e;
  for (const auto& f : factors) {
    auto fe = f.exponents();
    e.insert(e.end(), fe.begin(), fe.end());
  }
  std::sort(e.begin(), e.end());
  return e;
}

int CoxeterType::coxeterNumber() const {
  if (!irreducible()) throw std::logic_error("coxeterNumber: reducible type");
  return factors[0].coxeterNumber();
}

bool CoxeterType::heavy() const {
  if (rank() > 5) return true;
  for (const auto& f : factors) {
    if (f.family == 'H' && f.rank == 4) return true;
    if (f.family == 'E') return true;
  }
  return false;
}

UniPoly CoxeterType::catalanPoly() const {
  UniPoly p = UniPoly::constant(Var::m, 1);
  for (const auto& f : factors) {
    int h = f.coxeterNumber();
    for (int e : f.exponents()) p *= UniPoly(Var::m, {Rational(e + 1), Rational(h)});
    p.scale(Rational(1) / Rational(f.order()));
  }
  return p;
}

UniPoly CoxeterType::catalanPlusPoly() const {
  UniPoly p = UniPoly::constant(Var::m, 1);
  for (const auto& f : factors) {
    int h = f.coxeterNumber();
    for (int e : f.exponents()) p *= UniPoly(Var::m, {Rational(e - 1), Rational(h)});
    p.scale(Rational(1) / Rational(f.order()));
  }
  return p;
}

namespace {

IrrFactor classifyComponent(const std::vector<std::vector<int>>& m, const std::vector<int>& vs) {
  int k = int(vs.size());
  auto bond = [&](int a, int b) { return m[vs[a]][vs[b]]; };
  if (k == 1) return {'A', 1, 0};
  if (k == 2) {
    int b = bond(0, 1);
    if (b == 3) return {'A', 2, 0};
    if (b == 4) return {'B', 2, 0};
    return {'I', 2, b};
  }
  std::vector<int> deg(k, 0);
  std::vector<int> labels;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (bond(i, j) > 2) {
        ++deg[i];
        ++deg[j];
        labels.push_back(bond(i, j));
      }
  int edges = int(labels.size());
  if (edges != k - 1) throw std::invalid_argument("classify: diagram is not a tree");
  int branch = -1;
  for (int i = 0; i < k; ++i) {
    if (deg[i] > 3) throw std::invalid_argument("classify: vertex degree > 3");
    if (deg[i] == 3) {
      if (branch >= 0) throw std::invalid_argument("classify: two branch vertices");
      branch = i;
    }
  }
  int big = 0, nbig = 0;
  for (int l : labels)
    if (l > 3) {
      big = l;
      ++nbig;
    }
  if (branch < 0) {
    // Path. Locate its bonds relative to the ends.
    if (nbig == 0) return {'A', k, 0};
    if (nbig > 1) throw std::invalid_argument("classify: path with two marked bonds");
    // Find path order by walking from a degree-1 vertex.
    std::vector<int> order;
    int prev = -1, cur = -1;
    for (int i = 0; i < k; ++i)
      if (deg[i] == 1) {
        cur = i;
        break;
      }
    while (cur >= 0) {
      order.push_back(cur);
      int next = -1;
      for (int j = 0; j < k; ++j)
        if (j != prev && j != cur && bond(cur, j) > 2) next = j;
      prev = cur;
      cur = next;
    }
    int bpos = -1;
    for (int i = 0; i + 1 < k; ++i)
      if (bond(order[i], order[i + 1]) > 3) bpos = i;
    bool atEnd = (bpos == 0 || bpos == k - 2);
    if (big == 4 && atEnd) return {'B', k, 0};
    if (big == 4 && k == 4 && bpos == 1) return {'F', 4, 0};
    if (big == 5 && atEnd && (k == 3 || k == 4)) return {'H', k, 0};
    throw std::invalid_argument("classify: unrecognized marked path");
  }
  // Branch vertex: only simply laced trees remain.
  if (nbig > 0) throw std::invalid_argument("classify: marked bond in branched diagram");
  std::vector<int> arms;
  for (int j = 0; j < k; ++j) {
    if (bond(branch, j) <= 2 || j == branch) continue;
    int len = 1, prev = branch, cur = j;
    while (true) {
      int next = -1;
      for (int l = 0; l < k; ++l)
        if (l != prev && l != cur && bond(cur, l) > 2) next = l;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::invalid_argument("classify: bad branch");
  if (arms[0] == 1 && arms[1] == 1) return {'D', k, 0};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', k, 0};
  throw std::invalid_argument("classify: diagram outside the finite families");
}

}  // namespace

CoxeterType classifyCoxeterMatrix(const std::vector<std::vector<int>>& m) {
  int n = int(m.size());
  std::vector<int> comp(n, -1);
  CoxeterType ct;
  std::vector<IrrFactor> fs;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s}, vs;
    comp[s] = s;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      vs.push_back(v);
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && m[v][j] > 2) {
          comp[j] = s;
          stack.push_back(j);
        }
    }
    std::sort(vs.begin(), vs.end());
    fs.push_back(classifyComponent(m, vs));
  }
  std::sort(fs.begin(), fs.end());
  ct.factors = fs;
  return ct;
}

}  // namespace coxcat
