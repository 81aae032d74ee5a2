// coxcat: exact tables and identity verification for finite reflection
// groups, their noncrossing partition lattices and generalized cluster
// complexes.
//
//   coxcat info   --type F4
//   coxcat tables --type B2 --m 2 --format json
//   coxcat verify --type A2 --type B3 --suite faces --suite matrices
//
// Exit codes: 0 success, 1 identity failure, 2 usage/build errors.

#include "coxcat/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <future>
#include <iostream>

using namespace coxcat;

namespace {

struct CommonOpts {
  std::vector<std::string> types;
  std::vector<int> mValues;
  std::vector<std::string> suites;
  std::string format = "text";
  std::string out;
  std::string tier;
  std::string injectFault;
};

bool heavyAllowed(const CommonOpts& o) {
  if (o.tier == "heavy") return true;
  const char* env = std::getenv("COXCAT_TIER");
  return env && std::string(env) == "heavy";
}

void emit(const CommonOpts& o, const std::string& payload) {
  if (o.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot open output file " + o.out);
  f << payload;
}

int cmdInfo(const CommonOpts& o) {
  CoxeterType t = CoxeterType::parse(o.types.at(0));
  if (t.heavy() && !heavyAllowed(o))
    throw std::runtime_error("group " + t.str() + " requires --tier heavy");
  CoxeterSystem sys(t);
  std::vector<int> exps = t.exponents();
  std::vector<std::string> splus, sminus;
  for (int j = 0; j < sys.rank(); ++j)
    (sys.color(j) == 0 ? splus : sminus).push_back("s" + std::to_string(j + 1));

  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["group"] = t.str();
    doc["rank"] = t.rank();
    doc["order"] = t.order().str();
    doc["num_reflections"] = sys.numPositive();
    doc["num_roots"] = sys.numRoots();
    doc["exponents"] = exps;
    if (t.irreducible()) doc["coxeter_number"] = t.coxeterNumber();
    doc["field"] = sys.field() ? sys.field()->name : "Q";
    doc["bipartition"] = {{"plus", splus}, {"minus", sminus}};
    emit(o, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "group " << t.str() << "\n";
    out << "  rank " << t.rank() << ", order " << t.order() << ", reflections "
        << sys.numPositive() << ", roots " << sys.numRoots() << "\n";
    if (t.irreducible()) out << "  Coxeter number " << t.coxeterNumber() << "\n";
    out << "  exponents:";
    for (int e : exps) out << " " << e;
    out << "\n  field: " << (sys.field() ? sys.field()->name : "Q") << "\n";
    out << "  bipartition: S+ = {";
    for (size_t i = 0; i < splus.size(); ++i) out << (i ? " " : "") << splus[i];
    out << "}, S- = {";
    for (size_t i = 0; i < sminus.size(); ++i) out << (i ? " " : "") << sminus[i];
    out << "}\n";
    emit(o, out.str());
  }
  return 0;
}

std::vector<GroupTables> tablesFor(const std::string& type, const std::vector<int>& ms,
                                   bool heavy) {
  try {
    GroupContext ctx(type, heavy);
    std::vector<GroupTables> out;
    for (int m : ms) out.push_back(buildTables(ctx, m));
    return out;
  } catch (const std::invalid_argument& e) {
    // Products over incompatible fields: assemble tables per factor and
    // combine combinatorially.
    if (std::string(e.what()).find("incompatible algebraic fields") == std::string::npos) throw;
    CoxeterType t = CoxeterType::parse(type);
    std::vector<GroupTables> out;
    for (int m : ms) {
      std::vector<GroupTables> parts;
      for (const auto& f : t.factors) {
        GroupContext ctx(f.str(), heavy);
        parts.push_back(buildTables(ctx, m));
      }
      GroupTables acc = parts[0];
      for (size_t i = 1; i < parts.size(); ++i) acc = combineTables(acc, parts[i]);
      out.push_back(std::move(acc));
    }
    return out;
  }
}

int cmdTables(const CommonOpts& o) {
  std::vector<int> ms = o.mValues.empty() ? std::vector<int>{1} : o.mValues;
  std::vector<GroupTables> all;
  for (const std::string& type : o.types) {
    CoxeterType t = CoxeterType::parse(type);
    if (t.heavy() && !heavyAllowed(o))
      throw std::runtime_error("group " + t.str() + " requires --tier heavy");
    auto tables = tablesFor(type, ms, heavyAllowed(o));
    all.insert(all.end(), tables.begin(), tables.end());
  }
  if (o.format == "json")
    emit(o, toJson(all));
  else if (o.format == "csv")
    emit(o, toCsv(all));
  else
    emit(o, toText(all));
  return 0;
}

int cmdVerify(const CommonOpts& o) {
  VerifyOptions vo;
  if (!o.mValues.empty()) vo.mValues = o.mValues;
  if (!o.suites.empty()) vo.suites = std::set<std::string>(o.suites.begin(), o.suites.end());
  vo.injectFault = o.injectFault;
  for (const std::string& s : vo.suites)
    if (s != "all" && std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
      throw CLI::ValidationError("unknown suite " + s);

  bool heavy = heavyAllowed(o);
  for (const std::string& type : o.types) {
    CoxeterType t = CoxeterType::parse(type);
    if (t.heavy() && !heavy)
      throw std::runtime_error("group " + t.str() + " requires --tier heavy");
  }

  // Independent group jobs fan out; the merged report keeps request order.
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const std::string& type : o.types)
    jobs.push_back(std::async(std::launch::async, [type, vo, heavy]() {
      GroupContext ctx(type, heavy);
      return runVerification(ctx, vo);
    }));
  std::vector<CheckResult> results;
  for (auto& j : jobs) {
    auto part = j.get();
    results.insert(results.end(), part.begin(), part.end());
  }

  int failures = 0;
  for (const CheckResult& c : results)
    if (!c.pass) ++failures;

  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : results) {
      nlohmann::ordered_json e;
      e["group"] = c.group;
      e["suite"] = c.suite;
      e["name"] = c.name;
      if (c.m > 0) e["m"] = c.m;
      e["pass"] = c.pass;
      if (!c.detail.empty()) e["detail"] = c.detail;
      doc["checks"].push_back(e);
    }
    doc["failures"] = failures;
    emit(o, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const CheckResult& c : results) {
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.group << " " << c.suite << ": " << c.name;
      if (c.m > 0) out << " (m=" << c.m << ")";
      if (!c.pass && !c.detail.empty()) out << "  -- " << c.detail;
      out << "\n";
    }
    emit(o, out.str());
  }
  std::cerr << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Coxeter-Catalan tables and verification"};
  app.require_subcommand(1);
  CommonOpts o;

  auto addCommon = [&](CLI::App* cmd, bool multiType) {
    auto* t = cmd->add_option("--type", o.types, "Coxeter type, e.g. A2, B3, I2(7), A2xA1");
    t->required();
    if (!multiType) t->expected(1);
    cmd->add_option("--m", o.mValues, "Fuss parameter (repeatable)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out, "Write output to a file instead of stdout");
    cmd->add_option("--tier", o.tier, "Set to 'heavy' to allow large groups")
        ->check(CLI::IsMember({"default", "heavy"}));
  };

  CLI::App* info = app.add_subcommand("info", "Basic group data");
  addCommon(info, false);
  CLI::App* tables = app.add_subcommand("tables", "Refined enumeration tables");
  addCommon(tables, true);
  CLI::App* verify = app.add_subcommand("verify", "Run identity suites");
  addCommon(verify, true);
  verify->add_option("--suite", o.suites, "Suites to run (repeatable; default all)");
  verify->add_option("--inject-fault", o.injectFault, "Corrupt one value (harness self-test)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmdInfo(o);
    if (tables->parsed()) return cmdTables(o);
    if (verify->parsed()) return cmdVerify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
