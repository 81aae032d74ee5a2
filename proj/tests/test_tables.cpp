#include "coxcat/tables.hpp"
#include "coxcat/verify.hpp"

#include "doctest.h"
#include "json.hpp"

using namespace coxcat;

TEST_CASE("table schema and spot values") {
  GroupContext ctx("A2", false);
  GroupTables t = buildTables(ctx, 1);
  CHECK(t.facets == 5);
  CHECK(t.positive_facets == 2);
  CHECK(t.f_vector == std::vector<Int>{1, 5, 5});
  CHECK(t.h_vector == std::vector<Int>{1, 3, 1});
  REQUIRE(t.orbits.size() == 3);
  // dim-0 row first: the Coxeter class with gamma = 1.
  CHECK(t.orbits[0].dim == 0);
  CHECK(t.orbits[0].gamma == 1);
  CHECK(t.orbits[0].kappa == 1);

  auto doc = nlohmann::json::parse(toJson({t}));
  CHECK(doc["schema"] == 1);
  CHECK(doc["group"] == "A2");
  CHECK(doc["m"] == 1);
  CHECK(doc["facets"] == 5);
  CHECK(doc["positive_facets"] == 2);
  REQUIRE(doc["orbits"].size() == 3);
  for (const char* field : {"label", "dim", "coxeter_type", "os_exponents", "nu",
                            "normalizer_index", "kappa", "kappa_plus", "gamma", "gamma_plus",
                            "phi_coeffs"})
    CHECK(doc["orbits"][0].contains(field));

  GroupContext b2("B2", false);
  CHECK(buildTables(b2, 2).facets == 15);
}

TEST_CASE("output is deterministic across runs") {
  std::string a, b;
  {
    GroupContext ctx("B3", false);
    a = toJson({buildTables(ctx, 2)});
  }
  {
    GroupContext ctx("B3", false);
    b = toJson({buildTables(ctx, 2)});
  }
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("csv flattens one orbit per row") {
  GroupContext ctx("A2", false);
  std::string csv = toCsv({buildTables(ctx, 1)});
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 4);  // header + 3 orbits
  CHECK(csv.find("group,m,label,dim") == 0);
}

TEST_CASE("combined product tables match the direct computation") {
  GroupContext direct("A2xA1", false);
  GroupContext a2("A2", false), a1("A1", false);
  for (int m = 1; m <= 2; ++m) {
    GroupTables lhs = buildTables(direct, m);
    GroupTables rhs = combineTables(buildTables(a2, m), buildTables(a1, m));
    CHECK(lhs.facets == rhs.facets);
    CHECK(lhs.positive_facets == rhs.positive_facets);
    CHECK(lhs.f_vector == rhs.f_vector);
    CHECK(lhs.h_vector == rhs.h_vector);
    REQUIRE(lhs.orbits.size() == rhs.orbits.size());
    // Rows are keyed by (dim, invariants); compare as multisets of the
    // numeric content since the label conventions differ.
    auto key = [](const OrbitRow& r) {
      std::ostringstream o;
      o << r.dim << "|" << r.nu << "|" << r.normalizer_index << "|" << r.kappa << "|"
        << r.kappa_plus << "|" << r.gamma << "|" << r.gamma_plus << "|";
      for (const Int& c : r.phi_coeffs) o << c << ",";
      for (long e : r.os_exponents) o << e << ";";
      return o.str();
    };
    std::multiset<std::string> ls, rs;
    for (const auto& r : lhs.orbits) ls.insert(key(r));
    for (const auto& r : rhs.orbits) rs.insert(key(r));
    CHECK(ls == rs);
  }
}

TEST_CASE("verification harness reports and fault injection") {
  GroupContext ctx("A2", false);
  VerifyOptions opt;
  opt.mValues = {1};
  auto results = runVerification(ctx, opt);
  CHECK(results.size() > 30);
  for (const auto& c : results) CHECK(c.pass);

  VerifyOptions bad = opt;
  bad.injectFault = "kappa";
  GroupContext ctx2("A2", false);
  auto failing = runVerification(ctx2, bad);
  int failures = 0;
  for (const auto& c : failing)
    if (!c.pass) ++failures;
  CHECK(failures > 0);
  // The failure carries a counterexample payload.
  bool sawDetail = false;
  for (const auto& c : failing)
    if (!c.pass && !c.detail.empty()) sawDetail = true;
  CHECK(sawDetail);
}

TEST_CASE("suite filtering") {
  GroupContext ctx("A2", false);
  VerifyOptions opt;
  opt.mValues = {1};
  opt.suites = {"matrices"};
  for (const auto& c : runVerification(ctx, opt)) CHECK(c.suite == "matrices");
}

TEST_CASE("heavy tier gating") {
  CHECK_THROWS(GroupContext("H4", false));
  CHECK_THROWS(GroupContext("E6", false));
  CHECK_NOTHROW(GroupContext("I2(12)", false));
}
