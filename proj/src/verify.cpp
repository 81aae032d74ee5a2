#include "coxcat/verify.hpp"

#include <sstream>

namespace coxcat {

const std::vector<std::string> kAllSuites = {"flats",    "kreweras",       "faces",
                                             "matrices", "bijection",      "factorizations",
                                             "characters", "laplacian"};

namespace {

struct Reporter {
  std::vector<CheckResult>& out;
  std::string suite, group;

  void add(const std::string& name, int m, bool pass, const std::string& detail = "") {
    out.push_back({suite, name, group, m, pass, detail});
  }
};

std::string vecDetail(const std::string& what, const std::vector<Int>& got,
                      const std::vector<Rational>& expect) {
  std::ostringstream o;
  o << what << ": got [";
  for (size_t i = 0; i < got.size(); ++i) o << (i ? " " : "") << got[i];
  o << "] expected [";
  for (size_t i = 0; i < expect.size(); ++i) o << (i ? " " : "") << expect[i];
  o << "]";
  return o.str();
}

void suiteFlats(GroupContext& ctx, Reporter r) {
  const FlatTable& f = ctx.flats;
  long total = 0;
  for (int k = 0; k < f.numOrbits(); ++k) total += f.orbitSize(k);
  r.add("orbit sizes partition the intersection lattice", 0, total == f.numFlats());
  bool split = true;
  std::string detail;
  for (int k = 0; k < f.numOrbits() && split; ++k) {
    UniPoly rebuilt = UniPoly::constant(Var::t, 1);
    for (const Int& b : f.osExponents(k)) {
      if (b <= 0) split = false;
      rebuilt *= UniPoly(Var::t, {Rational(-b), Rational(1)});
    }
    if (rebuilt != f.charPoly(k)) {
      split = false;
      detail = "orbit " + f.label(k);
    }
  }
  r.add("characteristic polynomials split over positive integers", 0, split, detail);
  r.add("normalizer index from nu and exponents", 0, f.factorNuCheck());
  r.add("region count equals nu times normalizer index", 0, f.regionCountCheck());
  r.add("Shephard-Todd fixed-space distribution", 0, f.shephardToddCheck());

  auto table = ctx.sys.type().exponents();
  auto computed = f.exponents();
  bool expOk = table.size() == computed.size();
  for (size_t i = 0; expOk && i < table.size(); ++i) expOk = Int(table[i]) == computed[i];
  r.add("exponents match the classical tables", 0, expOk);

  if (ctx.full.irreducible()) {
    // Level equivalence: (mh+1+e) divides the f-polynomial of dimension k
    // iff e is an OS exponent of every orbit of dimension >= k.
    int h = ctx.full.coxeterNumber();
    int n = ctx.full.rank();
    bool ok = true;
    std::vector<UniPoly> fpoly(n + 1, UniPoly(Var::m));
    for (int k = 0; k < f.numOrbits(); ++k) fpoly[f.orbitDim(k)] += f.gammaClosedPoly(k);
    for (const Int& e : f.exponents()) {
      for (int k = 1; k <= n; ++k) {
        bool divides =
            fpoly[k].divisibleBy(UniPoly(Var::m, {Rational(1 + e), Rational(h)}));
        bool everywhere = true;
        for (int orb = 0; orb < f.numOrbits(); ++orb) {
          if (f.orbitDim(orb) < k) continue;
          const auto& os = f.osExponents(orb);
          if (std::find(os.begin(), os.end(), e) == os.end()) everywhere = false;
        }
        if (divides != everywhere) ok = false;
      }
    }
    r.add("exponent levels match Orlik-Solomon data", 0, ok);
  }
}

void suiteKreweras(GroupContext& ctx, Reporter r, const VerifyOptions& opt) {
  const FlatTable& f = ctx.flats;
  for (int m : opt.mValues) {
    auto kappa = ctx.nc.kappaCensus(m);
    auto kappaP = ctx.nc.kappaPlusCensus(m);
    if (opt.injectFault == "kappa" && !kappa.empty()) kappa[0] += 1;
    bool ok = true, okP = true, okPoly = true;
    std::string detail, detailP;
    std::vector<Rational> expect(f.numOrbits()), expectP(f.numOrbits());
    for (int k = 0; k < f.numOrbits(); ++k) {
      expect[k] = f.kappaClosedPoly(k).eval(m);
      expectP[k] = f.kappaPlusClosedPoly(k).eval(m);
      if (Rational(kappa[k]) != expect[k]) ok = false;
      if (Rational(kappaP[k]) != expectP[k]) okP = false;
      if (Rational(kappa[k]) != ctx.nc.kappaPoly(k).eval(m)) okPoly = false;
    }
    if (!ok) detail = vecDetail("kappa", kappa, expect);
    if (!okP) detailP = vecDetail("kappa+", kappaP, expectP);
    r.add("kappa census equals p(mh+1)/[N:W]", m, ok, detail);
    r.add("kappa+ census equals p(mh-1)/[N:W]", m, okP, detailP);
    r.add("kappa census equals the parabolic Fuss-Catalan sum", m, okPoly);

    auto nar = ctx.nc.narayanaCensus(m);
    bool narOk = true;
    int n = ctx.full.rank();
    for (int k = 0; k <= n; ++k) {
      Int sum = 0;
      for (int orb = 0; orb < f.numOrbits(); ++orb)
        if (f.orbitDim(orb) == n - k) sum += kappa[orb];
      if (sum != nar[k]) narOk = false;
    }
    r.add("Narayana numbers are kappa column sums", m, narOk);
  }
  r.add("boolean intervals in the refined orders", 0, ctx.nc.booleanIntervalCheck());
  r.add("unique middle element between comparable pairs", 0, ctx.nc.uniqueMiddleCheck());
  r.add("Kreweras complement is an involutive anti-automorphism", 0, ctx.nc.krewerasCheck());
  UniPoly lhs = ctx.sys.type().catalanPoly().negateVariable();
  UniPoly rhs =
      ctx.sys.type().catalanPlusPoly().compose(UniPoly(Var::m, {Rational(-1), Rational(1)}));
  if (ctx.full.rank() % 2 != 0) rhs.scale(Rational(-1));
  r.add("Fuss-Catalan reciprocity as polynomials", 0, lhs == rhs);
}

void suiteFaces(GroupContext& ctx, Reporter r, const VerifyOptions& opt) {
  const FlatTable& f = ctx.flats;
  for (int m : opt.mValues) {
    const ClusterComplex& cc = ctx.cluster(m);
    bool faceOk = Rational(cc.facetCount()) == ctx.sys.type().catalan(m);
    r.add("facet count is the Fuss-Catalan number", m, faceOk,
          faceOk ? "" : "facets " + cc.facetCount().str());
    r.add("positive facet count is the positive Fuss-Catalan number", m,
          Rational(cc.positiveFacetCount()) == ctx.sys.type().catalanPlus(m));

    auto gamma = cc.gammaCensus();
    auto gammaP = cc.gammaPlusCensus();
    if (opt.injectFault == "gamma" && !gamma.empty()) gamma[0] += 1;
    bool ok = true, okP = true;
    std::vector<Rational> expect(f.numOrbits()), expectP(f.numOrbits());
    for (int k = 0; k < f.numOrbits(); ++k) {
      expect[k] = f.gammaClosedPoly(k).eval(m);
      expectP[k] = f.gammaPlusClosedPoly(k).eval(m);
      if (Rational(gamma[k]) != expect[k]) ok = false;
      if (Rational(gammaP[k]) != expectP[k]) okP = false;
    }
    r.add("gamma census equals (-1)^dim p(-mh-1)/[N:W]", m, ok,
          ok ? "" : vecDetail("gamma", gamma, expect));
    r.add("gamma+ census equals (-1)^dim p(-mh+1)/[N:W]", m, okP,
          okP ? "" : vecDetail("gamma+", gammaP, expectP));

    // Reciprocity between chain and face counts.
    bool rec1 = true, rec2 = true;
    const auto& kpp = ctx.kappaPlusPolys();
    for (int k = 0; k < f.numOrbits(); ++k) {
      Rational sign = f.orbitDim(k) % 2 == 0 ? 1 : -1;
      if (sign * ctx.nc.kappaPoly(k).eval(-m) != Rational(gammaP[k])) rec1 = false;
      if (sign * kpp[k].eval(-m) != Rational(gamma[k])) rec2 = false;
    }
    r.add("reciprocity: kappa at -m counts positive faces", m, rec1);
    r.add("reciprocity: kappa+ at -m counts faces", m, rec2);

    // f/h numerology.
    auto h = ClusterComplex::hFromF(cc.fVector());
    auto hp = ClusterComplex::hFromF(cc.fPlusVector());
    auto nar = ctx.nc.narayanaCensus(m);
    auto narP = ctx.nc.narayanaPlusCensus(m);
    bool hOk = true;
    int n = ctx.full.rank();
    for (int k = 0; k <= n; ++k) {
      if (h[n - k] != Rational(nar[k])) hOk = false;
      if (hp[n - k] != Rational(narP[k])) hOk = false;
    }
    r.add("h-vectors are the Fuss-Narayana numbers", m, hOk);

    r.add("face labels constant on rotation orbits", m, cc.rotationInvarianceCheck());
    r.add("rotation orbit census", m, cc.rotationOrbitCheck());
    r.add("positive fibers are positive Fuss-Catalan numbers", m, cc.productFiberCheck());
    r.add("the complex is pure of full dimension", m, cc.purityCheck());
    if (ctx.full.irreducible())
      r.add("face census recursion over maximal parabolics", m,
            gammaRecursionCheck(ctx.full, f, m));
    else
      r.add("face census is the product of the factor censuses", m,
            gammaReducibleCheck(ctx.full, f, m));
  }
}

void suiteMatrices(GroupContext& ctx, Reporter r, const VerifyOptions& opt) {
  const ThetaMatrices& tm = ctx.tm;
  int K = ctx.flats.numOrbits();
  std::vector<std::vector<Int>> I(K, std::vector<Int>(K, Int(0)));
  for (int i = 0; i < K; ++i) I[i][i] = 1;
  auto DN = tm.scaledByD(tm.N, true);
  r.add("(DN)^2 = I", 0, ThetaMatrices::mul(DN, DN) == I);
  r.add("RN = Q", 0, ThetaMatrices::mul(tm.R, tm.N) == tm.Q);
  auto conj = ThetaMatrices::mul(ThetaMatrices::mul(DN, tm.Q), DN);
  r.add("Q^{-1} = (DN) Q (DN)", 0, ThetaMatrices::mul(conj, tm.Q) == I);
  r.add("R = Q D N D", 0,
        tm.R == ThetaMatrices::mul(tm.Q, tm.scaledByD(tm.scaledByD(tm.N, true), false)));
  bool tri = true;
  for (int i = 0; i < K; ++i) {
    if (tm.Q[i][i] != 1 || tm.R[i][i] != 1 || tm.N[i][i] != 1) tri = false;
    for (int j = i + 1; j < K; ++j)
      if (tm.Q[i][j] != 0 || tm.R[i][j] != 0 || tm.N[i][j] != 0) tri = false;
  }
  r.add("Q, R, N lower unitriangular in the dimension order", 0, tri);
  for (int m : opt.mValues) {
    auto u = tm.parkVector(m);
    if (opt.injectFault == "parkvec" && !u.empty()) u[0] += 1;
    r.add("Q^m U reproduces the kappa census", m, u == ctx.nc.kappaCensus(m));
    r.add("Q^{m-1} R U reproduces the kappa+ census", m,
          tm.parkPrimeVector(m) == ctx.nc.kappaPlusCensus(m));
  }
}

void suiteBijection(GroupContext& ctx, Reporter r, const VerifyOptions& opt) {
  for (int m : opt.mValues) {
    const ClusterComplex& cc = ctx.cluster(m);
    FaceChainBijection bij(cc, ctx.nc);
    r.add("face-chain bijection roundtrips with labels preserved", m, bij.roundtripCheck());
    auto gamma = cc.gammaCensus();
    auto gammaP = cc.gammaPlusCensus();
    auto kappa = ctx.nc.kappaCensus(m);
    auto kappaP = ctx.nc.kappaPlusCensus(m);
    r.add("gamma = N kappa", m, gamma == ThetaMatrices::apply(ctx.tm.N, kappa));
    r.add("gamma+ = N kappa+", m, gammaP == ThetaMatrices::apply(ctx.tm.N, kappaP));
  }
}

void suiteFactorizations(GroupContext& ctx, Reporter r) {
  const FlatTable& f = ctx.flats;
  bool closed = true, atOne = true, viaGamma = true;
  std::string detail;
  for (int k = 0; k < f.numOrbits(); ++k) {
    UniPoly phi = factor::phiForOrbit(ctx.nc, k);
    if (ctx.full.irreducible()) {
      if (phi != factor::phiClosedForm(ctx.full, f, k)) {
        closed = false;
        detail = "class " + f.label(k);
      }
      int dim = f.orbitDim(k);
      Int hk = 1;
      for (int i = 0; i < dim; ++i) hk *= ctx.full.coxeterNumber();
      if (phi.eval(1) != Rational(factorial(dim) * hk) / Rational(f.normalizerIndex(k)))
        atOne = false;
      if (phi != factor::phiFromGammaPoly(f.gammaClosedPoly(k), dim)) viaGamma = false;
    }
  }
  if (ctx.full.irreducible()) {
    r.add("phi equals the Orlik-Solomon closed form", 0, closed, detail);
    r.add("phi at q=1 counts k! h^k / [N:W]", 0, atOne);
    r.add("phi from the gamma substitution", 0, viaGamma);
    r.add("phi recursion over maximal parabolics", 0,
          factor::phiRecursionCheck(ctx.full, f));
    r.add("conjugation orbits of c on reflections", 0,
          factor::coxeterConjugationOrbitCheck(ctx.full, ctx.sys.coxeter()));
  } else if (ctx.full.components.size() == 2) {
    r.add("phi product rule with binomial factor", 0,
          factor::phiProductRuleCheck(ctx.full, f));
  }
  r.add("phi independent of the standard Coxeter element", 0,
        factor::phiIndependenceOfCoxeterElement(ctx.full, f));
  r.add("right inversions of c biject onto the simples", 0,
        factor::rightInversionBijectionCheck(ctx.full, ctx.sys.coxeter()));
}

void suiteCharacters(GroupContext& ctx, Reporter r, const VerifyOptions& opt) {
  const CharacterData& ch = ctx.characters();
  r.add("parabolic table of marks is triangular", 0, ch.marksTriangularCheck());
  r.add("Psi expansion recovers the characteristic polynomials", 0, ch.psiExpansionCheck());
  r.add("Solomon identity for every standard subset", 0, ch.solomonCheck());
  {
    // Psi_{-1}(w) = (-1)^{dim Fix(w)} differs from eps(w) = (-1)^{l(w)} by
    // the global sign (-1)^n.
    auto psi = ch.psiValues(-1);
    auto eps = ch.signValues();
    Rational globalSign = ctx.full.rank() % 2 == 0 ? 1 : -1;
    bool ok = true;
    for (size_t i = 0; i < psi.size(); ++i)
      if (psi[i] != globalSign * eps[i]) ok = false;
    r.add("Psi(-1) = (-1)^n eps", 0, ok);
  }
  if (!ctx.full.simples.empty()) {
    GroupContext::SubData& sd = ctx.subset((1u << ctx.full.rank()) - 2u);
    r.add("sign commutes with induction", 0, ch.signInductionCheck(sd.characters()));
  }

  auto toRat = [](const std::vector<Int>& v) {
    std::vector<Rational> out;
    for (const Int& x : v) out.push_back(Rational(x));
    return out;
  };
  bool irr = ctx.full.irreducible();
  int h = irr ? ctx.full.coxeterNumber() : 0;
  for (int m : opt.mValues) {
    auto kappa = ctx.nc.kappaCensus(m);
    auto kappaP = ctx.nc.kappaPlusCensus(m);
    if (opt.injectFault == "park" && !kappa.empty()) kappa[0] += 1;
    auto park = ch.valuesOf(toRat(kappa));
    auto parkP = ch.valuesOf(toRat(kappaP));
    if (irr) {
      r.add("park character equals Psi(mh+1)", m, park == ch.psiValues(m * h + 1));
      r.add("prime park character equals Psi(mh-1)", m, parkP == ch.psiValues(m * h - 1));
      r.add("trivial multiplicity of park is the Fuss-Catalan number", m,
            ch.trivialMultiplicity(park) == ctx.sys.type().catalan(m));
      r.add("trivial multiplicity of prime park is the positive Fuss-Catalan number", m,
            ch.trivialMultiplicity(parkP) == ctx.sys.type().catalanPlus(m));
    }
    {
      std::vector<Rational> kappaNeg(ctx.flats.numOrbits());
      for (int k = 0; k < ctx.flats.numOrbits(); ++k)
        kappaNeg[k] = ctx.nc.kappaPoly(k).eval(-m);
      auto rhs = CharacterData::tensor(ch.psiValues(-1), ch.valuesOf(kappaNeg));
      r.add("prime park is the sign twist of park at -m", m, parkP == rhs);
    }
    {
      int rk = ctx.full.rank();
      std::vector<Rational> sum1(ch.numClasses(), Rational(0)),
          sum2(ch.numClasses(), Rational(0));
      for (uint32_t I = 0; I < (1u << rk); ++I) {
        GroupContext::SubData& sd = ctx.subset(I);
        const CharacterData& sch = sd.characters();
        auto subPark = sch.valuesOf(toRat(sd.nc.kappaCensus(m)));
        auto subParkP = sch.valuesOf(toRat(sd.nc.kappaPlusCensus(m)));
        auto ind1 = ch.induceValues(sch, subParkP);
        auto ind2 = ch.induceValues(sch, subPark);
        Rational s = (rk - __builtin_popcount(I)) % 2 == 0 ? 1 : -1;
        for (int y = 0; y < ch.numClasses(); ++y) {
          sum1[y] += ind1[y];
          sum2[y] += s * ind2[y];
        }
      }
      r.add("park is the sum of induced prime parks", m, park == sum1);
      r.add("prime park is the signed sum of induced parks", m, parkP == sum2);
    }
  }
}

void suiteLaplacian(GroupContext& ctx, Reporter r) {
  const FlatTable& f = ctx.flats;
  bool rec = true;
  for (int x = 0; x < f.numFlats() && rec; ++x)
    for (int z = 0; z < f.numFlats() && rec; ++z)
      if (f.leq(z, x))
        if (!f.laplacianRecursionCheck(x, z)) rec = false;
  r.add("restricted Coxeter-number recursion on nested flats", 0, rec);
  if (ctx.full.irreducible()) {
    bool reg = true;
    for (int z = 0; z < f.numFlats() && reg; ++z)
      if (!f.regionsIdentityCheck(z)) reg = false;
    r.add("regions identity over restricted arrangements", 0, reg);
  }
}

}  // namespace

std::vector<CheckResult> runVerification(GroupContext& ctx, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto wants = [&](const std::string& s) {
    return opt.suites.count("all") || opt.suites.count(s);
  };
  std::string group = ctx.sys.type().str();
  if (wants("flats")) suiteFlats(ctx, {out, "flats", group});
  if (wants("kreweras")) suiteKreweras(ctx, {out, "kreweras", group}, opt);
  if (wants("faces")) suiteFaces(ctx, {out, "faces", group}, opt);
  if (wants("matrices")) suiteMatrices(ctx, {out, "matrices", group}, opt);
  if (wants("bijection")) suiteBijection(ctx, {out, "bijection", group}, opt);
  if (wants("factorizations")) suiteFactorizations(ctx, {out, "factorizations", group});
  if (wants("characters")) suiteCharacters(ctx, {out, "characters", group}, opt);
  if (wants("laplacian")) suiteLaplacian(ctx, {out, "laplacian", group});
  return out;
}

}  // namespace coxcat
