#include "coxcat/cluster.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace coxcat {

ClusterComplex::ClusterComplex(const SubSystem& G, const FlatTable& flats, int m)
    : G_(&G), flats_(&flats), m_(m) {
  if (m < 1) throw std::invalid_argument("ClusterComplex: m must be positive");
  buildVertices();
  buildRotation();
  buildCompatibility();
  enumerateFaces();
}

namespace {

/// Steinberg indexing of the almost-positive roots of one irreducible
/// component: starts with the negatives of the S- simples, then the S+
/// simples, and extends by alpha_{i+n} = c(alpha_i). The tail condition
/// (the final n entries are Delta- followed by -Delta+) is asserted.
std::vector<int> steinbergSequence(const SubSystem& G, int comp) {
  const CoxeterSystem& W = *G.W;
  const std::vector<int>& simples = G.components[comp];
  int n = int(simples.size());
  int h = G.componentCoxeterNumber(comp);
  std::vector<int> seq;
  for (int s : simples)
    if (W.color(s) == 1) seq.push_back(W.negate(W.simpleRoot(s)));
  int r = int(seq.size());
  for (int s : simples)
    if (W.color(s) == 0) seq.push_back(W.simpleRoot(s));
  int total = n * h / 2 + n;
  for (int i = 0; int(seq.size()) < total; ++i) seq.push_back(W.act(G.c, seq[i]));

  std::set<int> tailMinus(seq.begin() + n * h / 2, seq.begin() + n * h / 2 + r);
  std::set<int> tailNegPlus(seq.begin() + n * h / 2 + r, seq.end());
  std::set<int> expectMinus, expectNegPlus;
  for (int s : simples) {
    if (W.color(s) == 1) expectMinus.insert(W.simpleRoot(s));
    if (W.color(s) == 0) expectNegPlus.insert(W.negate(W.simpleRoot(s)));
  }
  if (tailMinus != expectMinus || tailNegPlus != expectNegPlus)
    throw std::logic_error("Steinberg sequence tail condition failed");
  std::set<int> all(seq.begin(), seq.end());
  if (int(all.size()) != total) throw std::logic_error("Steinberg sequence has repeats");
  return seq;
}

}  // namespace

void ClusterComplex::buildVertices() {
  const CoxeterSystem& W = *G_->W;
  int C = int(G_->components.size());
  std::vector<std::vector<int>> seqs(C);
  std::vector<int> rs(C);
  for (int c = 0; c < C; ++c) {
    seqs[c] = steinbergSequence(*G_, c);
    int r = 0;
    for (int s : G_->components[c])
      if (W.color(s) == 1) ++r;
    rs[c] = r;
  }
  // Three blocks of the colored order: negatives of S- simples (color 1),
  // positive roots with colors m..1, negatives of S+ simples (color 1).
  for (int c = 0; c < C; ++c)
    for (int i = 0; i < rs[c]; ++i) verts_.push_back({seqs[c][i], 1});
  for (int color = m_; color >= 1; --color)
    for (int c = 0; c < C; ++c) {
      int n = int(G_->components[c].size());
      int len = n * G_->componentCoxeterNumber(c) / 2;
      for (int i = rs[c]; i < rs[c] + len; ++i) verts_.push_back({seqs[c][i], color});
    }
  for (int c = 0; c < C; ++c) {
    int n = int(G_->components[c].size());
    int len = n * G_->componentCoxeterNumber(c) / 2;
    for (int i = len + rs[c]; i < len + n; ++i) verts_.push_back({seqs[c][i], 1});
  }
}

int ClusterComplex::vertexIndex(const ColoredRoot& cr) const {
  for (int v = 0; v < numVertices(); ++v)
    if (verts_[v] == cr) return v;
  return -1;
}

void ClusterComplex::buildRotation() {
  const CoxeterSystem& W = *G_->W;
  rotate_.assign(numVertices(), -1);
  for (int v = 0; v < numVertices(); ++v) {
    const ColoredRoot& cr = verts_[v];
    ColoredRoot img{-1, 1};
    if (W.isPositive(cr.root) && cr.color < m_) {
      img = {cr.root, cr.color + 1};
    } else if (W.isPositive(cr.root)) {
      // color m: negated for the S- simples, rotated by c otherwise
      int s = W.simpleIndexOfRoot(cr.root);
      if (s >= 0 && W.color(s) == 1)
        img = {W.negate(cr.root), 1};
      else
        img = {W.act(G_->c, cr.root), 1};
    } else {
      int s = W.simpleIndexOfRoot(W.negate(cr.root));
      if (s < 0) throw std::logic_error("negative vertex is not a negative simple");
      if (W.color(s) == 0)
        img = {W.negate(cr.root), 1};
      else
        img = {W.act(G_->c, cr.root), 1};
    }
    int target = vertexIndex(img);
    if (target < 0) throw std::logic_error("rotation left the almost-positive roots");
    rotate_[v] = target;
  }
  std::vector<char> hit(numVertices(), 0);
  for (int v : rotate_) hit[v] = 1;
  for (char h : hit)
    if (!h) throw std::logic_error("rotation is not a bijection");

  stepsToNegative_.assign(numVertices(), -1);
  int maxH = 2;
  for (size_t c = 0; c < G_->components.size(); ++c)
    maxH = std::max(maxH, G_->componentCoxeterNumber(int(c)));
  int bound = m_ * maxH + 2;
  for (int v = 0; v < numVertices(); ++v) {
    int cur = v;
    int steps = 0;
    while (W.isPositive(verts_[cur].root)) {
      cur = rotate_[cur];
      if (++steps > bound) throw std::logic_error("rotation-to-negative loop exceeded bound");
    }
    stepsToNegative_[v] = steps;
  }
}

void ClusterComplex::buildCompatibility() {
  const CoxeterSystem& W = *G_->W;
  int V = numVertices();
  compat_.assign(V, boost::dynamic_bitset<>(V));
  for (int x = 0; x < V; ++x)
    for (int y = 0; y < V; ++y) {
      if (x == y) continue;
      int a = x, b = y;
      for (int k = 0; k < stepsToNegative_[x]; ++k) {
        a = rotate_[a];
        b = rotate_[b];
      }
      int s = W.simpleIndexOfRoot(W.negate(verts_[a].root));
      const Vec& expansion = W.root(verts_[b].root);
      if (expansion[s].isZero()) compat_[x].set(y);
    }
  for (int x = 0; x < V; ++x)
    for (int y = 0; y < V; ++y)
      if (compat_[x][y] != compat_[y][x]) throw std::logic_error("compatibility not symmetric");
}

void ClusterComplex::enumerateFaces() {
  const CoxeterSystem& W = *G_->W;
  int V = numVertices();
  // Ordered clique extension, vertices taken in decreasing reflection order;
  // faces come out sorted decreasing, which is the product order.
  std::vector<int> cur;
  boost::dynamic_bitset<> all(V);
  all.set();
  std::function<void(const boost::dynamic_bitset<>&, int)> extend =
      [&](const boost::dynamic_bitset<>& allowed, int below) {
        faces_.push_back(cur);
        for (int v = below - 1; v >= 0; --v) {
          if (!allowed[v]) continue;
          cur.push_back(v);
          extend(allowed & compat_[v], v);
          cur.pop_back();
        }
      };
  extend(all, V);

  int n = G_->rank();
  faceProd_.resize(faces_.size());
  faceUnder_.resize(faces_.size());
  faceTheta_.resize(faces_.size());
  facePositive_.resize(faces_.size());
  for (size_t f = 0; f < faces_.size(); ++f) {
    ElemId p = W.identity();
    bool positive = true;
    for (int v : faces_[f]) {
      int root = verts_[v].root;
      if (!W.isPositive(root)) {
        positive = false;
        root = W.negate(root);
      }
      p = W.mul(p, W.reflection(root));
    }
    faceProd_[f] = p;
    facePositive_[f] = positive;
    faceUnder_[f] = W.mul(W.mul(G_->cPlus, p), G_->cMinus);
    faceTheta_[f] = flats_->orbitOf(faceUnder_[f]);
    if (W.reflectionLength(p) != int(faces_[f].size()))
      throw std::logic_error("face product has wrong reflection length");
    if (flats_->orbitDim(faceTheta_[f]) != int(faces_[f].size()))
      throw std::logic_error("face label dimension mismatch");
    if (int(faces_[f].size()) == n && p != G_->c)
      throw std::logic_error("facet product is not the Coxeter element");
    faceIndex_.emplace(faces_[f], int(f));
  }
}

int ClusterComplex::faceIndex(const std::vector<int>& vertsDescending) const {
  auto it = faceIndex_.find(vertsDescending);
  return it == faceIndex_.end() ? -1 : it->second;
}

std::vector<Int> ClusterComplex::gammaCensus() const {
  std::vector<Int> out(flats_->numOrbits(), Int(0));
  for (size_t f = 0; f < faces_.size(); ++f) ++out[faceTheta_[f]];
  return out;
}

std::vector<Int> ClusterComplex::gammaPlusCensus() const {
  std::vector<Int> out(flats_->numOrbits(), Int(0));
  for (size_t f = 0; f < faces_.size(); ++f)
    if (facePositive_[f]) ++out[faceTheta_[f]];
  return out;
}

std::vector<Int> ClusterComplex::fVector() const {
  std::vector<Int> out(G_->rank() + 1, Int(0));
  for (const auto& f : faces_) ++out[f.size()];
  return out;
}

std::vector<Int> ClusterComplex::fPlusVector() const {
  std::vector<Int> out(G_->rank() + 1, Int(0));
  for (size_t f = 0; f < faces_.size(); ++f)
    if (facePositive_[f]) ++out[faces_[f].size()];
  return out;
}

Int ClusterComplex::facetCount() const { return fVector()[G_->rank()]; }

Int ClusterComplex::positiveFacetCount() const { return fPlusVector()[G_->rank()]; }

std::vector<Rational> ClusterComplex::hFromF(const std::vector<Int>& f) {
  // sum f_{k} z^{n-k} with z -> z-1 gives sum h_i z^{n-i}.
  int n = int(f.size()) - 1;
  UniPoly acc(Var::z);
  UniPoly zMinus1(Var::z, {Rational(-1), Rational(1)});
  for (int k = 0; k <= n; ++k) {
    UniPoly term = UniPoly::constant(Var::z, Rational(f[k]));
    for (int i = 0; i < n - k; ++i) term *= zMinus1;
    acc += term;
  }
  std::vector<Rational> h(n + 1, Rational(0));
  for (int i = 0; i <= n; ++i) h[i] = acc.coeff(n - i);
  return h;
}

bool ClusterComplex::rotationOrbitCheck() const {
  const CoxeterSystem& W = *G_->W;
  // Longest element of the subsystem.
  ElemId w0 = G_->elems[0];
  for (ElemId w : G_->elems)
    if (W.coxeterLength(w) > W.coxeterLength(w0)) w0 = w;
  std::vector<uint32_t> compMask(G_->components.size(), 0);
  for (size_t c = 0; c < G_->components.size(); ++c)
    for (int s : G_->components[c]) compMask[c] |= 1u << s;

  std::vector<char> seen(numVertices(), 0);
  for (int v = 0; v < numVertices(); ++v) {
    if (seen[v]) continue;
    std::vector<int> orbit;
    int cur = v;
    do {
      seen[cur] = 1;
      orbit.push_back(cur);
      cur = rotate_[cur];
    } while (cur != v);
    // Component of the orbit (all its roots lie in one component).
    int comp = -1;
    const Vec& rv = W.root(verts_[v].root);
    for (size_t c = 0; c < G_->components.size(); ++c)
      for (int s : G_->components[c])
        if (!rv[s].isZero()) comp = int(c);
    int h = G_->componentCoxeterNumber(comp);
    std::vector<int> negSimples;
    for (int x : orbit)
      if (!W.isPositive(verts_[x].root))
        negSimples.push_back(W.simpleIndexOfRoot(W.negate(verts_[x].root)));
    if (int(orbit.size()) * 2 == m_ * h + 2) {
      if (negSimples.size() != 1) return false;
    } else if (int(orbit.size()) == m_ * h + 2) {
      if (negSimples.size() != 2) return false;
      // The two negative simples are exchanged by -w0 (the diagram
      // automorphism induced by the longest element).
      int img = W.negate(W.act(w0, W.simpleRoot(negSimples[0])));
      if (img != W.simpleRoot(negSimples[1])) return false;
    } else {
      return false;
    }
  }
  return true;
}

bool ClusterComplex::rotationInvarianceCheck() const {
  for (int f = 0; f < numFaces(); ++f) {
    std::vector<int> img;
    for (int v : faces_[f]) img.push_back(rotate_[v]);
    std::sort(img.rbegin(), img.rend());
    int g = faceIndex(img);
    if (g < 0) return false;  // compatibility must be rotation invariant
    if (faceTheta_[g] != faceTheta_[f]) return false;
  }
  return true;
}

bool ClusterComplex::productFiberCheck() const {
  std::map<ElemId, Int> fibers;
  for (int f = 0; f < numFaces(); ++f)
    if (facePositive_[f]) ++fibers[faceProd_[f]];
  // Every noncrossing partition appears; compare with Cat+^(m) of its type.
  for (ElemId w : G_->elems) {
    const CoxeterSystem& W = *G_->W;
    if (W.reflectionLength(w) + W.reflectionLength(W.mul(W.inverse(w), G_->c)) != G_->rank())
      continue;
    const CoxeterType& t = flats_->orbitType(flats_->orbitOf(w));
    Rational expect = t.catalanPlusPoly().eval(m_);
    auto it = fibers.find(w);
    Rational got = it == fibers.end() ? Rational(0) : Rational(it->second);
    if (got != expect) return false;
  }
  return true;
}

bool ClusterComplex::purityCheck() const {
  int V = numVertices();
  for (int f = 0; f < numFaces(); ++f) {
    boost::dynamic_bitset<> ext(V);
    ext.set();
    for (int v : faces_[f]) ext &= compat_[v];
    if (ext.none() && int(faces_[f].size()) != G_->rank()) return false;
  }
  return true;
}

bool gammaRecursionCheck(const SubSystem& full, const FlatTable& flats, int m) {
  if (!full.irreducible()) throw std::invalid_argument("recursion check needs irreducible W");
  const CoxeterSystem& W = *full.W;
  int h = full.coxeterNumber();
  ClusterComplex cc(full, flats, m);
  auto gamma = cc.gammaCensus();

  // Sum the censuses of the maximal parabolic complexes by ambient class.
  std::vector<Int> rhs(flats.numOrbits(), Int(0));
  for (int drop : full.simples) {
    std::vector<int> keep;
    for (int s : full.simples)
      if (s != drop) keep.push_back(s);
    SubSystem sub = SubSystem::standard(W, keep);
    FlatTable subFlats(sub);
    ClusterComplex subCC(sub, subFlats, m);
    for (int f = 0; f < subCC.numFaces(); ++f) ++rhs[flats.orbitOf(subCC.faceUnderline(f))];
  }
  for (int k = 0; k < flats.numOrbits(); ++k) {
    int dim = flats.orbitDim(k);
    if (dim == 0) continue;  // the recursion divides by 2k
    if (Rational(gamma[k]) != Rational(m * h + 2, 2 * dim) * Rational(rhs[k])) return false;
  }
  // Initial case: the Coxeter class always carries exactly one face class.
  return gamma[flats.topOrbit()] == 1;
}

bool gammaReducibleCheck(const SubSystem& full, const FlatTable& flats, int m) {
  const CoxeterSystem& W = *full.W;
  ClusterComplex cc(full, flats, m);
  auto gamma = cc.gammaCensus();
  auto gammaPlus = cc.gammaPlusCensus();

  // Convolve per-component censuses of underline elements.
  std::map<ElemId, Int> acc, accPlus;
  acc[W.identity()] = 1;
  accPlus[W.identity()] = 1;
  for (size_t c = 0; c < full.components.size(); ++c) {
    SubSystem comp = SubSystem::standard(W, full.components[c]);
    FlatTable compFlats(comp);
    ClusterComplex compCC(comp, compFlats, m);
    std::map<ElemId, Int> part, partPlus;
    for (int f = 0; f < compCC.numFaces(); ++f) {
      ++part[compCC.faceUnderline(f)];
      if (compCC.facePositive(f)) ++partPlus[compCC.faceUnderline(f)];
    }
    std::map<ElemId, Int> next, nextPlus;
    for (const auto& [u, cu] : acc)
      for (const auto& [v, cv] : part) next[W.mul(u, v)] += cu * cv;
    for (const auto& [u, cu] : accPlus)
      for (const auto& [v, cv] : partPlus) nextPlus[W.mul(u, v)] += cu * cv;
    acc = std::move(next);
    accPlus = std::move(nextPlus);
  }
  std::vector<Int> byClass(flats.numOrbits(), Int(0)), byClassPlus(flats.numOrbits(), Int(0));
  for (const auto& [w, count] : acc) byClass[flats.orbitOf(w)] += count;
  for (const auto& [w, count] : accPlus) byClassPlus[flats.orbitOf(w)] += count;
  return byClass == gamma && byClassPlus == gammaPlus;
}

}  // namespace coxcat
