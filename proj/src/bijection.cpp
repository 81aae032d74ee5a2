#include "coxcat/bijection.hpp"

#include <algorithm>
#include <functional>

namespace coxcat {

FaceChainBijection::FaceChainBijection(const ClusterComplex& cc, const NCLattice& nc)
    : cc_(&cc), nc_(&nc) {
  if (&cc.flats() != &nc.flats())
    throw std::invalid_argument("bijection: complex and lattice must share flat data");
}

std::vector<int> FaceChainBijection::elemToFaceSet(int u, int v, int w) const {
  const CoxeterSystem& W = *nc_->sub().W;
  ElemId uv = W.mul(W.inverse(nc_->elem(u)), nc_->elem(v));
  ElemId vw = W.mul(W.inverse(nc_->elem(v)), nc_->elem(w));
  const auto& tlist = nc_->canonicalFactorization(nc_->indexOf(uv));
  const auto& ulist = nc_->canonicalFactorization(nc_->indexOf(vw));
  std::vector<int> out;
  int k = int(tlist.size());
  // t_k ... t_{i+1} t_i t_{i+1} ... t_k
  for (int i = 0; i < k; ++i) {
    ElemId g = W.identity();
    for (int j = k - 1; j > i; --j) g = W.mul(g, W.reflection(tlist[j]));
    out.push_back(W.conjugateReflection(g, tlist[i]));
  }
  // u_1 ... u_{i-1} u_i u_{i-1} ... u_1
  for (size_t i = 0; i < ulist.size(); ++i) {
    ElemId g = W.identity();
    for (size_t j = 0; j < i; ++j) g = W.mul(g, W.reflection(ulist[j]));
    out.push_back(W.conjugateReflection(g, ulist[i]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int FaceChainBijection::faceSetToElem(int u, int w, const std::vector<int>& faceSet) const {
  for (int v = 0; v < nc_->size(); ++v) {
    if (!(nc_->subword(u, v) && nc_->fullBelow(v, w))) continue;
    if (elemToFaceSet(u, v, w) == faceSet) return v;
  }
  throw std::logic_error("no interval element matches the face");
}

std::vector<int> FaceChainBijection::faceToChain(int faceId) const {
  const CoxeterSystem& W = *nc_->sub().W;
  const SubSystem& G = nc_->sub();
  int m = cc_->fussParameter();

  // Split the face: positive roots by color, negative simples.
  std::vector<std::vector<int>> colorRoots(m + 1);  // descending within color
  uint32_t negMask = 0;
  for (int v : cc_->faceVerts(faceId)) {
    const ColoredRoot& cr = cc_->vertex(v);
    if (W.isPositive(cr.root))
      colorRoots[cr.color].push_back(cr.root);
    else
      negMask |= 1u << W.simpleIndexOfRoot(W.negate(cr.root));
  }

  // w'_m is the subword of c on the untouched simples.
  ElemId wm = W.identity();
  for (int s : G.plusSimples)
    if (!(negMask & (1u << s))) wm = W.mul(wm, W.simple(s));
  for (int s : G.minusSimples)
    if (!(negMask & (1u << s))) wm = W.mul(wm, W.simple(s));

  std::vector<int> wPrime(m + 1);
  wPrime[m] = nc_->indexOf(wm);
  for (int i = m; i >= 1; --i) {
    ElemId prod = W.identity();
    for (int r : colorRoots[i]) prod = W.mul(prod, W.reflection(r));
    wPrime[i - 1] = nc_->indexOf(W.mul(nc_->elem(wPrime[i]), W.inverse(prod)));
  }

  std::vector<int> chain(m + 1);
  chain[0] = wPrime[0];
  for (int i = 1; i <= m; ++i) {
    std::vector<int> fs = colorRoots[i];
    std::sort(fs.begin(), fs.end());
    chain[i] = faceSetToElem(wPrime[i - 1], wPrime[i], fs);
  }
  return chain;
}

int FaceChainBijection::chainToFace(const std::vector<int>& chain) const {
  const CoxeterSystem& W = *nc_->sub().W;
  int m = cc_->fussParameter();
  if (int(chain.size()) != m + 1) throw std::invalid_argument("chain has wrong length");
  if (!nc_->subword(chain[0], chain[1])) throw std::invalid_argument("chain bottom not a subword");
  for (int i = 1; i < m; ++i)
    if (!nc_->leq(chain[i], chain[i + 1])) throw std::invalid_argument("chain not increasing");

  int top = nc_->indexOf(nc_->sub().c);
  std::vector<int> wPrime(m + 1);
  wPrime[0] = chain[0];
  for (int i = 1; i <= m; ++i)
    wPrime[i] = nc_->uniqueMiddle(chain[i], i == m ? top : chain[i + 1]);

  std::vector<int> verts;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> fs = elemToFaceSet(wPrime[i - 1], chain[i], wPrime[i]);
    for (int r : fs) {
      int v = cc_->vertexIndex({r, i});
      if (v < 0) throw std::logic_error("face root is not a vertex");
      verts.push_back(v);
    }
  }
  uint32_t supp = W.supportMask(nc_->elem(wPrime[m]));
  for (int s : nc_->sub().simples)
    if (!(supp & (1u << s))) {
      int v = cc_->vertexIndex({W.negate(W.simpleRoot(s)), 1});
      if (v < 0) throw std::logic_error("negative simple is not a vertex");
      verts.push_back(v);
    }
  std::sort(verts.rbegin(), verts.rend());
  int f = cc_->faceIndex(verts);
  if (f < 0) throw std::logic_error("chain image is not a face");
  return f;
}

std::vector<std::vector<int>> FaceChainBijection::allChains() const {
  int m = cc_->fussParameter();
  std::vector<std::vector<int>> out;
  std::vector<int> chain(m + 1);
  std::function<void(int, int)> ascend = [&](int pos, int below) {
    if (pos == m + 1) {
      out.push_back(chain);
      return;
    }
    for (int v = 0; v < nc_->size(); ++v)
      if (nc_->leq(below, v)) {
        chain[pos] = v;
        ascend(pos + 1, v);
      }
  };
  for (int w1 = 0; w1 < nc_->size(); ++w1)
    for (int w0 = 0; w0 < nc_->size(); ++w0)
      if (nc_->subword(w0, w1)) {
        chain[0] = w0;
        chain[1] = w1;
        ascend(2, w1);
      }
  return out;
}

bool FaceChainBijection::roundtripCheck() const {
  for (int f = 0; f < cc_->numFaces(); ++f) {
    std::vector<int> chain = faceToChain(f);
    // Label preservation: the face label is the orbit of Fix(w_0).
    if (nc_->theta(chain[0]) != cc_->faceTheta(f)) return false;
    if (chainToFace(chain) != f) return false;
  }
  auto chains = allChains();
  if (Int(chains.size()) != Int(cc_->numFaces())) return false;
  for (const auto& chain : chains) {
    int f = chainToFace(chain);
    if (faceToChain(f) != chain) return false;
  }
  return true;
}

}  // namespace coxcat
