#include "coxcat/subsystem.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace coxcat {

SubSystem SubSystem::full(const CoxeterSystem& W) {
  std::vector<int> all(W.rank());
  for (int j = 0; j < W.rank(); ++j) all[j] = j;
  return standard(W, all);
}

SubSystem SubSystem::standard(const CoxeterSystem& W, const std::vector<int>& simples) {
  if (!W.enumerated()) throw std::logic_error("SubSystem: ambient group not enumerated");
  SubSystem G;
  G.W = &W;
  G.simples = simples;
  std::sort(G.simples.begin(), G.simples.end());
  for (int j : G.simples) G.mask |= 1u << j;

  G.localOf.assign(W.order(), -1);
  for (ElemId w = 0; w < W.order(); ++w)
    if ((W.supportMask(w) & ~G.mask) == 0) {
      G.localOf[w] = int32_t(G.elems.size());
      G.elems.push_back(w);
    }

  for (int r = 0; r < W.numPositive(); ++r) {
    const Vec& v = W.root(r);
    bool inside = true;
    for (int j = 0; j < W.rank() && inside; ++j)
      if (!v[j].isZero() && !(G.mask & (1u << j))) inside = false;
    if (inside) G.posRoots.push_back(r);
  }

  for (int j : G.simples) (W.color(j) == 0 ? G.plusSimples : G.minusSimples).push_back(j);
  G.cPlus = W.identity();
  for (int j : G.plusSimples) G.cPlus = W.mul(G.cPlus, W.simple(j));
  G.cMinus = W.identity();
  for (int j : G.minusSimples) G.cMinus = W.mul(G.cMinus, W.simple(j));
  G.c = W.mul(G.cPlus, G.cMinus);

  // Connected components of the induced diagram.
  std::vector<int> color(G.simples.size(), -1);
  const auto& cm = W.coxeterMatrix();
  for (size_t s = 0; s < G.simples.size(); ++s) {
    if (color[s] >= 0) continue;
    std::deque<size_t> q = {s};
    color[s] = int(G.components.size());
    std::vector<int> comp;
    while (!q.empty()) {
      size_t v = q.front();
      q.pop_front();
      comp.push_back(G.simples[v]);
      for (size_t j = 0; j < G.simples.size(); ++j)
        if (color[j] < 0 && cm[G.simples[v]][G.simples[j]] > 2) {
          color[j] = color[s];
          q.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    G.components.push_back(comp);
  }

  if (!G.simples.empty()) {
    std::vector<std::vector<int>> sub(G.simples.size(), std::vector<int>(G.simples.size()));
    for (size_t i = 0; i < G.simples.size(); ++i)
      for (size_t j = 0; j < G.simples.size(); ++j) sub[i][j] = cm[G.simples[i]][G.simples[j]];
    G.type = classifyCoxeterMatrix(sub);
  }
  return G;
}

int SubSystem::coxeterNumber() const {
  if (!irreducible()) throw std::logic_error("coxeterNumber: reducible subsystem");
  return componentCoxeterNumber(0);
}

int SubSystem::componentCoxeterNumber(int comp) const {
  int npos = int(componentPosRoots(comp).size());
  return 2 * npos / int(components[comp].size());
}

std::vector<int> SubSystem::componentPosRoots(int comp) const {
  uint32_t cmask = 0;
  for (int j : components[comp]) cmask |= 1u << j;
  std::vector<int> out;
  for (int r : posRoots) {
    const Vec& v = W->root(r);
    bool inside = true;
    for (int j = 0; j < W->rank() && inside; ++j)
      if (!v[j].isZero() && !(cmask & (1u << j))) inside = false;
    if (inside) out.push_back(r);
  }
  return out;
}

}  // namespace coxcat
