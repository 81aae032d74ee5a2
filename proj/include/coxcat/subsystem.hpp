#pragma once

#include "coxcat/system.hpp"

#include <memory>

namespace coxcat {

/// A standard parabolic subgroup W_I viewed inside its ambient system,
/// together with the root subsystem it acts on. The whole group is the view
/// with I = S. Element ids are ambient ids; a dense local index is kept for
/// table building. The distinguished Coxeter element is the restriction of
/// the ambient bipartite order: c_I = prod(I cap S+) prod(I cap S-), so that
/// c_I is a subword of the canonical factorization of c.
struct SubSystem {
  const CoxeterSystem* W = nullptr;
  std::vector<int> simples;  // ambient simple indices, ascending
  uint32_t mask = 0;
  std::vector<ElemId> elems;    // ambient ids, ascending
  std::vector<int32_t> localOf;  // ambient id -> local index, -1 outside
  std::vector<int> posRoots;    // ambient positive-root indices of the subsystem
  std::vector<int> plusSimples, minusSimples;
  ElemId c = 0, cPlus = 0, cMinus = 0;
  std::vector<std::vector<int>> components;  // ambient simple indices per factor
  CoxeterType type;

  static SubSystem full(const CoxeterSystem& W);
  static SubSystem standard(const CoxeterSystem& W, const std::vector<int>& simples);

  int rank() const { return int(simples.size()); }
  size_t size() const { return elems.size(); }
  bool contains(ElemId w) const { return (W->supportMask(w) & ~mask) == 0; }
  int local(ElemId w) const { return localOf[w]; }

  /// Reflection length is the same measured in W_I or in W.
  int length(ElemId w) const { return W->reflectionLength(w); }
  bool irreducible() const { return components.size() == 1; }
  /// Coxeter number of the (irreducible) subsystem.
  int coxeterNumber() const;
  /// Coxeter number of one component: 2 #positive roots / rank.
  int componentCoxeterNumber(int comp) const;
  /// Positive roots lying in a component's span.
  std::vector<int> componentPosRoots(int comp) const;

  /// Absolute order test u <= v via length additivity.
  bool absLeq(ElemId u, ElemId v) const {
    return length(u) + W->reflectionLength(W->mul(W->inverse(u), v)) == length(v);
  }
};

}  // namespace coxcat
