#pragma once

#include "coxcat/noncross.hpp"

namespace coxcat {
namespace factor {

/// One length-additive factorization c = w t_1 ... t_k with w in a
/// prescribed parabolic class and reflections t_i. nil counts the positions
/// where the Coxeter length drops from one prefix to the next (Bruhat
/// descents along the prefix chain).
struct Factorization {
  ElemId w;
  std::vector<int> tail;  // reflection indices
  int nil;
};

/// All factorizations with bottom in the admissible set of NC elements.
std::vector<Factorization> enumerateFactorizations(const NCLattice& nc,
                                                   const std::vector<char>& admissible);

/// phi(W, class, q) = sum q^nil over the factorizations.
UniPoly phiEnumerated(const NCLattice& nc, const std::vector<char>& admissible);
UniPoly phiForOrbit(const NCLattice& nc, int orbit);

/// k!/[N:W_X] prod_i (b_i + 1 + q(h - b_i - 1)), for irreducible groups.
UniPoly phiClosedForm(const SubSystem& full, const FlatTable& flats, int orbit);

/// k! (1-q)^k gamma(q/(1-q)) from a gamma polynomial in m of degree <= k.
UniPoly phiFromGammaPoly(const UniPoly& gammaPoly, int k);

/// phi(W, class, q) = (2+q(h-2))/2 sum_s phi(W_(s), class cap W_(s), q),
/// symbolically in q for every parabolic class (irreducible W).
bool phiRecursionCheck(const SubSystem& full, const FlatTable& flats);

/// phi(W1 x W2, X1 x X2, q) = binom(k1+k2, k1) phi_1 phi_2 on two-factor
/// products.
bool phiProductRuleCheck(const SubSystem& full, const FlatTable& flats);

/// phi computed from a second standard Coxeter element agrees.
bool phiIndependenceOfCoxeterElement(const SubSystem& full, const FlatTable& flats);

/// The right inversions of c biject onto S via t -> the unique s with
/// ct in W_(s).
bool rightInversionBijectionCheck(const SubSystem& full, ElemId c);

/// Conjugation orbits of c on T have size h/2 with one right inversion or
/// size h with two (irreducible W, any standard c).
bool coxeterConjugationOrbitCheck(const SubSystem& full, ElemId c);

}  // namespace factor
}  // namespace coxcat
