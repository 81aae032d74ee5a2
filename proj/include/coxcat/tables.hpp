#pragma once

#include "coxcat/bijection.hpp"
#include "coxcat/characters.hpp"
#include "coxcat/cluster.hpp"
#include "coxcat/factor.hpp"

#include <memory>
#include <set>

namespace coxcat {

/// Shared computation cache for one group: the system, its flat and
/// noncrossing data, matrices, per-m cluster complexes, character data, and
/// per-standard-subset subsystem data. Built once per CLI job or
/// verification run.
class GroupContext {
 public:
  GroupContext(const std::string& type, bool allowHeavy);

  CoxeterSystem sys;
  SubSystem full;
  FlatTable flats;
  NCLattice nc;
  ThetaMatrices tm;

  const ClusterComplex& cluster(int m);
  const CharacterData& characters();

  struct SubData {
    SubSystem sub;
    FlatTable flats;
    NCLattice nc;
    std::unique_ptr<CharacterData> chars;
    SubData(const CoxeterSystem& W, const std::vector<int>& simples);
    const CharacterData& characters();
  };
  SubData& subset(uint32_t bits);  // bits over full.simples positions

  /// kappa+ polynomials in m per orbit, via the inclusion-exclusion over
  /// standard parabolic subsystems (independent of the closed form).
  const std::vector<UniPoly>& kappaPlusPolys();

 private:
  std::map<int, std::unique_ptr<ClusterComplex>> clusters_;
  std::map<uint32_t, std::unique_ptr<SubData>> subs_;
  std::unique_ptr<CharacterData> chars_;
  std::vector<UniPoly> kappaPlusPolys_;
};

struct OrbitRow {
  std::string label;
  int dim = 0;
  std::string coxeter_type;
  std::vector<long> os_exponents;
  int nu = 0;
  Int normalizer_index;
  Int kappa, kappa_plus, gamma, gamma_plus;
  std::vector<Int> phi_coeffs;  // lowest degree first
};

struct GroupTables {
  std::string group;
  int m = 1;
  std::vector<OrbitRow> orbits;
  std::vector<Int> f_vector, h_vector;
  Int facets, positive_facets;
};

GroupTables buildTables(GroupContext& ctx, int m);

/// Product tables assembled combinatorially from per-factor tables (used for
/// products whose factors live in incompatible algebraic fields).
GroupTables combineTables(const GroupTables& a, const GroupTables& b);

std::string toJson(const std::vector<GroupTables>& tables);
std::string toCsv(const std::vector<GroupTables>& tables);
std::string toText(const std::vector<GroupTables>& tables);

}  // namespace coxcat
