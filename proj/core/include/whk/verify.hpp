#pragma once

#include "whk/cl1.hpp"
#include "whk/formulas.hpp"
#include "whk/sympoly.hpp"

namespace whk {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<CheckLine> lines;
  bool all_pass() const;
  void add(std::string name, bool pass, std::string detail = "");
};

/// Cl_1 of EA(p,k) for k = 1..max_k against the closed form (C_p)^N.
CheckList verify_elementary_abelian(int p, int max_k, const Cl1Options& opts = {});

/// The order p^3/p^4 closed forms and the generic structure of the
/// extra-special families at p = 3 (order p^5 and p^6 cases included), with
/// the deflation kernel along the Frattini subgroup.
CheckList verify_theorem_a(const Cl1Options& opts = {});

/// Cross-validation of the relation span against the polynomial evaluation
/// matrix for elementary abelian groups: aligned row spaces are equal and
/// the common rank is binom(p+k-1, p).
CheckList verify_oracle(int p, int k, const Cl1Options& opts = {});

/// Witness elements for the two special cases: hyperplane components vanish
/// and w_Y has the expected order in the Y component.
CheckList verify_witness(const Cl1Options& opts = {});

/// Relation rows of an elementary abelian group restricted to the index-p
/// components, rescaled so that each component is expressed through the
/// normalized functional of its hyperplane (making them directly comparable
/// with r_matrix columns). Returned in the column order of
/// hyperplane_functionals(p, k).
std::vector<std::vector<int>> aligned_relation_rows(const FiniteGroup& ea_group,
                                                    const GeneticBasis& basis,
                                                    const std::vector<RelationVector>& rels);

}  // namespace whk
