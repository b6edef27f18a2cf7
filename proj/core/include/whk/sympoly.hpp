#pragma once

#include "whk/pcgroup.hpp"

namespace whk {

/// Monomial basis of the homogeneous degree-p part S^p of F_p[x_1..x_k]:
/// exponent vectors of total degree p in lexicographic order. The dimension
/// is binom(k+p-1, p).
struct MonomialBasis {
  int p = 3;
  int k = 1;
  std::vector<std::vector<int>> exps;

  MonomialBasis(int p, int k);
  std::size_t dim() const { return exps.size(); }
  std::size_t index_of(const std::vector<int>& e) const;
};

/// Homogeneous polynomial of degree p over F_p, stored densely on the
/// monomial basis.
struct HomogeneousPoly {
  int p = 3;
  int k = 1;
  std::vector<int> coef;  // indexed like MonomialBasis(p, k)

  bool zero() const;
  bool operator==(const HomogeneousPoly&) const = default;
};

HomogeneousPoly zero_poly(int p, int k);
HomogeneousPoly add(const HomogeneousPoly& a, const HomogeneousPoly& b);
HomogeneousPoly scale(const HomogeneousPoly& a, int lambda);

/// B_{x,y} = x^{p-1} y, the expanded product of p linear forms.
HomogeneousPoly b_monomial(int p, int k, std::span<const int> x,
                           std::span<const int> y);

/// Product of a single monomial's variables x_1^{a_1}...x_k^{a_k} (total
/// degree p) -- convenience for identities.
HomogeneousPoly monomial_poly(int p, int k, const std::vector<int>& e);

/// Evaluation pairing A(psi) = A(psi_1, ..., psi_k) in F_p.
int evaluate(const HomogeneousPoly& a, std::span<const int> psi);

/// F_p-rank of a list of coefficient rows.
int fp_rank(std::vector<std::vector<int>> rows, int p);

/// Rank of the span of all B_{x,y}, x, y in F_p^k; equals dim S^p.
int span_rank_all_pairs(int p, int k);

/// Alternating bilinear form on F_p^k.
struct BilinearForm {
  int p = 3;
  int k = 1;
  std::vector<std::vector<int>> m;

  bool alternating() const;
  int rank() const;
  int apply(std::span<const int> x, std::span<const int> y) const;
};

/// Rank of the span of B_{x,y} over pairs with b(x,y) = 0. Full whenever the
/// rank of b differs from 2; exactly 2 for the nondegenerate rank-2 case.
int span_rank_isotropic_pairs(const BilinearForm& b);

/// The commutator form of an (almost) extra-special group on P/Frattini(P):
/// [u~, v~] = z^{b(u,v)} for a fixed generator z of the derived subgroup.
/// Nondegenerate exactly in the extra-special case; for almost extra-special
/// groups the radical is the image of the center.
struct CommutatorForm {
  BilinearForm form;
  std::vector<Elem> basis_lifts;    // lifts of the chosen basis of P/Frattini
  std::vector<std::vector<int>> coords;  // element -> coordinates in P/Frattini
  Elem z = 0;                       // chosen generator of the derived subgroup
};
CommutatorForm commutator_form(const FiniteGroup& g);

/// All normalized linear functionals on F_p^k (first nonzero coefficient 1),
/// one per hyperplane, in lexicographic order.
std::vector<std::vector<int>> hyperplane_functionals(int p, int k);

/// Matrix of the evaluation map S^p -> prod_Q F_p: rows are monomials,
/// columns the normalized hyperplane functionals; injective, with row space
/// equal to the span of the vectors (psi_Q(x)^{p-1} psi_Q(y))_Q.
std::vector<std::vector<int>> r_matrix(int p, int k);

}  // namespace whk
