#pragma once

#include <string>

#include "whk/pcgroup.hpp"

namespace whk {

// The group zoo: cyclic groups, elementary abelian groups, the two
// extra-special groups of order p^3, their central products, and the
// extra-special / almost extra-special families built from them. All
// constructors require an odd prime and reject p = 2 with
// unsupported_prime_error.

FiniteGroup cyclic(int p, int n);
FiniteGroup elementary_abelian(int p, int k);

/// Extra-special of order p^3 and exponent p (generators x, y with central
/// commutator z = [x,y] of order p).
FiniteGroup make_M(int p);
/// Extra-special of order p^3 and exponent p^2 (x of order p^2, y of order p,
/// ^y x = x^{1+p}).
FiniteGroup make_N(int p);

/// Extra-special group of order p^{2r+1}. exponent_class 1 gives exponent p,
/// exponent_class 2 gives exponent p^2.
FiniteGroup extra_special(int p, int r, int exponent_class);

/// Almost extra-special group of order p^{2r+2}: derived and Frattini
/// subgroup of order p, cyclic center of order p^2.
FiniteGroup almost_extra_special(int p, int r);

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k);

/// Central product (H x K)/{(m, theta(m)^-1) : m in M} for a nontrivial
/// central subgroup M <= Z(H). `amalgam` lists M's elements in H together
/// with their images theta(m) in K; theta must be an injective homomorphism
/// with central image.
struct CentralAmalgam {
  std::vector<Elem> m_in_h;     // including the identity
  std::vector<Elem> image_in_k; // theta(m) for each listed m
};
FiniteGroup central_product(const FiniteGroup& h, const FiniteGroup& k,
                            const CentralAmalgam& amalgam);
/// Convenience: identifies Z(H) (which must be cyclic of order p) with the
/// subgroup of that order in a chosen cyclic central subgroup of K.
FiniteGroup central_product_identify_centers(const FiniteGroup& h,
                                             const FiniteGroup& k);

/// Parsed form of the CLI-facing group grammar:
///   C(p,n) | EA(p,k) | M(p) | N(p) | ES(p,r,exp) | AES(p,r)
/// with exp in {1,2} meaning exponent p or p^2.
struct GroupSpec {
  enum class Family { Cyclic, ElementaryAbelian, M, N, ExtraSpecial, AlmostExtraSpecial };
  Family family;
  int p = 3;
  int a = 0;  // n, k or r
  int exponent_class = 1;

  static GroupSpec parse(const std::string& text);
  std::string str() const;
  FiniteGroup build() const;
  std::size_t order() const;
};

}  // namespace whk
