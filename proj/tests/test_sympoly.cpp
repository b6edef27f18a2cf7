#include <doctest.h>

#include <map>

#include "whk/constructors.hpp"
#include "whk/sympoly.hpp"

using namespace whk;

namespace {

// Test-only multivariate integer polynomials, dense-on-demand: enough to
// verify the inclusion-exclusion identity
//   sum_{0 != A <= {1..n}} (-1)^{n-|A|} (sum_{i in A} x_i)^n = n! x_1...x_n
// over the integers before reducing anything mod p.
using ZPoly = std::map<std::vector<int>, long long>;

ZPoly zpow_linear(const std::vector<int>& coeffs, int n) {
  ZPoly acc{{std::vector<int>(coeffs.size(), 0), 1}};
  for (int step = 0; step < n; ++step) {
    ZPoly next;
    for (const auto& [e, c] : acc)
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::vector<int> e2 = e;
        ++e2[i];
        next[e2] += c * coeffs[i];
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("b_monomial expansion") {
  CHECK(b_monomial(3, 2, std::vector<int>{0, 0}, std::vector<int>{1, 0}).zero());

  HomogeneousPoly cube = b_monomial(3, 1, std::vector<int>{1}, std::vector<int>{1});
  CHECK(cube == monomial_poly(3, 1, {3}));

  HomogeneousPoly b = b_monomial(3, 2, std::vector<int>{1, 0}, std::vector<int>{0, 1});
  CHECK(b == monomial_poly(3, 2, {2, 1}));  // x1^2 x2
}

TEST_CASE("evaluation") {
  HomogeneousPoly a = monomial_poly(3, 2, {2, 1});
  CHECK(evaluate(a, std::vector<int>{1, 2}) == 2);
  CHECK(evaluate(zero_poly(3, 2), std::vector<int>{1, 2}) == 0);

  // B_{x,y}(psi) = psi(x)^{p-1} psi(y)
  const int p = 3, k = 3;
  SplitMix64 rng(0x11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> x(k), y(k), psi(k);
    for (int i = 0; i < k; ++i) {
      x[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(p));
      y[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(p));
      psi[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(p));
    }
    auto dot = [&](const std::vector<int>& u) {
      int t = 0;
      for (int i = 0; i < k; ++i)
        t = (t + u[static_cast<std::size_t>(i)] * psi[static_cast<std::size_t>(i)]) % p;
      return t;
    };
    int expected = dot(x) == 0 ? 0 : dot(y);  // Fermat: nonzero^{p-1} = 1
    CHECK(evaluate(b_monomial(p, k, x, y), psi) == expected);
  }
}

TEST_CASE("evaluation scales like degree p") {
  const int p = 3, k = 3;
  MonomialBasis basis(p, k);
  SplitMix64 rng(0x33);
  for (int trial = 0; trial < 100; ++trial) {
    HomogeneousPoly a = zero_poly(p, k);
    for (std::size_t i = 0; i < basis.dim(); ++i)
      a.coef[i] = static_cast<int>(rng.below(p));
    std::vector<int> psi(k);
    for (int i = 0; i < k; ++i) psi[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(p));
    for (int lambda = 0; lambda < p; ++lambda) {
      std::vector<int> lpsi(k);
      for (int i = 0; i < k; ++i)
        lpsi[static_cast<std::size_t>(i)] = lambda * psi[static_cast<std::size_t>(i)] % p;
      int lhs = evaluate(a, lpsi);
      int rhs = evaluate(a, psi);
      for (int t = 0; t < p; ++t) rhs = rhs * lambda % p;  // lambda^p
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("inclusion-exclusion identity over the integers") {
  for (int n : {3, 5}) {
    ZPoly total;
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> coeffs(static_cast<std::size_t>(n), 0);
      int bits = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) {
          coeffs[static_cast<std::size_t>(i)] = 1;
          ++bits;
        }
      long long sign = ((n - bits) % 2 == 0) ? 1 : -1;
      for (const auto& [e, c] : zpow_linear(coeffs, n)) total[e] += sign * c;
    }
    long long nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    ZPoly expected{{std::vector<int>(static_cast<std::size_t>(n), 1), nfact}};
    std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
    CHECK(total == expected);
  }
}

TEST_CASE("signed B-combination produces the squarefree monomial") {
  // sum_{0 != A <= {1..p-1}} (-1)^{p-|A|} B_{sum_{i in A} x_i, x_p} = x_1...x_p
  for (int p : {3, 5}) {
    const int k = p;
    HomogeneousPoly total = zero_poly(p, k);
    for (int mask = 1; mask < (1 << (p - 1)); ++mask) {
      std::vector<int> x(static_cast<std::size_t>(k), 0);
      int bits = 0;
      for (int i = 0; i < p - 1; ++i)
        if (mask & (1 << i)) {
          x[static_cast<std::size_t>(i)] = 1;
          ++bits;
        }
      std::vector<int> y(static_cast<std::size_t>(k), 0);
      y[static_cast<std::size_t>(p - 1)] = 1;
      int sign = ((p - bits) % 2 == 0) ? 1 : p - 1;  // (-1)^{p-|A|} mod p
      total = add(total, scale(b_monomial(p, k, x, y), sign));
    }
    CHECK(total == monomial_poly(p, k, std::vector<int>(static_cast<std::size_t>(k), 1)));
  }
}

TEST_CASE("span ranks of all B pairs") {
  CHECK(span_rank_all_pairs(3, 1) == 1);
  CHECK(span_rank_all_pairs(3, 2) == 4);   // binom(4,3)
  CHECK(span_rank_all_pairs(3, 3) == 10);  // binom(5,3)
  CHECK(span_rank_all_pairs(3, 4) == 20);  // binom(6,3)
  CHECK(span_rank_all_pairs(5, 1) == 1);
  CHECK(span_rank_all_pairs(5, 2) == 6);   // binom(6,5)
}

TEST_CASE("span ranks of isotropic B pairs") {
  // zero form: every pair qualifies
  BilinearForm zero2{3, 2, {{0, 0}, {0, 0}}};
  CHECK(span_rank_isotropic_pairs(zero2) == 4);

  // nondegenerate rank 2: only the scalar pairs, span of the p-th powers
  BilinearForm sympl3{3, 2, {{0, 1}, {2, 0}}};
  CHECK(span_rank_isotropic_pairs(sympl3) == 2);
  BilinearForm sympl5{5, 2, {{0, 1}, {4, 0}}};
  CHECK(span_rank_isotropic_pairs(sympl5) == 2);

  // rank 4 at k = 4: full span (binom(6,3) = 20)
  BilinearForm rank4{3, 4, {{0, 1, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 2, 0}}};
  CHECK(rank4.rank() == 4);
  CHECK(span_rank_isotropic_pairs(rank4) == 20);
  BilinearForm zero4{3, 4, std::vector<std::vector<int>>(4, std::vector<int>(4, 0))};
  CHECK(span_rank_isotropic_pairs(zero4) == 20);

  BilinearForm not_alt{3, 2, {{1, 0}, {0, 0}}};
  CHECK_THROWS_AS(span_rank_isotropic_pairs(not_alt), contract_error);
}

TEST_CASE("commutator forms") {
  CommutatorForm es1 = commutator_form(extra_special(3, 1, 1));
  CHECK(es1.form.alternating());
  CHECK(es1.form.k == 2);
  CHECK(es1.form.rank() == 2);

  CommutatorForm es1b = commutator_form(make_N(3));
  CHECK(es1b.form.rank() == 2);

  CommutatorForm es2 = commutator_form(extra_special(3, 2, 1));
  CHECK(es2.form.k == 4);
  CHECK(es2.form.rank() == 4);
  CommutatorForm es2b = commutator_form(extra_special(3, 2, 2));
  CHECK(es2b.form.rank() == 4);

  FiniteGroup aes = almost_extra_special(3, 1);
  CommutatorForm af = commutator_form(aes);
  CHECK(af.form.k == 3);
  CHECK(af.form.rank() == 2);  // one-dimensional radical
  // the radical is exactly the image of the center
  for (Elem zc : aes.center_elems()) {
    const std::vector<int>& coord = af.coords[zc];
    for (Elem t : aes.elements()) {
      int v = af.form.apply(coord, af.coords[t]);
      CHECK(v == 0);
    }
  }

  CHECK_THROWS_AS(commutator_form(elementary_abelian(3, 2)), contract_error);
}

TEST_CASE("evaluation matrix of monomials against hyperplanes") {
  std::vector<std::vector<int>> tiny = r_matrix(3, 1);
  REQUIRE(tiny.size() == 1);
  REQUIRE(tiny[0].size() == 1);
  CHECK(tiny[0][0] != 0);

  CHECK(fp_rank(r_matrix(3, 3), 3) == 10);  // injective on S^3
}

TEST_CASE("zero polynomial function means zero polynomial") {
  // evaluation at all points of F_p^k is injective on homogeneous degree-p
  // polynomials: the point-evaluation matrix has full rank
  auto full_eval_rank = [](int p, int k) {
    MonomialBasis basis(p, k);
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      HomogeneousPoly mono = monomial_poly(p, k, basis.exps[i]);
      std::vector<int> row;
      std::vector<int> pt(static_cast<std::size_t>(k), 0);
      for (;;) {
        row.push_back(evaluate(mono, pt));
        int j = k - 1;
        for (; j >= 0; --j) {
          if (++pt[static_cast<std::size_t>(j)] < p) break;
          pt[static_cast<std::size_t>(j)] = 0;
        }
        if (j < 0) break;
      }
      rows.push_back(std::move(row));
    }
    return std::pair<int, int>(fp_rank(rows, p), static_cast<int>(basis.dim()));
  };
  for (int k = 1; k <= 4; ++k) {
    auto [rank, dim] = full_eval_rank(3, k);
    CHECK(rank == dim);
  }
  for (int k = 1; k <= 2; ++k) {
    auto [rank, dim] = full_eval_rank(5, k);
    CHECK(rank == dim);
  }
}
