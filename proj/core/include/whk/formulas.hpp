#pragma once

#include <optional>

#include "whk/constructors.hpp"
#include "whk/snf.hpp"

namespace whk {

// Closed-form expectations for the families this library covers. Keeping
// them in one place means the CLI reports and the test suites cannot drift
// apart.
namespace formulas {

/// Elementary abelian rank k: Cl_1 = (C_p)^N with
/// N = (p^k - 1)/(p - 1) - binom(p+k-1, p).
std::int64_t elementary_abelian_rank(int p, int k);

/// Extra-special / almost extra-special of order p^k (k >= 5 resp. 6):
/// the elementary abelian part has rank M = (p^{k-1}-1)/(p-1) - binom(p+k-2, p).
std::int64_t generic_M(int p, int k);

/// Free rank of Wh for elementary abelian of rank k:
/// (p^k - 1)(p - 3) / (2(p - 1)).
std::int64_t free_rank_elementary_abelian(int p, int k);

/// Free rank for extra-special of order p^{2n+1}:
/// (p^{2n} + p - 2)(p - 3) / (2(p - 1)).
std::int64_t free_rank_extra_special(int p, int n);

/// Free rank for almost extra-special of order p^{2n+2}:
/// ((p^{2n+1} + p^2 + p + 1)(p - 3) + 8) / (2(p - 1)).
std::int64_t free_rank_almost_extra_special(int p, int n);

/// Free rank for the cyclic group of order p^n: (p^n + 1)/2 - (n + 1).
std::int64_t free_rank_cyclic(int p, int n);

/// Expected Cl_1 invariants for a recognized family, when a closed form is
/// known: trivial for cyclic groups, (C_p)^N for elementary abelian,
/// (C_p)^{p-1} and (C_p)^{(p^2+p-2)/2} for the order p^3 / p^4 cases, and
/// K x (C_p)^M in general, K cyclic of order 1, p or p^2 by case.
std::optional<AbelianInvariants> expected_cl1(const GroupSpec& spec);

/// Expected free rank for a recognized family.
std::optional<std::int64_t> expected_free_rank(const GroupSpec& spec);

/// Expected order of the kernel of deflation along the Frattini subgroup,
/// for extra-special groups of order >= p^5 and almost extra-special of
/// order >= p^6.
std::optional<std::int64_t> expected_frattini_kernel_order(const GroupSpec& spec);

}  // namespace formulas

}  // namespace whk
