#include "whk/formulas.hpp"

namespace whk::formulas {

std::int64_t elementary_abelian_rank(int p, int k) {
  return (ipow(p, k) - 1) / (p - 1) - binomial(p + k - 1, p);
}

std::int64_t generic_M(int p, int k) {
  return (ipow(p, k - 1) - 1) / (p - 1) - binomial(p + k - 2, p);
}

std::int64_t free_rank_elementary_abelian(int p, int k) {
  return (ipow(p, k) - 1) * (p - 3) / (2 * (p - 1));
}

std::int64_t free_rank_extra_special(int p, int n) {
  return (ipow(p, 2 * n) + p - 2) * (p - 3) / (2 * (p - 1));
}

std::int64_t free_rank_almost_extra_special(int p, int n) {
  return ((ipow(p, 2 * n + 1) + static_cast<std::int64_t>(p) * p + p + 1) * (p - 3) + 8) /
         (2 * (p - 1));
}

std::int64_t free_rank_cyclic(int p, int n) {
  return (ipow(p, n) + 1) / 2 - (n + 1);
}

namespace {

AbelianInvariants elementary(int p, std::int64_t rank) {
  AbelianInvariants inv;
  inv.factors.assign(static_cast<std::size_t>(rank), p);
  return inv;
}

}  // namespace

std::optional<AbelianInvariants> expected_cl1(const GroupSpec& spec) {
  using F = GroupSpec::Family;
  const int p = spec.p;
  switch (spec.family) {
    case F::Cyclic:
      return AbelianInvariants{};  // trivial for all cyclic groups
    case F::ElementaryAbelian:
      return elementary(p, elementary_abelian_rank(p, spec.a));
    case F::M:
    case F::N:
      return elementary(p, p - 1);  // order p^3
    case F::ExtraSpecial: {
      if (spec.a == 1) return elementary(p, p - 1);
      const int k = 2 * spec.a + 1;
      std::int64_t m = generic_M(p, k);
      if (spec.a == 2 && spec.exponent_class == 2)
        return elementary(p, m);  // trivial kernel in this one case
      return elementary(p, m + 1);  // kernel C_p on top of (C_p)^M
    }
    case F::AlmostExtraSpecial: {
      if (spec.a == 1)
        return elementary(p, (static_cast<std::int64_t>(p) * p + p - 2) / 2);  // order p^4
      const int k = 2 * spec.a + 2;
      std::int64_t m = generic_M(p, k);
      if (spec.a == 2) return elementary(p, m + 1);  // kernel of order p
      // kernel isomorphic to the center C_{p^2}
      AbelianInvariants inv = elementary(p, m);
      inv.factors.push_back(static_cast<std::int64_t>(p) * p);
      return inv;
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> expected_free_rank(const GroupSpec& spec) {
  using F = GroupSpec::Family;
  switch (spec.family) {
    case F::Cyclic: return free_rank_cyclic(spec.p, spec.a);
    case F::ElementaryAbelian: return free_rank_elementary_abelian(spec.p, spec.a);
    case F::M:
    case F::N: return free_rank_extra_special(spec.p, 1);
    case F::ExtraSpecial: return free_rank_extra_special(spec.p, spec.a);
    case F::AlmostExtraSpecial: return free_rank_almost_extra_special(spec.p, spec.a);
  }
  return std::nullopt;
}

std::optional<std::int64_t> expected_frattini_kernel_order(const GroupSpec& spec) {
  using F = GroupSpec::Family;
  const int p = spec.p;
  if (spec.family == F::ExtraSpecial && spec.a >= 2) {
    if (spec.a == 2 && spec.exponent_class == 2) return 1;
    return p;  // isomorphic to the center
  }
  if (spec.family == F::AlmostExtraSpecial && spec.a >= 2) {
    if (spec.a == 2) return p;
    return static_cast<std::int64_t>(p) * p;  // isomorphic to the center
  }
  return std::nullopt;
}

}  // namespace whk::formulas
