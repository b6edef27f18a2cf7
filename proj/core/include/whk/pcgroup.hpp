#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "whk/common.hpp"

namespace whk {

/// Consistent polycyclic presentation of a finite p-group, p odd.
///
/// Generators g_1..g_n each have relative order p. The defining data are
/// normal words (exponent vectors) for the powers g_i^p, supported on
/// generators above i, and for the right conjugates g_j^{g_i} = g_i^-1 g_j g_i
/// with i < j, supported on generators >= j. Every element then has a unique
/// normal form g_1^{e_1} ... g_n^{e_n} with 0 <= e_i < p, and the group order
/// is p^n. Consistency is not assumed blindly: FiniteGroup::validate checks
/// the induced multiplication for group axioms.
struct PcPresentation {
  int p = 3;
  int ngens = 0;
  // power[i]: exponent vector of g_i^p (size ngens, support > i).
  std::vector<std::vector<int>> power;
  // conj[i][j], i < j: exponent vector of g_j^{g_i} (support >= j).
  std::vector<std::vector<std::vector<int>>> conj;

  // Throws contract_error if the supports/ranges above are violated or p is
  // not an odd prime.
  void check_shape() const;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/// A finite p-group with exact element arithmetic.
///
/// Two backends: a polycyclic presentation (elements are exponent vectors,
/// encoded as mixed-radix ids) or a full multiplication table (used for
/// quotient groups and central products). All caches -- inverses, element
/// orders, center, derived subgroup, Frattini subgroup -- are filled at
/// construction; instances are immutable afterwards and safe to share across
/// threads.
///
/// Element ids are dense in [0, order) with identity 0; for the polycyclic
/// backend the id of an exponent vector is its mixed-radix value with e_1
/// most significant, so enumeration order is lexicographic on exponents.
class FiniteGroup {
 public:
  static FiniteGroup from_presentation(PcPresentation pres);
  // `table` is row-major order x order with table[a*order+b] = a*b and
  // identity 0.
  static FiniteGroup from_table(int p, std::size_t order,
                                std::vector<Elem> table);

  std::size_t order() const { return order_; }
  int prime() const { return p_; }
  bool table_backed() const { return pc_ == std::nullopt; }

  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inverse(Elem a) const;
  Elem power(Elem a, long k) const;
  /// ^t a = t a t^-1.
  Elem conjugate(Elem a, Elem t) const;
  /// [a,b] = a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const;
  int element_order(Elem a) const;
  int exponent() const { return exponent_; }

  /// All elements in the canonical enumeration order (0, 1, ..., order-1).
  std::vector<Elem> elements() const;

  // Polycyclic-backend element <-> exponent-vector views.
  bool has_exponents() const { return pc_.has_value(); }
  int pc_ngens() const;
  std::vector<int> exponents(Elem a) const;
  Elem from_exponents(std::span<const int> e) const;
  /// Collects a word in the generators into its normal form. Letters are
  /// 1-based generator indices, negative for inverses; the empty word gives
  /// the identity. Collection is a homomorphism from the free monoid.
  Elem collect_word(std::span<const int> letters) const;

  /// Canonical generating set: pc generators, or a greedy minimal set for
  /// table-backed groups.
  const std::vector<Elem>& generators() const { return generators_; }

  // Characteristic subgroups, cached at construction, as sorted element sets.
  const std::vector<Elem>& center_elems() const { return center_; }
  const std::vector<Elem>& derived_elems() const { return derived_; }
  const std::vector<Elem>& frattini_elems() const { return frattini_; }

  /// Closure of a generating set, as a sorted element set.
  std::vector<Elem> closure_elems(std::span<const Elem> gens) const;

  /// Checks the group axioms on the constructed operation: identity and
  /// inverse laws everywhere, per-generator translation bijectivity, and
  /// associativity (exhaustive up to order 3^4, generator triples plus a
  /// fixed-seed sample above).
  ValidationReport validate(std::uint64_t seed = 0x5eed) const;

 private:
  FiniteGroup() = default;
  void build_caches();
  void pc_mul_gen(std::vector<int>& e, int i) const;
  void pc_mul_word(std::vector<int>& e, const std::vector<int>& w) const;
  void check_elem(Elem a) const;

  int p_ = 3;
  std::size_t order_ = 1;
  int exponent_ = 1;
  std::optional<PcPresentation> pc_;
  // pc backend: gen_right_[i][a] = a * g_i.
  std::vector<std::vector<Elem>> gen_right_;
  // table backend: full multiplication table.
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint16_t> elem_order_;
  std::vector<Elem> generators_;
  std::vector<Elem> center_, derived_, frattini_;
};

}  // namespace whk
