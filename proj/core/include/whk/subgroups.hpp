#pragma once

#include <optional>
#include <span>

#include "whk/pcgroup.hpp"

namespace whk {

/// A subgroup of an ambient FiniteGroup, held by its full sorted element set
/// together with a deterministic greedy generating set. Subgroup equality is
/// element-set equality; group orders here stay small enough that explicit
/// sets are the canonical form.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> elems;  // sorted, includes the identity
  std::vector<Elem> gens;

  std::size_t order() const { return elems.size(); }
  bool contains(Elem a) const {
    return std::binary_search(elems.begin(), elems.end(), a);
  }
  bool contains_all(const std::vector<Elem>& others) const;
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

Subgroup subgroup_from_elems(const FiniteGroup& g, std::vector<Elem> elems);
Subgroup closure(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup frattini(const FiniteGroup& g);

std::vector<Elem> conjugate_set(const FiniteGroup& g,
                                const std::vector<Elem>& elems, Elem t);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, Elem t);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& s);
Subgroup centralizer(const FiniteGroup& g, Elem a);

/// Quotient G/N with its projection (element -> coset id) and a section
/// (coset id -> least coset representative). The coset of the identity gets
/// id 0 and cosets are numbered by ascending least representative.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<Elem> to_quotient;
  std::vector<Elem> section;
};
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n);

/// Conjugacy class of cyclic subgroups: the class representative (least
/// element set in its orbit) and the centralizer of the representative.
struct CyclicClass {
  Subgroup rep;
  Subgroup cent;  // C_G(rep)
};
/// One entry per conjugacy class of cyclic subgroups (the trivial subgroup
/// included), ordered by (order, element set).
std::vector<CyclicClass> cyclic_subgroup_classes(const FiniteGroup& g);

/// The (p^d - 1)/(p - 1) subgroups of index p, d the rank of G/Frattini,
/// ordered by element set.
std::vector<Subgroup> index_p_subgroups(const FiniteGroup& g);

/// Complete subgroup list for |G| <= max_order (default p^4 when 0 is
/// passed); throws size_error beyond the bound. Ordered by (order, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    std::size_t max_order = 0);

enum class RepPolicy { Least, Greatest };

/// Representatives of the double cosets A\G/B, one per coset, chosen as the
/// least (or greatest) element in enumeration order. Representatives are
/// listed in the order their cosets are discovered; the cosets partition G.
struct DoubleCosets {
  std::vector<Elem> reps;
  std::vector<std::size_t> sizes;
};
DoubleCosets double_coset_reps(const FiniteGroup& g, const Subgroup& a,
                               const Subgroup& b,
                               RepPolicy policy = RepPolicy::Least);

/// Data for a cyclic section N/S: |N/S| = p^r, a lifted generator, and a
/// discrete-log table sending each element of N to the exponent of its coset
/// with respect to the chosen generator (and -1 outside N).
struct CyclicQuotientData {
  int r = 0;
  std::int64_t modulus = 1;  // p^r
  Elem generator_lift = 0;
  std::vector<std::int32_t> dlog;

  std::int32_t dlog_of(Elem e) const { return dlog[e]; }
};

/// Returns the cyclic-quotient data for N/S (S must be normal in N), or
/// nullopt when N/S is not cyclic -- a value, not an error. When
/// `forced_generator` is given, its coset is used as the generator (throwing
/// contract_error if it does not have full order).
std::optional<CyclicQuotientData> cyclic_quotient(
    const FiniteGroup& g, const Subgroup& n, const Subgroup& s,
    std::optional<Elem> forced_generator = std::nullopt);

}  // namespace whk
