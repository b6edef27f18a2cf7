#pragma once

#include "whk/subgroups.hpp"

namespace whk {

/// A genetic subgroup S of P with its normalizer data. For odd p the section
/// N_P(S)/S is cyclic and coincides with its center, so Z_P(S) = N_P(S); the
/// constructor asserts this. The cyclic-quotient data fixes a generator coset
/// and discrete logs, turning component values into integers mod p^r.
struct GeneticEntry {
  Subgroup s;
  Subgroup n;  // N_P(S)
  Subgroup z;  // Z_P(S); equals n for odd p
  CyclicQuotientData q;

  std::int64_t modulus() const { return q.modulus; }
};

struct GeneticBasis {
  enum class Provenance { General, EsAes };
  const FiniteGroup* parent = nullptr;
  std::vector<GeneticEntry> entries;
  Provenance provenance = Provenance::General;

  std::size_t size() const { return entries.size(); }
};

/// Builds the entry data (normalizer, section, discrete logs) for a genetic
/// subgroup; throws contract_error when the normalizer section is not cyclic.
GeneticEntry make_genetic_entry(const FiniteGroup& g, Subgroup s);

/// A subgroup is genetic when N_P(S)/S is cyclic (the odd-p Roquette
/// condition) and every x in P with ^xS n Z_P(S) <= S already normalizes S.
bool is_genetic(const FiniteGroup& g, const Subgroup& s);
/// The equivalent two-sided condition (^xS n Z_P(S) <= S and S^x n Z_P(S) <= S
/// forces ^xS = S); kept separate so the equivalence can be property-tested.
bool is_genetic_twosided(const FiniteGroup& g, const Subgroup& s);

/// Linkage between genetic subgroups: there are x, y in P with
/// ^xT n Z_P(S) <= S and ^yS n Z_P(T) <= T. Genetic subgroups linked this way
/// carry isomorphic rational irreducible representations.
bool linked(const FiniteGroup& g, const Subgroup& s, const Subgroup& t);

/// Builds a genetic basis by filtering the full subgroup list and picking the
/// least element-set representative in each linkage class. Bounded by the
/// all_subgroups size limit.
GeneticBasis genetic_basis_general(const FiniteGroup& g, std::size_t max_order = 0);

bool is_extra_special(const FiniteGroup& g);
bool is_almost_extra_special(const FiniteGroup& g);

/// Fast path for (almost) extra-special groups: the basis is P itself, all
/// subgroups of index p, and one subgroup Y of maximal order meeting the
/// center trivially (found by backtracking growth of elementary abelian
/// subgroups; any two such Y are linked).
GeneticBasis genetic_basis_es_aes(const FiniteGroup& g);

/// Auto-selects the fast path for (almost) extra-special inputs, the general
/// path otherwise (subject to the subgroup-enumeration bound).
GeneticBasis genetic_basis(const FiniteGroup& g, std::size_t max_order = 0);

/// Kernel of the rational irreducible representation attached to an entry:
/// the intersection of all conjugates of S. Trivial exactly when S meets the
/// center trivially.
Subgroup vs_kernel(const FiniteGroup& g, const GeneticEntry& entry);

/// Q-dimension of the attached irreducible: [P : N_P(S)] * phi(p^r).
std::int64_t vs_dimension(const FiniteGroup& g, const GeneticEntry& entry);

/// Sum of [P : N_P(S)]^2 * phi(p^r) over the basis; equals |P| (the
/// Wedderburn component dimensions of the rational group algebra), a strong
/// independent check on any claimed basis.
std::int64_t block_dimension_sum(const FiniteGroup& g, const GeneticBasis& basis);

enum class Field { Rational, Real };

/// Number of irreducible representations over the field, counted through the
/// basis: each entry contributes one rational irreducible, and
/// (p^r - p^{r-1})/2 real ones (1 when r = 0).
std::int64_t count_irreducibles(const FiniteGroup& g, const GeneticBasis& basis,
                                Field field);

/// Free rank of the Whitehead group: #real irreducibles - #rational ones.
std::int64_t wh_free_rank(const FiniteGroup& g, const GeneticBasis& basis);

}  // namespace whk
