#include "whk/genetic.hpp"

#include <algorithm>
#include <numeric>

namespace whk {

namespace {

// sorted-set intersection, subset-of-S test
bool inter_subset(const std::vector<Elem>& a, const std::vector<Elem>& b,
                  const Subgroup& s) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else {
      if (!s.contains(*ia)) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

void sort_entries(std::vector<GeneticEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const GeneticEntry& a, const GeneticEntry& b) {
              if (a.s.order() != b.s.order()) return a.s.order() > b.s.order();
              return a.s.elems < b.s.elems;
            });
}

}  // namespace

GeneticEntry make_genetic_entry(const FiniteGroup& g, Subgroup s) {
  GeneticEntry e;
  e.n = normalizer(g, s);
  auto q = cyclic_quotient(g, e.n, s);
  if (!q) throw contract_error("genetic entry with non-cyclic normalizer section");
  e.q = std::move(*q);
  e.z = e.n;  // cyclic sections are abelian, so Z_P(S) = N_P(S) for odd p
  e.s = std::move(s);
  return e;
}

bool is_genetic(const FiniteGroup& g, const Subgroup& s) {
  Subgroup n = normalizer(g, s);
  if (!cyclic_quotient(g, n, s)) return false;
  // Z_P(S) = N_P(S) here (cyclic section)
  for (Elem x : g.elements()) {
    std::vector<Elem> xs = conjugate_set(g, s.elems, x);
    if (inter_subset(xs, n.elems, s) && xs != s.elems) return false;
  }
  return true;
}

bool is_genetic_twosided(const FiniteGroup& g, const Subgroup& s) {
  Subgroup n = normalizer(g, s);
  if (!cyclic_quotient(g, n, s)) return false;
  for (Elem x : g.elements()) {
    std::vector<Elem> xs = conjugate_set(g, s.elems, x);
    std::vector<Elem> sx = conjugate_set(g, s.elems, g.inverse(x));
    if (inter_subset(xs, n.elems, s) && inter_subset(sx, n.elems, s) &&
        xs != s.elems)
      return false;
  }
  return true;
}

bool linked(const FiniteGroup& g, const Subgroup& s, const Subgroup& t) {
  Subgroup ns = normalizer(g, s);
  Subgroup nt = normalizer(g, t);
  bool fwd = false, bwd = false;
  for (Elem x : g.elements()) {
    if (!fwd && inter_subset(conjugate_set(g, t.elems, x), ns.elems, s)) fwd = true;
    if (!bwd && inter_subset(conjugate_set(g, s.elems, x), nt.elems, t)) bwd = true;
    if (fwd && bwd) return true;
  }
  return false;
}

GeneticBasis genetic_basis_general(const FiniteGroup& g, std::size_t max_order) {
  std::vector<Subgroup> subs = all_subgroups(g, max_order);
  std::vector<Subgroup> genetic;
  for (Subgroup& s : subs)
    if (is_genetic(g, s)) genetic.push_back(std::move(s));

  // Partition by linkage (an equivalence relation on genetic subgroups) and
  // keep the least element set of each class.
  std::vector<int> cls(genetic.size(), -1);
  std::vector<GeneticEntry> entries;
  for (std::size_t i = 0; i < genetic.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(i);
    std::size_t best = i;
    for (std::size_t j = i + 1; j < genetic.size(); ++j) {
      if (cls[j] >= 0) continue;
      if (linked(g, genetic[i], genetic[j])) {
        cls[j] = static_cast<int>(i);
        if (genetic[j].elems < genetic[best].elems) best = j;
      }
    }
    entries.push_back(make_genetic_entry(g, genetic[best]));
  }
  sort_entries(entries);
  GeneticBasis basis{&g, std::move(entries), GeneticBasis::Provenance::General};
  return basis;
}

bool is_extra_special(const FiniteGroup& g) {
  const int p = g.prime();
  const auto& z = g.center_elems();
  return static_cast<int>(z.size()) == p && z == g.derived_elems() &&
         z == g.frattini_elems();
}

bool is_almost_extra_special(const FiniteGroup& g) {
  const int p = g.prime();
  const auto& z = g.center_elems();
  const auto& d = g.derived_elems();
  if (static_cast<int>(d.size()) != p || d != g.frattini_elems()) return false;
  if (z.size() != static_cast<std::size_t>(p) * p) return false;
  for (Elem e : z)
    if (g.element_order(e) == p * p) return true;  // Z cyclic of order p^2
  return false;
}

namespace {

// Backtracking search for an elementary abelian subgroup of order p^n meeting
// the center trivially: grow commuting order-p generators in ascending
// element order.
bool grow_y(const FiniteGroup& g, const std::vector<Elem>& center,
            std::vector<Elem>& gens, std::vector<Elem>& current,
            std::size_t target, Elem from) {
  if (current.size() == target) return true;
  for (std::size_t cand = from; cand < g.order(); ++cand) {
    Elem a = static_cast<Elem>(cand);
    if (g.element_order(a) != g.prime()) continue;
    if (std::binary_search(current.begin(), current.end(), a)) continue;
    bool commutes = true;
    for (Elem b : gens)
      if (g.mul(a, b) != g.mul(b, a)) {
        commutes = false;
        break;
      }
    if (!commutes) continue;
    // candidate subgroup = current * <a>; must avoid the center
    std::vector<Elem> bigger;
    bigger.reserve(current.size() * static_cast<std::size_t>(g.prime()));
    bool meets_center = false;
    for (Elem s : current) {
      Elem x = s;
      for (int k = 0; k < g.prime(); ++k) {
        bigger.push_back(x);
        if (x != 0 && std::binary_search(center.begin(), center.end(), x)) {
          meets_center = true;
          break;
        }
        x = g.mul(x, a);
      }
      if (meets_center) break;
    }
    if (meets_center) continue;
    std::sort(bigger.begin(), bigger.end());
    gens.push_back(a);
    std::vector<Elem> saved = std::move(current);
    current = std::move(bigger);
    if (grow_y(g, center, gens, current, target, static_cast<Elem>(cand + 1)))
      return true;
    current = std::move(saved);
    gens.pop_back();
  }
  return false;
}

}  // namespace

GeneticBasis genetic_basis_es_aes(const FiniteGroup& g) {
  const int p = g.prime();
  const bool es = is_extra_special(g);
  const bool aes = !es && is_almost_extra_special(g);
  if (!es && !aes)
    throw contract_error("fast-path basis requires an (almost) extra-special group");

  const int k = plog(static_cast<std::int64_t>(g.order()), p);
  const std::size_t n = static_cast<std::size_t>(es ? (k - 1) / 2 : (k - 2) / 2);
  const std::size_t y_order = static_cast<std::size_t>(ipow(p, static_cast<int>(n)));

  std::vector<GeneticEntry> entries;
  entries.push_back(make_genetic_entry(g, full_subgroup(g)));
  for (Subgroup& s : index_p_subgroups(g)) entries.push_back(make_genetic_entry(g, std::move(s)));

  std::vector<Elem> gens, current{0};
  if (!grow_y(g, g.center_elems(), gens, current, y_order, 1))
    throw contract_error("no maximal subgroup avoiding the center was found");
  GeneticEntry y = make_genetic_entry(g, subgroup_from_elems(g, current));
  // N_P(Y) = Z*Y with N_P(Y)/Y isomorphic to the center
  std::vector<Elem> zy = y.s.elems;
  zy.insert(zy.end(), g.center_elems().begin(), g.center_elems().end());
  Subgroup zy_group = closure(g, zy);
  if (!(y.n == zy_group) || y.q.modulus != static_cast<std::int64_t>(g.center_elems().size()))
    throw contract_error("maximal center-avoiding subgroup has unexpected normalizer");
  entries.push_back(std::move(y));

  sort_entries(entries);
  GeneticBasis basis{&g, std::move(entries), GeneticBasis::Provenance::EsAes};
  return basis;
}

GeneticBasis genetic_basis(const FiniteGroup& g, std::size_t max_order) {
  if (is_extra_special(g) || is_almost_extra_special(g))
    return genetic_basis_es_aes(g);
  return genetic_basis_general(g, max_order);
}

Subgroup vs_kernel(const FiniteGroup& g, const GeneticEntry& entry) {
  std::vector<Elem> inter = entry.s.elems;
  for (Elem x : g.elements()) {
    std::vector<Elem> xs = conjugate_set(g, entry.s.elems, x);
    std::vector<Elem> next;
    std::set_intersection(inter.begin(), inter.end(), xs.begin(), xs.end(),
                          std::back_inserter(next));
    inter = std::move(next);
    if (inter.size() == 1) break;
  }
  return subgroup_from_elems(g, std::move(inter));
}

std::int64_t vs_dimension(const FiniteGroup& g, const GeneticEntry& entry) {
  std::int64_t index = static_cast<std::int64_t>(g.order() / entry.n.order());
  std::int64_t phi = entry.q.r == 0
                         ? 1
                         : entry.q.modulus - entry.q.modulus / g.prime();
  return index * phi;
}

std::int64_t block_dimension_sum(const FiniteGroup& g, const GeneticBasis& basis) {
  std::int64_t total = 0;
  for (const GeneticEntry& e : basis.entries) {
    std::int64_t index = static_cast<std::int64_t>(g.order() / e.n.order());
    std::int64_t phi = e.q.r == 0 ? 1 : e.q.modulus - e.q.modulus / g.prime();
    total += index * index * phi;
  }
  return total;
}

std::int64_t count_irreducibles(const FiniteGroup& g, const GeneticBasis& basis,
                                Field field) {
  if (field == Field::Rational) return static_cast<std::int64_t>(basis.size());
  std::int64_t total = 0;
  for (const GeneticEntry& e : basis.entries)
    total += e.q.r == 0 ? 1 : (e.q.modulus - e.q.modulus / g.prime()) / 2;
  return total;
}

std::int64_t wh_free_rank(const FiniteGroup& g, const GeneticBasis& basis) {
  return count_irreducibles(g, basis, Field::Real) -
         count_irreducibles(g, basis, Field::Rational);
}

}  // namespace whk
