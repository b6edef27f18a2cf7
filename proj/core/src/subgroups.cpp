#include "whk/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace whk {

namespace {

// Deterministic generating set: scan elements in order, keep the ones that
// enlarge the closure.
std::vector<Elem> greedy_gens(const FiniteGroup& g, const std::vector<Elem>& elems) {
  std::vector<Elem> gens;
  std::size_t covered = 1;
  for (Elem e : elems) {
    if (covered == elems.size()) break;
    if (e == 0) continue;
    gens.push_back(e);
    std::size_t now = g.closure_elems(gens).size();
    if (now == covered)
      gens.pop_back();
    else
      covered = now;
  }
  return gens;
}

}  // namespace

bool Subgroup::contains_all(const std::vector<Elem>& others) const {
  return std::includes(elems.begin(), elems.end(), others.begin(), others.end());
}

Subgroup subgroup_from_elems(const FiniteGroup& g, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup s{&g, std::move(elems), {}};
  s.gens = greedy_gens(g, s.elems);
  return s;
}

Subgroup closure(const FiniteGroup& g, std::span<const Elem> gens) {
  return subgroup_from_elems(g, g.closure_elems(gens));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return subgroup_from_elems(g, {0});
}

Subgroup full_subgroup(const FiniteGroup& g) {
  return subgroup_from_elems(g, g.elements());
}

Subgroup center(const FiniteGroup& g) {
  return subgroup_from_elems(g, g.center_elems());
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  return subgroup_from_elems(g, g.derived_elems());
}

Subgroup frattini(const FiniteGroup& g) {
  return subgroup_from_elems(g, g.frattini_elems());
}

std::vector<Elem> conjugate_set(const FiniteGroup& g,
                                const std::vector<Elem>& elems, Elem t) {
  std::vector<Elem> out;
  out.reserve(elems.size());
  Elem ti = g.inverse(t);
  for (Elem e : elems) out.push_back(g.mul(g.mul(t, e), ti));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, Elem t) {
  Subgroup out{&g, conjugate_set(g, s.elems, t), {}};
  out.gens = greedy_gens(g, out.elems);
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (Elem t : g.generators())
    for (Elem e : s.gens)
      if (!s.contains(g.conjugate(e, t))) return false;
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Elem> out;
  for (Elem t : g.elements()) {
    bool ok = true;
    for (Elem e : s.gens)
      if (!s.contains(g.conjugate(e, t))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(t);
  }
  return subgroup_from_elems(g, std::move(out));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& s) {
  std::vector<Elem> out;
  for (Elem t : g.elements()) {
    bool ok = true;
    for (Elem e : s.gens)
      if (g.mul(t, e) != g.mul(e, t)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(t);
  }
  return subgroup_from_elems(g, std::move(out));
}

Subgroup centralizer(const FiniteGroup& g, Elem a) {
  std::vector<Elem> out;
  for (Elem t : g.elements())
    if (g.mul(t, a) == g.mul(a, t)) out.push_back(t);
  return subgroup_from_elems(g, std::move(out));
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw contract_error("quotient by a non-normal subgroup");
  const std::size_t q = g.order() / n.order();
  if (q > kMaxTableOrder) throw size_error("quotient group too large for a coset table");

  std::vector<Elem> coset_of(g.order(), static_cast<Elem>(q));
  std::vector<Elem> reps;
  reps.reserve(q);
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (coset_of[a] != q) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    for (Elem s : n.elems) coset_of[g.mul(static_cast<Elem>(a), s)] = id;
  }
  std::vector<Elem> table(q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      table[x * q + y] = coset_of[g.mul(reps[x], reps[y])];
  QuotientGroup out{FiniteGroup::from_table(g.prime(), q, std::move(table)),
                    std::move(coset_of), std::move(reps)};
  return out;
}

std::vector<CyclicClass> cyclic_subgroup_classes(const FiniteGroup& g) {
  // All cyclic subgroups as element sets.
  std::set<std::vector<Elem>> cyc;
  for (Elem a : g.elements()) {
    std::vector<Elem> h;
    Elem x = 0;
    do {
      h.push_back(x);
      x = g.mul(x, a);
    } while (x != 0);
    std::sort(h.begin(), h.end());
    cyc.insert(std::move(h));
  }
  // Partition into conjugacy classes; the representative is the least
  // element set of the orbit.
  std::set<std::vector<Elem>> seen;
  std::vector<CyclicClass> classes;
  for (const auto& set : cyc) {
    if (seen.count(set)) continue;
    std::vector<std::vector<Elem>> orbit{set};
    seen.insert(set);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem t : g.generators()) {
        auto c = conjugate_set(g, orbit[i], t);
        if (seen.insert(c).second) orbit.push_back(std::move(c));
      }
    const std::vector<Elem>& least = *std::min_element(orbit.begin(), orbit.end());
    Subgroup rep = subgroup_from_elems(g, least);
    Subgroup cent;
    if (rep.order() == 1) {
      cent = full_subgroup(g);
    } else {
      // any generator of the representative determines the centralizer
      Elem a = 0;
      for (Elem e : rep.elems)
        if (g.element_order(e) == static_cast<int>(rep.order())) {
          a = e;
          break;
        }
      cent = centralizer(g, a);
    }
    classes.push_back(CyclicClass{std::move(rep), std::move(cent)});
  }
  std::sort(classes.begin(), classes.end(), [](const CyclicClass& x, const CyclicClass& y) {
    return std::make_pair(x.rep.order(), x.rep.elems) <
           std::make_pair(y.rep.order(), y.rep.elems);
  });
  return classes;
}

std::vector<Subgroup> index_p_subgroups(const FiniteGroup& g) {
  const int p = g.prime();
  QuotientGroup fq = quotient_group(g, frattini(g));
  const FiniteGroup& v = fq.group;  // elementary abelian of rank d
  // Greedy basis of V as an F_p vector space, with coordinates for every
  // element obtained by spanning all combinations.
  std::vector<Elem> basis;
  {
    std::vector<char> in_span(v.order(), 0);
    in_span[0] = 1;
    for (Elem e : v.elements()) {
      if (in_span[e]) continue;
      basis.push_back(e);
      std::vector<Elem> cl = v.closure_elems(basis);
      std::fill(in_span.begin(), in_span.end(), 0);
      for (Elem x : cl) in_span[x] = 1;
    }
  }
  const int d = static_cast<int>(basis.size());
  std::vector<std::vector<int>> coord(v.order());
  {
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    for (;;) {
      Elem e = 0;
      for (int i = 0; i < d; ++i) e = v.mul(e, v.power(basis[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]));
      coord[e] = c;
      int i = d - 1;
      for (; i >= 0; --i) {
        if (++c[static_cast<std::size_t>(i)] < p) break;
        c[static_cast<std::size_t>(i)] = 0;
      }
      if (i < 0) break;
    }
  }
  // Normalized functionals (first nonzero coefficient 1), lexicographic.
  std::vector<Subgroup> out;
  std::vector<int> psi(static_cast<std::size_t>(d), 0);
  for (;;) {
    int i = d - 1;
    for (; i >= 0; --i) {
      if (++psi[static_cast<std::size_t>(i)] < p) break;
      psi[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
    int first = 0;
    while (first < d && psi[static_cast<std::size_t>(first)] == 0) ++first;
    if (psi[static_cast<std::size_t>(first)] != 1) continue;  // normalization
    std::vector<Elem> elems;
    for (std::size_t a = 0; a < g.order(); ++a) {
      const std::vector<int>& c = coord[fq.to_quotient[a]];
      int val = 0;
      for (int t = 0; t < d; ++t) val = (val + psi[static_cast<std::size_t>(t)] * c[static_cast<std::size_t>(t)]) % p;
      if (val == 0) elems.push_back(static_cast<Elem>(a));
    }
    out.push_back(subgroup_from_elems(g, std::move(elems)));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elems < b.elems; });
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_order) {
  if (max_order == 0)
    max_order = static_cast<std::size_t>(ipow(g.prime(), 4));
  if (g.order() > max_order)
    throw size_error(
        "all_subgroups: order " + std::to_string(g.order()) +
        " exceeds the bound " + std::to_string(max_order) +
        " (use the extra-special fast path or raise the bound)");
  std::set<std::vector<Elem>> found;
  std::vector<std::vector<Elem>> queue;
  found.insert({0});
  queue.push_back({0});
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<Elem> base = queue[i];
    for (Elem a : g.elements()) {
      if (std::binary_search(base.begin(), base.end(), a)) continue;
      std::vector<Elem> gens = base;
      gens.push_back(a);
      std::vector<Elem> cl = g.closure_elems(gens);
      if (found.insert(cl).second) queue.push_back(std::move(cl));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& elems : found) out.push_back(subgroup_from_elems(g, elems));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::make_pair(a.order(), a.elems) < std::make_pair(b.order(), b.elems);
  });
  return out;
}

DoubleCosets double_coset_reps(const FiniteGroup& g, const Subgroup& a,
                               const Subgroup& b, RepPolicy policy) {
  DoubleCosets out;
  std::vector<char> visited(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    Elem x = policy == RepPolicy::Least ? static_cast<Elem>(i)
                                        : static_cast<Elem>(g.order() - 1 - i);
    if (visited[x]) continue;
    std::size_t size = 0;
    for (Elem u : a.elems) {
      Elem ux = g.mul(u, x);
      for (Elem v : b.elems) {
        Elem y = g.mul(ux, v);
        if (!visited[y]) {
          visited[y] = 1;
          ++size;
        }
      }
    }
    out.reps.push_back(x);
    out.sizes.push_back(size);
  }
  return out;
}

std::optional<CyclicQuotientData> cyclic_quotient(const FiniteGroup& g,
                                                  const Subgroup& n,
                                                  const Subgroup& s,
                                                  std::optional<Elem> forced_generator) {
  if (!n.contains_all(s.elems)) throw contract_error("cyclic_quotient: S is not inside N");
  for (Elem t : n.gens)
    for (Elem e : s.gens)
      if (!s.contains(g.conjugate(e, t)))
        throw contract_error("cyclic_quotient: S is not normal in N");

  const std::size_t q = n.order() / s.order();
  // Cosets of S in N, numbered by ascending least representative.
  std::vector<std::int32_t> coset_of(g.order(), -1);
  std::vector<Elem> reps;
  for (Elem a : n.elems) {
    if (coset_of[a] >= 0) continue;
    std::int32_t id = static_cast<std::int32_t>(reps.size());
    reps.push_back(a);
    for (Elem e : s.elems) coset_of[g.mul(a, e)] = id;
  }
  auto cmul = [&](std::int32_t x, std::int32_t y) {
    return coset_of[g.mul(reps[static_cast<std::size_t>(x)], reps[static_cast<std::size_t>(y)])];
  };
  auto coset_order = [&](std::int32_t c) {
    std::int32_t x = c;
    std::size_t ord = 1;
    while (x != 0) {
      x = cmul(x, c);
      ++ord;
    }
    return c == 0 ? std::size_t{1} : ord;
  };

  std::int32_t gen = -1;
  if (forced_generator) {
    if (coset_of[*forced_generator] < 0)
      throw contract_error("cyclic_quotient: forced generator is outside N");
    gen = coset_of[*forced_generator];
    if (coset_order(gen) != q)
      throw contract_error("cyclic_quotient: forced generator has wrong order");
  } else {
    for (std::size_t c = 0; c < q; ++c)
      if (coset_order(static_cast<std::int32_t>(c)) == q) {
        gen = static_cast<std::int32_t>(c);
        break;
      }
    if (gen < 0) return std::nullopt;  // not cyclic
  }

  CyclicQuotientData data;
  data.modulus = static_cast<std::int64_t>(q);
  data.r = plog(data.modulus, g.prime());
  data.generator_lift = forced_generator ? *forced_generator
                                         : reps[static_cast<std::size_t>(gen)];
  std::vector<std::int32_t> dlog_coset(q, -1);
  std::int32_t x = 0;
  for (std::size_t k = 0; k < q; ++k) {
    if (dlog_coset[static_cast<std::size_t>(x)] >= 0)
      throw contract_error("cyclic_quotient: generator walk revisited a coset");
    dlog_coset[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(k);
    x = cmul(x, gen);
  }
  data.dlog.assign(g.order(), -1);
  for (Elem e : n.elems) data.dlog[e] = dlog_coset[static_cast<std::size_t>(coset_of[e])];
  return data;
}

}  // namespace whk
