#include "whk/cl1.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include <json.hpp>

namespace whk {

namespace {

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

// Quotient of a subgroup C by a normal subgroup H <= C, as a table-backed
// group with projection and least-representative section.
struct SubQuotient {
  FiniteGroup group;
  std::vector<std::int32_t> to_q;  // parent elem -> coset id, -1 outside C
  std::vector<Elem> section;       // coset id -> least parent representative
};

SubQuotient subquotient(const FiniteGroup& g, const Subgroup& c, const Subgroup& h) {
  for (Elem t : c.gens)
    for (Elem e : h.gens)
      if (!h.contains(g.conjugate(e, t)))
        throw contract_error("subquotient: H is not normal in C");
  const std::size_t q = c.order() / h.order();
  std::vector<std::int32_t> to_q(g.order(), -1);
  std::vector<Elem> reps;
  reps.reserve(q);
  for (Elem a : c.elems) {
    if (to_q[a] >= 0) continue;
    std::int32_t id = static_cast<std::int32_t>(reps.size());
    reps.push_back(a);
    for (Elem e : h.elems) to_q[g.mul(a, e)] = id;
  }
  std::vector<Elem> table(q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      table[x * q + y] = static_cast<Elem>(to_q[g.mul(reps[x], reps[y])]);
  return SubQuotient{FiniteGroup::from_table(g.prime(), q, std::move(table)),
                     std::move(to_q), std::move(reps)};
}

// Minimal generating set of a p-group: a basis of Q/Frattini(Q), lifted by
// least coset representatives.
std::vector<Elem> minimal_generating_set(const FiniteGroup& q) {
  if (q.order() == 1) return {};
  QuotientGroup v = quotient_group(q, frattini(q));
  std::vector<Elem> basis;
  std::size_t covered = 1;
  for (Elem e : v.group.elements()) {
    if (covered == v.group.order()) break;
    if (e == 0) continue;
    basis.push_back(e);
    std::size_t now = v.group.closure_elems(basis).size();
    if (now == covered)
      basis.pop_back();
    else
      covered = now;
  }
  std::vector<Elem> out;
  out.reserve(basis.size());
  for (Elem e : basis) out.push_back(v.section[e]);
  return out;
}

}  // namespace

std::int64_t GammaGroup::order() const {
  std::int64_t o = 1;
  for (std::int64_t m : moduli) o *= m;
  return o;
}

GammaGroup build_gamma(const GeneticBasis& basis) {
  GammaGroup gamma;
  gamma.parent = basis.parent;
  gamma.moduli.reserve(basis.size());
  for (const GeneticEntry& e : basis.entries) gamma.moduli.push_back(e.modulus());
  return gamma;
}

RelationVector u_vector(const FiniteGroup& g, const GeneticBasis& basis,
                        const Subgroup& h, Elem gelem, RepPolicy policy) {
  for (Elem e : h.gens)
    if (g.mul(gelem, e) != g.mul(e, gelem))
      throw contract_error("u_vector: g does not centralize H");

  RelationVector out;
  out.e.assign(basis.size(), 0);
  out.h_gen = h.order() == 1 ? g.identity() : h.gens.front();
  out.g = gelem;

  const int gord = g.element_order(gelem);
  std::optional<Subgroup> hg;  // H<g>, built lazily

  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const GeneticEntry& entry = basis.entries[idx];
    const std::int64_t mod = entry.modulus();
    if (mod == 1) continue;

    if (entry.n.order() == g.order()) {
      // S is normal: one double coset, m = 1, l = g.
      bool h_in_s = true;
      for (Elem e : h.gens)
        if (!entry.s.contains(e)) {
          h_in_s = false;
          break;
        }
      if (h_in_s) out.e[idx] = entry.q.dlog_of(gelem) % mod;
      continue;
    }

    if (!hg) {
      std::vector<Elem> gens = h.gens;
      gens.push_back(gelem);
      hg = closure(g, gens);
    }
    DoubleCosets dc = double_coset_reps(g, *hg, entry.n, policy);
    std::int64_t total = 0;
    for (Elem x : dc.reps) {
      // keep the coset only when H^x n N_P(S) <= S
      std::vector<Elem> hx = conjugate_set(g, h.elems, g.inverse(x));
      if (!inter_subset(hx, entry.n.elems, entry.s)) continue;

      // m = [<g> : <g> n (H * ^xN)]
      std::vector<char> in_k(g.order(), 0);
      for (Elem he : h.elems) {
        for (Elem ne : entry.n.elems) in_k[g.mul(he, g.conjugate(ne, x))] = 1;
      }
      int m = 0;
      {
        Elem pw = gelem;
        for (int j = 1; j <= gord; ++j) {
          if (in_k[pw]) {
            m = j;
            break;
          }
          pw = g.mul(pw, gelem);
        }
      }
      if (m == 0) throw contract_error("u_vector: <g> does not meet H*^xN");
      // <g> n (H * ^xN) is a subgroup of <g>, so the first power inside it
      // generates the intersection and m is its index
      if (gord % m != 0)
        throw contract_error("u_vector: intersection with <g> is not a subgroup");
      // g^m = h0 * ^x(l) with h0 in H, l in N; the class of l in N/S is
      // independent of the choice.
      Elem gm = g.power(gelem, m);
      Elem xinv = g.inverse(x);
      bool found = false;
      for (Elem h0 : h.elems) {
        Elem l = g.conjugate(g.mul(g.inverse(h0), gm), xinv);
        if (entry.n.contains(l)) {
          total += entry.q.dlog_of(l);
          found = true;
          break;
        }
      }
      if (!found)
        throw contract_error("u_vector: no decomposition g^m = h * ^x(l) found");
    }
    out.e[idx] = ((total % mod) + mod) % mod;
  }
  return out;
}

std::vector<RelationVector> relation_generators(
    const FiniteGroup& g, const GeneticBasis& basis, int workers,
    GeneratorSetMode mode,
    const std::function<void(std::size_t, std::size_t)>& progress) {
  std::vector<CyclicClass> classes = cyclic_subgroup_classes(g);

  struct Job {
    const Subgroup* h;
    Elem gelem;
  };
  std::vector<Job> jobs;
  for (const CyclicClass& cls : classes) {
    if (mode == GeneratorSetMode::FullCentralizer) {
      for (Elem c : cls.cent.elems) jobs.push_back(Job{&cls.rep, c});
      continue;
    }
    SubQuotient sq = subquotient(g, cls.cent, cls.rep);
    for (Elem qgen : minimal_generating_set(sq.group))
      jobs.push_back(Job{&cls.rep, sq.section[qgen]});
  }

  std::vector<RelationVector> out(jobs.size());
  std::atomic<std::size_t> done{0};
  parallel_for(jobs.size(), workers, [&](std::size_t i) {
    out[i] = u_vector(g, basis, *jobs[i].h, jobs[i].gelem);
    std::size_t d = done.fetch_add(1) + 1;
    if (progress) progress(d, jobs.size());
  });
  return out;
}

AbelianInvariants smith_quotient(const GammaGroup& gamma,
                                 const std::vector<RelationVector>& relations) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(relations.size());
  for (const RelationVector& r : relations) rows.push_back(r.e);
  return smith_quotient(gamma.parent->prime(), gamma.moduli, rows);
}

AbelianInvariants cl1_structure(const FiniteGroup& g, const Cl1Options& opts) {
  GeneticBasis basis = genetic_basis(g, opts.max_order);
  GammaGroup gamma = build_gamma(basis);
  std::vector<RelationVector> rels = relation_generators(
      g, basis, opts.workers, GeneratorSetMode::Minimal, opts.progress);
  return smith_quotient(gamma, rels);
}

DeflationData deflation(const FiniteGroup& g, const Subgroup& n,
                        const Cl1Options& opts) {
  if (!is_normal(g, n)) throw contract_error("deflation by a non-normal subgroup");
  DeflationData out;
  out.n = n;

  GeneticBasis basis = genetic_basis(g, opts.max_order);
  GammaGroup gamma = build_gamma(basis);
  std::vector<RelationVector> rels = relation_generators(
      g, basis, opts.workers, GeneratorSetMode::Minimal, opts.progress);
  out.cl1_parent = smith_quotient(gamma, rels);

  QuotientGroup q = quotient_group(g, n);

  // Entries with N <= S drop to a genetic basis of P/N; the projection
  // carries each section N_P(S)/S isomorphically, so the quotient-side
  // discrete logs are forced by the images of the chosen generators.
  GeneticBasis qbasis;
  qbasis.parent = &q.group;
  qbasis.provenance = basis.provenance;
  out.component_map.assign(basis.size(), -1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const GeneticEntry& e = basis.entries[i];
    if (!e.s.contains_all(n.elems)) continue;
    std::vector<Elem> s_img, n_img;
    for (Elem x : e.s.elems) s_img.push_back(q.to_quotient[x]);
    for (Elem x : e.n.elems) n_img.push_back(q.to_quotient[x]);
    GeneticEntry qe;
    qe.s = subgroup_from_elems(q.group, std::move(s_img));
    qe.n = subgroup_from_elems(q.group, std::move(n_img));
    Subgroup check = normalizer(q.group, qe.s);
    if (!(check == qe.n))
      throw contract_error("deflation: projected normalizer mismatch");
    auto cq = cyclic_quotient(q.group, qe.n, qe.s,
                              q.to_quotient[e.q.generator_lift]);
    if (!cq || cq->modulus != e.modulus())
      throw contract_error("deflation: projected section is not isomorphic");
    qe.q = std::move(*cq);
    qe.z = qe.n;
    out.component_map[i] = static_cast<int>(qbasis.entries.size());
    qbasis.entries.push_back(std::move(qe));
  }

  GammaGroup qgamma = build_gamma(qbasis);
  std::vector<RelationVector> qrels = relation_generators(
      q.group, qbasis, opts.workers, GeneratorSetMode::Minimal, {});
  out.cl1_quotient = smith_quotient(qgamma, qrels);

  // K = s^-1(R~)/R as a quotient of lattices in Z^k.
  const std::size_t k = gamma.size();
  const int p = g.prime();
  int s = 0;
  for (std::int64_t m : gamma.moduli) s = std::max(s, plog(m, p));
  std::vector<std::vector<std::int64_t>> l2, l1;
  for (const RelationVector& r : qrels) {
    std::vector<std::int64_t> lift(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (out.component_map[i] >= 0)
        lift[i] = r.e[static_cast<std::size_t>(out.component_map[i])];
    l2.push_back(std::move(lift));
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> row(k, 0);
    if (out.component_map[i] < 0) {
      row[i] = 1;  // dropped components map to zero, hence lie in the kernel
      l2.push_back(row);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> d(k, 0);
    d[i] = gamma.moduli[i];
    l2.push_back(d);
    l1.push_back(std::move(d));
  }
  for (const RelationVector& r : rels) l1.push_back(r.e);
  out.kernel = lattice_quotient(p, s, k, std::move(l2), std::move(l1));

  out.surjective = out.cl1_parent.group_order() ==
                   out.kernel.group_order() * out.cl1_quotient.group_order();
  return out;
}

MinimalGenerators minimal_generators(const FiniteGroup& g, const Cl1Options& opts) {
  const int p = g.prime();
  const bool ea =
      g.order() == 1 || (g.exponent() == p && g.derived_elems().size() == 1);
  const bool es_aes = is_extra_special(g) || is_almost_extra_special(g);
  if (!ea && !es_aes)
    throw unsupported_error(
        "minimal_generators supports elementary abelian and (almost) "
        "extra-special groups only");

  GeneticBasis basis = genetic_basis(g, opts.max_order);
  GammaGroup gamma = build_gamma(basis);
  std::vector<RelationVector> rels = relation_generators(
      g, basis, opts.workers, GeneratorSetMode::Minimal, opts.progress);

  MinimalGenerators out;
  out.cl1 = smith_quotient(gamma, rels);

  const std::size_t k = gamma.size();
  int s = 0;
  for (std::int64_t m : gamma.moduli) s = std::max(s, plog(m, p));
  RowSpan span(p, s, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> d(k, 0);
    d[i] = gamma.moduli[i];
    span.insert(std::move(d));
  }
  for (const RelationVector& r : rels) span.insert(r.e);

  // Component labels: index-p entries are numbered in basis order; the
  // center-avoiding entry (if any) is Y.
  std::vector<std::string> labels(k);
  std::vector<std::size_t> candidates;
  std::size_t qcount = 0;
  std::vector<std::size_t> y_components;
  for (std::size_t i = 0; i < k; ++i) {
    const GeneticEntry& e = basis.entries[i];
    if (e.s.order() == g.order()) {
      labels[i] = "P";
    } else if (e.s.order() * static_cast<std::size_t>(p) == g.order()) {
      labels[i] = "Q" + std::to_string(qcount++);
      candidates.push_back(i);
    } else {
      labels[i] = "Y";
      y_components.push_back(i);
    }
  }
  for (std::size_t i : y_components) candidates.push_back(i);

  const int full = static_cast<int>(k) * s;
  for (std::size_t i : candidates) {
    if (span.size_logp() == full) break;
    std::vector<std::int64_t> unit(k, 0);
    unit[i] = 1;
    if (span.contains(unit)) continue;
    span.insert(std::move(unit));
    out.items.push_back(MinimalGenerators::Item{i, labels[i]});
  }
  if (span.size_logp() != full)
    throw contract_error("minimal_generators: canonical vectors do not generate");
  if (out.items.size() != out.cl1.factors.size())
    throw contract_error("minimal_generators: generating set is not minimal");
  return out;
}

WitnessReport witness_w(const FiniteGroup& g, const Cl1Options&) {
  const int p = g.prime();
  const std::int64_t p5 = ipow(p, 5), p6 = ipow(p, 6);
  const bool es_case = is_extra_special(g) &&
                       static_cast<std::int64_t>(g.order()) == p5 &&
                       g.exponent() == p * p;
  const bool aes_case = is_almost_extra_special(g) &&
                        static_cast<std::int64_t>(g.order()) == p6;
  if (!es_case && !aes_case)
    throw contract_error(
        "witness_w requires an extra-special group of order p^5 and exponent "
        "p^2, or an almost extra-special group of order p^6");

  GeneticBasis basis = genetic_basis_es_aes(g);
  GammaGroup gamma = build_gamma(basis);

  WitnessReport rep;
  bool y_found = false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Subgroup& s = basis.entries[i].s;
    bool meets_center = false;
    for (Elem e : s.elems)
      if (e != 0 && std::binary_search(g.center_elems().begin(),
                                       g.center_elems().end(), e)) {
        meets_center = true;
        break;
      }
    if (!meets_center && s.order() > 1) {
      rep.y_component = i;
      y_found = true;
    }
  }
  if (!y_found) throw contract_error("witness_w: no center-avoiding basis entry");
  const Subgroup& y = basis.entries[rep.y_component].s;

  // Find g (a generator of the distinguished cyclic subgroup C of order p^2;
  // the whole center in the almost extra-special case), b (a nontrivial
  // element of Y centralizing C), and a (order p, centralizing C, outside
  // C*Y, with [a,b] generating the derived subgroup). The structured choice
  // always exists; the nested search backtracks over (g, b) for robustness.
  Elem gelem = 0, a = 0, b = 0;
  for (Elem gc : g.elements()) {
    if (g.element_order(gc) != p * p) continue;
    if (aes_case && !std::binary_search(g.center_elems().begin(),
                                        g.center_elems().end(), gc))
      continue;
    std::vector<Elem> cy_gens = y.gens;
    cy_gens.push_back(gc);
    Subgroup cy = closure(g, cy_gens);
    for (Elem bc : y.elems) {
      if (bc == 0 || g.mul(bc, gc) != g.mul(gc, bc)) continue;
      for (Elem ac : g.elements()) {
        if (ac == 0 || g.element_order(ac) != p) continue;
        if (g.mul(ac, gc) != g.mul(gc, ac)) continue;
        if (cy.contains(ac)) continue;
        if (g.commutator(ac, bc) == 0) continue;
        gelem = gc;
        b = bc;
        a = ac;
        break;
      }
      if (a != 0) break;
    }
    if (a != 0) break;
  }
  if (a == 0) throw contract_error("witness_w: no (g, a, b) triple found");

  // w = u_{1,g}^-1 * prod over the p+1 subgroups <a b^alpha>, <b>.
  std::vector<std::int64_t> acc(gamma.size(), 0);
  auto add = [&](const RelationVector& v, std::int64_t sign) {
    for (std::size_t i = 0; i < gamma.size(); ++i)
      acc[i] = ((acc[i] + sign * v.e[i]) % gamma.moduli[i] + gamma.moduli[i]) %
               gamma.moduli[i];
  };
  add(u_vector(g, basis, trivial_subgroup(g), gelem), -1);
  for (int alpha = 0; alpha < p; ++alpha) {
    Elem gen = g.mul(a, g.power(b, alpha));
    add(u_vector(g, basis, closure(g, std::vector<Elem>{gen}), gelem), +1);
  }
  add(u_vector(g, basis, closure(g, std::vector<Elem>{b}), gelem), +1);

  rep.w.e = acc;
  rep.g = gelem;
  rep.a = a;
  rep.b = b;
  rep.hyperplane_components_trivial = true;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i == rep.y_component) continue;
    if (acc[i] != 0) rep.hyperplane_components_trivial = false;
  }
  rep.y_dlog = acc[rep.y_component];
  rep.y_modulus = gamma.moduli[rep.y_component];
  rep.y_value_order =
      rep.y_dlog == 0 ? 1 : rep.y_modulus / std::gcd(rep.y_dlog, rep.y_modulus);
  return rep;
}

WhiteheadSummary whitehead_summary(const FiniteGroup& g, const Cl1Options& opts) {
  WhiteheadSummary out;
  GeneticBasis basis = genetic_basis(g, opts.max_order);
  out.free_rank = wh_free_rank(g, basis);
  const auto& z = g.center_elems();
  out.sk1_equals_cl1 = std::includes(z.begin(), z.end(), g.derived_elems().begin(),
                                     g.derived_elems().end());
  GammaGroup gamma = build_gamma(basis);
  std::vector<RelationVector> rels = relation_generators(
      g, basis, opts.workers, GeneratorSetMode::Minimal, opts.progress);
  out.torsion = smith_quotient(gamma, rels);
  return out;
}

std::string invariants_to_json(const AbelianInvariants& inv, int p) {
  nlohmann::json j;
  j["invariant_factors"] = inv.factors;
  auto rank = inv.elementary_rank();
  if (rank && !inv.factors.empty())
    j["elementary_rank"] = *rank;
  else if (inv.factors.empty())
    j["elementary_rank"] = 0;
  else
    j["elementary_rank"] = nullptr;
  j["order"] = inv.order_string(p);
  return j.dump();
}

AbelianInvariants invariants_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  AbelianInvariants inv;
  inv.factors = j.at("invariant_factors").get<std::vector<std::int64_t>>();
  return inv;
}

}  // namespace whk
