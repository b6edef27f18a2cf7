#include <doctest.h>

#include <map>
#include <set>

#include "whk/constructors.hpp"
#include "whk/subgroups.hpp"

using namespace whk;

TEST_CASE("closure") {
  FiniteGroup g = make_M(3);
  CHECK(closure(g, {}).order() == 1);
  std::vector<Elem> xy{g.generators()[0], g.generators()[1]};
  CHECK(closure(g, xy).order() == 27);
  std::vector<Elem> z{g.generators()[2]};
  Subgroup zc = closure(g, z);
  CHECK(zc.order() == 3);
  CHECK(zc == center(g));
}

TEST_CASE("characteristic subgroups") {
  FiniteGroup ea = elementary_abelian(3, 2);
  CHECK(center(ea).order() == 9);
  FiniteGroup es = extra_special(3, 2, 1);
  CHECK(derived_subgroup(es) == frattini(es));
  CHECK(derived_subgroup(es) == center(es));
  CHECK(center(es).order() == 3);
  FiniteGroup aes = almost_extra_special(3, 1);
  Subgroup z = center(aes);
  CHECK(z.order() == 9);
  bool cyclic_center = false;
  for (Elem e : z.elems)
    if (aes.element_order(e) == 9) cyclic_center = true;
  CHECK(cyclic_center);
}

TEST_CASE("normalizer and centralizer") {
  FiniteGroup g = extra_special(3, 1, 1);
  CHECK(normalizer(g, full_subgroup(g)).order() == g.order());
  // a non-normal order-3 subgroup: normalizer = centralizer of order 9
  for (Elem a : g.elements()) {
    if (a == 0) continue;
    Subgroup q = closure(g, std::vector<Elem>{a});
    if (is_normal(g, q)) continue;
    Subgroup n = normalizer(g, q);
    CHECK(n == centralizer(g, q));
    CHECK(n.order() == 9);
  }
  FiniteGroup aes = almost_extra_special(3, 1);
  CHECK(centralizer(aes, center(aes)).order() == aes.order());
}

TEST_CASE("quotient groups") {
  FiniteGroup g = extra_special(3, 1, 1);
  QuotientGroup triv = quotient_group(g, trivial_subgroup(g));
  CHECK(triv.group.order() == g.order());
  CHECK(triv.group.exponent() == g.exponent());

  QuotientGroup byz = quotient_group(g, center(g));
  CHECK(byz.group.order() == 9);
  CHECK(byz.group.exponent() == 3);
  CHECK(byz.group.derived_elems().size() == 1);  // elementary abelian rank 2

  FiniteGroup aes = almost_extra_special(3, 1);
  QuotientGroup byphi = quotient_group(aes, frattini(aes));
  CHECK(byphi.group.order() == 27);
  CHECK(byphi.group.exponent() == 3);
  CHECK(byphi.group.derived_elems().size() == 1);  // elementary abelian rank 3

  // the projection is a homomorphism with kernel N
  for (Elem a : g.elements())
    for (Elem b : g.elements())
      CHECK(byz.to_quotient[g.mul(a, b)] ==
            byz.group.mul(byz.to_quotient[a], byz.to_quotient[b]));
  std::size_t kernel = 0;
  for (Elem a : g.elements())
    if (byz.to_quotient[a] == 0) ++kernel;
  CHECK(kernel == center(g).order());
  CHECK(g.order() == byz.group.order() * center(g).order());

  // quotient by a non-normal subgroup is a contract violation
  for (Elem a : g.elements()) {
    if (a == 0) continue;
    Subgroup q = closure(g, std::vector<Elem>{a});
    if (!is_normal(g, q)) {
      CHECK_THROWS_AS(quotient_group(g, q), contract_error);
      break;
    }
  }
}

TEST_CASE("cyclic subgroup classes") {
  // abelian groups: every cyclic subgroup is its own class
  CHECK(cyclic_subgroup_classes(elementary_abelian(3, 2)).size() == 5);
  CHECK(cyclic_subgroup_classes(cyclic(3, 2)).size() == 3);

  // brute-force oracle for M(3): enumerate cyclic subgroups by element sets,
  // partition by the full conjugation action
  FiniteGroup g = make_M(3);
  std::set<std::vector<Elem>> cyc;
  for (Elem a : g.elements()) {
    std::vector<Elem> h;
    Elem x = 0;
    do {
      h.push_back(x);
      x = g.mul(x, a);
    } while (x != 0);
    std::sort(h.begin(), h.end());
    cyc.insert(h);
  }
  std::set<std::vector<Elem>> seen;
  std::size_t class_count = 0;
  for (const auto& s : cyc) {
    if (seen.count(s)) continue;
    ++class_count;
    for (Elem t : g.elements()) seen.insert(conjugate_set(g, s, t));
  }

  std::vector<CyclicClass> classes = cyclic_subgroup_classes(g);
  CHECK(classes.size() == class_count);
  CHECK(class_count == 6);  // frozen from the oracle above

  // each representative is the least set in its class, centralizers correct
  for (const CyclicClass& cls : classes) {
    for (Elem t : g.elements()) {
      std::vector<Elem> conj = conjugate_set(g, cls.rep.elems, t);
      CHECK(cls.rep.elems <= conj);
    }
    if (cls.rep.order() > 1) {
      Elem a = cls.rep.gens.front();
      CHECK(cls.cent == centralizer(g, a));
    }
  }
}

TEST_CASE("index p subgroups") {
  CHECK(index_p_subgroups(elementary_abelian(3, 2)).size() == 4);
  CHECK(index_p_subgroups(cyclic(3, 2)).size() == 1);
  std::vector<Subgroup> big = index_p_subgroups(extra_special(3, 2, 1));
  CHECK(big.size() == 40);  // (3^4 - 1)/2
  FiniteGroup es = extra_special(3, 2, 1);
  Subgroup phi = frattini(es);
  for (const Subgroup& s : big) {
    CHECK(s.order() * 3 == es.order());
    CHECK(s.contains_all(phi.elems));
  }
}

TEST_CASE("all subgroups") {
  CHECK(all_subgroups(elementary_abelian(3, 2)).size() == 6);
  CHECK(all_subgroups(cyclic(3, 2)).size() == 3);

  // oracle for M(3): subgroups of a group of order p^3 need at most two
  // generators, so pair closures find everything
  FiniteGroup g = make_M(3);
  std::set<std::vector<Elem>> oracle;
  for (Elem a : g.elements())
    for (Elem b : g.elements()) {
      std::vector<Elem> pair{a, b};
      oracle.insert(g.closure_elems(pair));
    }
  std::vector<Subgroup> subs = all_subgroups(g);
  CHECK(subs.size() == oracle.size());
  CHECK(oracle.size() == 19);  // frozen from the oracle above
  for (const Subgroup& s : subs) CHECK(oracle.count(s.elems) == 1);

  CHECK_THROWS_AS(all_subgroups(extra_special(3, 2, 1)), size_error);
}

TEST_CASE("double cosets") {
  FiniteGroup g = make_M(3);
  Subgroup whole = full_subgroup(g);
  DoubleCosets one = double_coset_reps(g, whole, whole);
  CHECK(one.reps == std::vector<Elem>{0});

  // abelian: double cosets are cosets of AB
  FiniteGroup ea = elementary_abelian(3, 2);
  std::vector<Subgroup> ea_subs = all_subgroups(ea);
  for (const Subgroup& a : ea_subs)
    for (const Subgroup& b : ea_subs) {
      std::vector<Elem> ab;
      for (Elem x : a.elems)
        for (Elem y : b.elems) ab.push_back(ea.mul(x, y));
      std::sort(ab.begin(), ab.end());
      ab.erase(std::unique(ab.begin(), ab.end()), ab.end());
      CHECK(double_coset_reps(ea, a, b).reps.size() == ea.order() / ab.size());
    }

  // partitions: sizes sum to |G|, cosets cover G without overlap; exhaustive
  // over all subgroup pairs up to order 3^4
  for (const FiniteGroup& grp :
       {make_M(3), cyclic(3, 2), almost_extra_special(3, 1)}) {
    std::vector<Subgroup> subs = all_subgroups(grp);
    for (const Subgroup& a : subs)
      for (const Subgroup& b : subs) {
        DoubleCosets dc = double_coset_reps(grp, a, b);
        std::size_t total = 0;
        for (std::size_t s : dc.sizes) total += s;
        REQUIRE(total == grp.order());
        std::vector<int> owner(grp.order(), -1);
        bool overlap = false;
        for (std::size_t ci = 0; ci < dc.reps.size(); ++ci) {
          std::size_t fresh = 0;
          for (Elem u : a.elems) {
            Elem ux = grp.mul(u, dc.reps[ci]);
            for (Elem v : b.elems) {
              Elem y = grp.mul(ux, v);
              if (owner[y] < 0) {
                owner[y] = static_cast<int>(ci);
                ++fresh;
              } else if (owner[y] != static_cast<int>(ci)) {
                overlap = true;
              }
            }
          }
          REQUIRE(fresh == dc.sizes[ci]);
        }
        REQUIRE(!overlap);
      }
  }

  // policy changes the chosen representatives but not the partition shape
  Subgroup za = center(g);
  DoubleCosets least = double_coset_reps(g, za, za, RepPolicy::Least);
  DoubleCosets greatest = double_coset_reps(g, za, za, RepPolicy::Greatest);
  CHECK(least.reps.size() == greatest.reps.size());
}

TEST_CASE("cyclic quotients") {
  FiniteGroup c9 = cyclic(3, 2);
  auto full = cyclic_quotient(c9, full_subgroup(c9), trivial_subgroup(c9));
  REQUIRE(full.has_value());
  CHECK(full->r == 2);
  CHECK(full->modulus == 9);
  // dlog walks the generator coset
  Elem gen = full->generator_lift;
  Elem x = 0;
  for (int k = 0; k < 9; ++k) {
    CHECK(full->dlog_of(x) == k);
    x = c9.mul(x, gen);
  }

  auto same = cyclic_quotient(c9, center(c9), center(c9));
  REQUIRE(same.has_value());
  CHECK(same->r == 0);

  // not cyclic is a value, not an error
  FiniteGroup ea = elementary_abelian(3, 2);
  CHECK(!cyclic_quotient(ea, full_subgroup(ea), trivial_subgroup(ea)).has_value());

  // S must be normal in N
  FiniteGroup es = extra_special(3, 1, 1);
  for (Elem a : es.elements()) {
    if (a == 0) continue;
    Subgroup q = closure(es, std::vector<Elem>{a});
    if (!is_normal(es, q)) {
      CHECK_THROWS_AS(cyclic_quotient(es, full_subgroup(es), q), contract_error);
      break;
    }
  }
}
