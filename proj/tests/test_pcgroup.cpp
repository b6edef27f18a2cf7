#include <doctest.h>

#include "whk/constructors.hpp"
#include "whk/pcgroup.hpp"

using namespace whk;

namespace {

// x, y, z with yx = xyz, z central: the order-27 exponent-3 group.
FiniteGroup m3() { return make_M(3); }

Elem gen(const FiniteGroup& g, int i) { return g.generators()[static_cast<std::size_t>(i)]; }

}  // namespace

TEST_CASE("collection in M(3)") {
  FiniteGroup g = m3();
  // yx collects to xyz
  const int word_yx[] = {2, 1};
  CHECK(g.exponents(g.collect_word(word_yx)) == std::vector<int>{1, 1, 1});
  // empty word is the identity
  CHECK(g.collect_word({}) == g.identity());
  // x^3 = 1
  const int word_xxx[] = {1, 1, 1};
  CHECK(g.collect_word(word_xxx) == g.identity());
  // inverse letters cancel
  const int word_cancel[] = {2, 1, -1, -2};
  CHECK(g.collect_word(word_cancel) == g.identity());
}

TEST_CASE("collection is a homomorphism from the free monoid") {
  for (const FiniteGroup& g : {make_M(3), make_N(3), almost_extra_special(3, 1)}) {
    SplitMix64 rng(0x5eed);
    const int n = g.pc_ngens();
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<int> u, v;
      for (int i = 0; i < 4; ++i) {
        int letter = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
        if (rng.below(2)) letter = -letter;
        (rng.below(2) ? u : v).push_back(letter);
      }
      std::vector<int> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(g.collect_word(uv) == g.mul(g.collect_word(u), g.collect_word(v)));
    }
  }
}

TEST_CASE("multiply, power, inverse") {
  FiniteGroup c9 = cyclic(3, 2);
  Elem c = gen(c9, 0);
  for (Elem a : c9.elements()) {
    CHECK(c9.mul(a, c9.identity()) == a);
    CHECK(c9.mul(c9.inverse(a), a) == c9.identity());
  }
  CHECK(c9.power(c, 10) == c);          // exponent arithmetic mod 9
  CHECK(c9.power(c, -1) == c9.inverse(c));
  CHECK(c9.element_order(c) == 9);
}

TEST_CASE("N(3) satisfies ^y x = x^{1+p}") {
  FiniteGroup g = make_N(3);
  Elem x = gen(g, 0), y = gen(g, 1);
  CHECK(g.element_order(x) == 9);
  CHECK(g.element_order(y) == 3);
  CHECK(g.conjugate(x, y) == g.power(x, 4));
}

TEST_CASE("conjugation") {
  FiniteGroup g = m3();
  Elem x = gen(g, 0), y = gen(g, 1), z = gen(g, 2);
  for (Elem a : g.elements()) CHECK(g.conjugate(a, g.identity()) == a);
  // ^x y is y*z or y*z^-1 depending on orientation; either way a central shift
  Elem c = g.conjugate(y, x);
  CHECK(c != y);
  CHECK((c == g.mul(y, z) || c == g.mul(y, g.inverse(z))));
  // z is central
  for (Elem t : g.elements()) CHECK(g.conjugate(z, t) == z);
  // ^t a = t a t^-1 on every pair, exhaustive up to order 3^4
  for (const FiniteGroup& grp : {make_M(3), almost_extra_special(3, 1)})
    for (Elem a : grp.elements())
      for (Elem t : grp.elements())
        CHECK(grp.conjugate(a, t) == grp.mul(grp.mul(t, a), grp.inverse(t)));
  // and sampled above
  FiniteGroup big = extra_special(3, 2, 2);
  SplitMix64 rng(0x5eed);
  for (int trial = 0; trial < 2000; ++trial) {
    Elem a = static_cast<Elem>(rng.below(big.order()));
    Elem t = static_cast<Elem>(rng.below(big.order()));
    CHECK(big.conjugate(a, t) == big.mul(big.mul(t, a), big.inverse(t)));
  }
}

TEST_CASE("commutators") {
  FiniteGroup g = m3();
  Elem x = gen(g, 0), y = gen(g, 1);
  for (Elem a : g.elements()) CHECK(g.commutator(a, a) == g.identity());
  // [x,y] generates the center
  Elem c = g.commutator(x, y);
  CHECK(c != g.identity());
  CHECK(std::binary_search(g.center_elems().begin(), g.center_elems().end(), c));
  FiniteGroup ea = elementary_abelian(3, 2);
  for (Elem a : ea.elements())
    for (Elem b : ea.elements()) CHECK(ea.commutator(a, b) == ea.identity());
}

TEST_CASE("element orders") {
  CHECK(m3().element_order(0) == 1);
  FiniteGroup g = m3();
  for (Elem a : g.elements())
    if (a != 0) CHECK(g.element_order(a) == 3);
  CHECK(g.exponent() == 3);
  CHECK(make_N(3).exponent() == 9);
  CHECK(extra_special(3, 2, 1).exponent() == 3);
  CHECK(extra_special(3, 2, 2).exponent() == 9);
  // element order divides the exponent
  FiniteGroup a31 = almost_extra_special(3, 1);
  for (Elem a : a31.elements()) CHECK(a31.exponent() % a31.element_order(a) == 0);
}

TEST_CASE("enumeration") {
  CHECK(cyclic(3, 1).order() == 3);
  CHECK(m3().order() == 27);
  CHECK(central_product_identify_centers(make_M(3), cyclic(3, 2)).order() == 81);
  CHECK(cyclic(5, 0).order() == 1);
}

TEST_CASE("validate") {
  CHECK(elementary_abelian(3, 2).validate().ok());
  FiniteGroup g = m3();
  CHECK(g.validate().ok());
  CHECK(g.center_elems().size() == 3);
  CHECK(extra_special(3, 2, 2).validate().ok());
  CHECK(almost_extra_special(3, 1).validate().ok());

  // deliberately corrupted conjugation relation: conjugation by g1 sends g2
  // to g2^2, which is not an automorphism of order dividing 3
  PcPresentation bad;
  bad.p = 3;
  bad.ngens = 2;
  bad.power = {{0, 0}, {0, 0}};
  bad.conj.assign(2, std::vector<std::vector<int>>(2));
  bad.conj[0][1] = {0, 2};
  FiniteGroup broken = FiniteGroup::from_presentation(bad);
  ValidationReport rep = broken.validate();
  CHECK(!rep.ok());
  // the diagnostic pins down the first failing law and where it fails
  CHECK(rep.summary().find("fails at") != std::string::npos);
}

TEST_CASE("foreign element ids are rejected") {
  FiniteGroup small = cyclic(3, 1);
  CHECK_THROWS_AS(small.mul(0, 7), contract_error);
  CHECK_THROWS_AS(small.element_order(200), contract_error);
}

TEST_CASE("exponent vector round trip") {
  FiniteGroup g = extra_special(3, 2, 2);
  for (Elem a : g.elements()) {
    std::vector<int> e = g.exponents(a);
    CHECK(g.from_exponents(e) == a);
  }
}

TEST_CASE("presentation shape checks") {
  PcPresentation pr;
  pr.p = 4;  // not prime
  pr.ngens = 1;
  pr.power = {{0}};
  pr.conj = {{{}}};
  CHECK_THROWS_AS(pr.check_shape(), unsupported_prime_error);

  PcPresentation low;  // power relation with support at its own level
  low.p = 3;
  low.ngens = 2;
  low.power = {{1, 0}, {0, 0}};
  low.conj.assign(2, std::vector<std::vector<int>>(2));
  low.conj[0][1] = {0, 1};
  CHECK_THROWS_AS(low.check_shape(), contract_error);
}
