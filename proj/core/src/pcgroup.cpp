#include "whk/pcgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace whk {

void PcPresentation::check_shape() const {
  if (!is_odd_prime(p)) throw unsupported_prime_error("pc prime must be an odd prime");
  if (ngens < 0) throw contract_error("negative generator count");
  auto check_word = [&](const std::vector<int>& w, int min_support,
                        const char* what) {
    if (static_cast<int>(w.size()) != ngens)
      throw contract_error(std::string(what) + ": bad word length");
    for (int t = 0; t < ngens; ++t) {
      if (w[t] < 0 || w[t] >= p)
        throw contract_error(std::string(what) + ": exponent out of range");
      if (w[t] != 0 && t < min_support)
        throw contract_error(std::string(what) + ": support too low");
    }
  };
  if (static_cast<int>(power.size()) != ngens ||
      static_cast<int>(conj.size()) != ngens)
    throw contract_error("presentation tables have wrong size");
  for (int i = 0; i < ngens; ++i) {
    check_word(power[i], i + 1, "power relation");
    if (static_cast<int>(conj[i].size()) != ngens)
      throw contract_error("conjugation table has wrong size");
    for (int j = i + 1; j < ngens; ++j)
      check_word(conj[i][j], j, "conjugation relation");
  }
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << issues.size() << " issue(s): " << issues.front();
  return os.str();
}

// --- collection -------------------------------------------------------------

// e := e * g_i, with e a normal form. If nothing above position i is set we
// just bump the exponent, applying the power relation on wrap-around (its
// support is disjoint from what remains of e). Otherwise split e = head*tail
// at position i and use e*g_i = (head*g_i) * tail^{g_i}; the conjugated tail
// only involves generators above i, so the recursion terminates.
void FiniteGroup::pc_mul_gen(std::vector<int>& e, int i) const {
  const PcPresentation& pr = *pc_;
  int jmax = -1;
  for (int j = pr.ngens - 1; j > i; --j)
    if (e[j] != 0) {
      jmax = j;
      break;
    }
  if (jmax < 0) {
    if (++e[i] == pr.p) {
      e[i] = 0;
      const std::vector<int>& w = pr.power[i];
      for (int t = i + 1; t < pr.ngens; ++t) e[t] = w[t];
    }
    return;
  }
  std::vector<int> tail_conj(pr.ngens, 0);
  for (int j = i + 1; j <= jmax; ++j)
    for (int r = 0; r < e[j]; ++r) pc_mul_word(tail_conj, pr.conj[i][j]);
  for (int j = i + 1; j < pr.ngens; ++j) e[j] = 0;
  pc_mul_gen(e, i);  // head * g_i, falls into the first branch
  pc_mul_word(e, tail_conj);
}

void FiniteGroup::pc_mul_word(std::vector<int>& e, const std::vector<int>& w) const {
  for (int j = 0; j < pc_->ngens; ++j)
    for (int r = 0; r < w[j]; ++r) pc_mul_gen(e, j);
}

// --- construction -----------------------------------------------------------

FiniteGroup FiniteGroup::from_presentation(PcPresentation pres) {
  pres.check_shape();
  FiniteGroup g;
  g.p_ = pres.p;
  std::int64_t order = ipow(pres.p, pres.ngens);
  if (order > static_cast<std::int64_t>(kMaxGroupOrder))
    throw size_error("group order " + std::to_string(order) +
                     " exceeds the supported maximum");
  g.order_ = static_cast<std::size_t>(order);
  g.pc_ = std::move(pres);
  const PcPresentation& pr = *g.pc_;

  g.gen_right_.assign(pr.ngens, std::vector<Elem>(g.order_));
  std::vector<int> e(pr.ngens);
  for (std::size_t a = 0; a < g.order_; ++a) {
    for (int i = 0; i < pr.ngens; ++i) {
      std::size_t rest = a;
      for (int t = pr.ngens - 1; t >= 0; --t) {
        e[t] = static_cast<int>(rest % pr.p);
        rest /= pr.p;
      }
      g.pc_mul_gen(e, i);
      std::size_t id = 0;
      for (int t = 0; t < pr.ngens; ++t) id = id * pr.p + e[t];
      g.gen_right_[i][a] = static_cast<Elem>(id);
    }
  }
  g.generators_.resize(pr.ngens);
  for (int i = 0; i < pr.ngens; ++i)
    g.generators_[i] = static_cast<Elem>(ipow(pr.p, pr.ngens - 1 - i));
  g.build_caches();
  return g;
}

FiniteGroup FiniteGroup::from_table(int p, std::size_t order,
                                    std::vector<Elem> table) {
  if (!is_odd_prime(p)) throw unsupported_prime_error("table prime must be an odd prime");
  if (order == 0 || table.size() != order * order)
    throw contract_error("multiplication table has wrong size");
  if (order > kMaxTableOrder)
    throw size_error("table-backed order " + std::to_string(order) +
                     " exceeds the supported maximum");
  FiniteGroup g;
  g.p_ = p;
  g.order_ = order;
  g.table_ = std::move(table);
  for (std::size_t a = 0; a < order; ++a)
    if (g.table_[a * order] != a || g.table_[a] != a)
      throw contract_error("table identity is not element 0");
  // Greedy minimal generating set.
  std::vector<char> in(order, 0);
  in[0] = 1;
  std::size_t covered = 1;
  for (std::size_t a = 1; a < order && covered < order; ++a) {
    if (in[a]) continue;
    g.generators_.push_back(static_cast<Elem>(a));
    auto cl = g.closure_elems(g.generators_);
    covered = cl.size();
    std::fill(in.begin(), in.end(), 0);
    for (Elem x : cl) in[x] = 1;
  }
  if (covered != order) throw contract_error("table is not generated by its elements");
  g.build_caches();
  return g;
}

void FiniteGroup::build_caches() {
  inverse_.resize(order_);
  elem_order_.resize(order_);
  exponent_ = 1;
  for (std::size_t a = 0; a < order_; ++a) {
    // walk a, a^2, ... until the identity reappears
    Elem prev = 0;
    Elem x = static_cast<Elem>(a);
    int ord = 1;
    while (x != 0) {
      prev = x;
      x = mul(x, static_cast<Elem>(a));
      ++ord;
    }
    if (a == 0) ord = 1;
    inverse_[a] = prev;
    elem_order_[a] = static_cast<std::uint16_t>(ord);
    exponent_ = std::max(exponent_, ord);
  }

  // Center: elements commuting with every generator.
  for (std::size_t a = 0; a < order_; ++a) {
    bool central = true;
    for (Elem g : generators_)
      if (mul(static_cast<Elem>(a), g) != mul(g, static_cast<Elem>(a))) {
        central = false;
        break;
      }
    if (central) center_.push_back(static_cast<Elem>(a));
  }

  // Derived subgroup: closure of generator-vs-element commutators, then
  // closed under conjugation by generators until stable.
  std::vector<Elem> comms;
  for (Elem g : generators_)
    for (std::size_t b = 0; b < order_; ++b)
      comms.push_back(commutator(g, static_cast<Elem>(b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  derived_ = closure_elems(comms);
  for (;;) {
    std::vector<Elem> extra;
    for (Elem g : generators_)
      for (Elem d : derived_) {
        Elem c = conjugate(d, g);
        if (!std::binary_search(derived_.begin(), derived_.end(), c))
          extra.push_back(c);
      }
    if (extra.empty()) break;
    std::vector<Elem> gens = derived_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    derived_ = closure_elems(gens);
  }

  // Frattini subgroup of a p-group: G' together with all p-th powers.
  std::vector<Elem> fr = derived_;
  for (std::size_t a = 0; a < order_; ++a)
    fr.push_back(power(static_cast<Elem>(a), p_));
  std::sort(fr.begin(), fr.end());
  fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
  frattini_ = closure_elems(fr);
}

// --- element operations -----------------------------------------------------

void FiniteGroup::check_elem(Elem a) const {
  if (a >= order_)
    throw contract_error("element id " + std::to_string(a) +
                         " does not belong to this group");
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  check_elem(a);
  check_elem(b);
  if (pc_) {
    const int p = pc_->p;
    const int n = pc_->ngens;
    int digit[20];
    std::size_t rest = b;
    for (int t = n - 1; t >= 0; --t) {
      digit[t] = static_cast<int>(rest % p);
      rest /= p;
    }
    // apply b's letters generator by generator, most significant first
    Elem acc = a;
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < digit[i]; ++r) acc = gen_right_[i][acc];
    return acc;
  }
  return table_[static_cast<std::size_t>(a) * order_ + b];
}

Elem FiniteGroup::inverse(Elem a) const {
  check_elem(a);
  return inverse_[a];
}

Elem FiniteGroup::power(Elem a, long k) const {
  check_elem(a);
  int ord = elem_order_[a];
  long r = k % ord;
  if (r < 0) r += ord;
  Elem acc = 0;
  for (long i = 0; i < r; ++i) acc = mul(acc, a);
  return acc;
}

Elem FiniteGroup::conjugate(Elem a, Elem t) const {
  return mul(mul(t, a), inverse(t));
}

Elem FiniteGroup::commutator(Elem a, Elem b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

int FiniteGroup::element_order(Elem a) const {
  check_elem(a);
  return elem_order_[a];
}

std::vector<Elem> FiniteGroup::elements() const {
  std::vector<Elem> out(order_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

int FiniteGroup::pc_ngens() const {
  if (!pc_) throw contract_error("not a polycyclic-backed group");
  return pc_->ngens;
}

std::vector<int> FiniteGroup::exponents(Elem a) const {
  check_elem(a);
  if (!pc_) throw contract_error("not a polycyclic-backed group");
  std::vector<int> e(pc_->ngens);
  std::size_t rest = a;
  for (int t = pc_->ngens - 1; t >= 0; --t) {
    e[t] = static_cast<int>(rest % pc_->p);
    rest /= pc_->p;
  }
  return e;
}

Elem FiniteGroup::from_exponents(std::span<const int> e) const {
  if (!pc_) throw contract_error("not a polycyclic-backed group");
  if (static_cast<int>(e.size()) != pc_->ngens)
    throw contract_error("exponent vector has wrong length");
  std::size_t id = 0;
  for (int t = 0; t < pc_->ngens; ++t) {
    if (e[t] < 0 || e[t] >= pc_->p)
      throw contract_error("exponent out of range");
    id = id * pc_->p + static_cast<std::size_t>(e[t]);
  }
  return static_cast<Elem>(id);
}

Elem FiniteGroup::collect_word(std::span<const int> letters) const {
  if (!pc_) throw contract_error("not a polycyclic-backed group");
  Elem acc = 0;
  for (int l : letters) {
    if (l == 0 || std::abs(l) > pc_->ngens)
      throw contract_error("word letter out of range");
    Elem g = generators_[static_cast<std::size_t>(std::abs(l) - 1)];
    acc = mul(acc, l > 0 ? g : inverse(g));
  }
  return acc;
}

std::vector<Elem> FiniteGroup::closure_elems(std::span<const Elem> gens) const {
  std::vector<char> seen(order_, 0);
  seen[0] = 1;
  std::vector<Elem> frontier{0}, all{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem g : gens) {
        Elem y = mul(x, g);
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
          all.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

// --- validation -------------------------------------------------------------

ValidationReport FiniteGroup::validate(std::uint64_t seed) const {
  ValidationReport rep;
  auto fail = [&](std::string msg) { rep.issues.push_back(std::move(msg)); };

  for (std::size_t a = 0; a < order_ && rep.issues.size() < 8; ++a) {
    Elem ea = static_cast<Elem>(a);
    if (mul(ea, 0) != ea || mul(0, ea) != ea)
      fail("identity law fails at element " + std::to_string(a));
    if (mul(ea, inverse_[ea]) != 0 || mul(inverse_[ea], ea) != 0)
      fail("inverse law fails at element " + std::to_string(a));
  }

  // Right translation by each generator must permute the elements; a broken
  // presentation typically collapses here first.
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    std::vector<char> hit(order_, 0);
    bool bad = false;
    for (std::size_t a = 0; a < order_; ++a) {
      Elem y = mul(static_cast<Elem>(a), generators_[i]);
      if (hit[y]) bad = true;
      hit[y] = 1;
    }
    if (bad)
      fail("translation by generator " + std::to_string(i + 1) +
           " is not a bijection (relation " + std::to_string(i + 1) +
           " is inconsistent)");
  }

  auto assoc = [&](Elem a, Elem b, Elem c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (order_ <= 81) {
    for (std::size_t a = 0; a < order_ && rep.ok(); ++a)
      for (std::size_t b = 0; b < order_ && rep.ok(); ++b)
        for (std::size_t c = 0; c < order_; ++c)
          if (!assoc(static_cast<Elem>(a), static_cast<Elem>(b),
                     static_cast<Elem>(c))) {
            fail("associativity fails at (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")");
            break;
          }
  } else {
    for (Elem a : generators_)
      for (Elem b : generators_)
        for (Elem c : generators_)
          if (!assoc(a, b, c)) {
            fail("associativity fails on generator triple");
            break;
          }
    SplitMix64 rng(seed);
    for (int t = 0; t < 2000 && rep.ok(); ++t) {
      Elem a = static_cast<Elem>(rng.below(order_));
      Elem b = static_cast<Elem>(rng.below(order_));
      Elem c = static_cast<Elem>(rng.below(order_));
      if (!assoc(a, b, c))
        fail("associativity fails at sampled triple (" + std::to_string(a) +
             "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
  return rep;
}

}  // namespace whk
