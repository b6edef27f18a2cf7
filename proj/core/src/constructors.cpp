#include "whk/constructors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "whk/subgroups.hpp"

namespace whk {

namespace {

void require_odd_prime(int p) {
  if (!is_odd_prime(p))
    throw unsupported_prime_error("p = " + std::to_string(p) +
                                  " is not supported (odd primes only)");
}

PcPresentation blank_presentation(int p, int n) {
  PcPresentation pr;
  pr.p = p;
  pr.ngens = n;
  pr.power.assign(static_cast<std::size_t>(n), std::vector<int>(n, 0));
  pr.conj.assign(static_cast<std::size_t>(n),
                 std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pr.conj[i][j].assign(static_cast<std::size_t>(n), 0);
      pr.conj[i][j][j] = 1;  // commuting by default
    }
  return pr;
}

}  // namespace

FiniteGroup cyclic(int p, int n) {
  require_odd_prime(p);
  if (n < 0) throw contract_error("cyclic: n must be >= 0");
  PcPresentation pr = blank_presentation(p, n);
  for (int i = 0; i + 1 < n; ++i) pr.power[i][i + 1] = 1;  // g_i^p = g_{i+1}
  return FiniteGroup::from_presentation(std::move(pr));
}

FiniteGroup elementary_abelian(int p, int k) {
  require_odd_prime(p);
  if (k < 0) throw contract_error("elementary_abelian: k must be >= 0");
  return FiniteGroup::from_presentation(blank_presentation(p, k));
}

FiniteGroup make_M(int p) { return extra_special(p, 1, 1); }
FiniteGroup make_N(int p) { return extra_special(p, 1, 2); }

// Generators x_1, y_1, ..., x_r, y_r, z with z central of order p and
// y_i^{x_i} = y_i z (equivalently y_i x_i = x_i y_i z). Exponent class 2
// additionally sets x_1^p = z, giving x_1 order p^2.
FiniteGroup extra_special(int p, int r, int exponent_class) {
  require_odd_prime(p);
  if (r < 1) throw contract_error("extra_special: r must be >= 1");
  if (exponent_class != 1 && exponent_class != 2)
    throw contract_error("extra_special: exponent class must be 1 or 2");
  const int n = 2 * r + 1;
  PcPresentation pr = blank_presentation(p, n);
  const int z = n - 1;
  for (int i = 0; i < r; ++i) pr.conj[2 * i][2 * i + 1][z] = 1;
  if (exponent_class == 2) pr.power[0][z] = 1;
  return FiniteGroup::from_presentation(std::move(pr));
}

// Generators x_1, y_1, ..., x_r, y_r, c, z with c^p = z; the center <c> is
// cyclic of order p^2 and the derived subgroup is <z>.
FiniteGroup almost_extra_special(int p, int r) {
  require_odd_prime(p);
  if (r < 1) throw contract_error("almost_extra_special: r must be >= 1");
  const int n = 2 * r + 2;
  PcPresentation pr = blank_presentation(p, n);
  const int z = n - 1;
  const int c = n - 2;
  for (int i = 0; i < r; ++i) pr.conj[2 * i][2 * i + 1][z] = 1;
  pr.power[c][z] = 1;
  return FiniteGroup::from_presentation(std::move(pr));
}

FiniteGroup direct_product(const FiniteGroup& h, const FiniteGroup& k) {
  if (h.prime() != k.prime())
    throw contract_error("direct product of groups over different primes");
  std::size_t order = h.order() * k.order();
  if (h.has_exponents() && k.has_exponents()) {
    // concatenating the presentations keeps the product polycyclic
    const int nh = h.pc_ngens();
    const int nk = k.pc_ngens();
    PcPresentation pr = blank_presentation(h.prime(), nh + nk);
    auto copy_in = [&](const FiniteGroup& g, int offset) {
      for (int i = 0; i < g.pc_ngens(); ++i) {
        Elem gi = g.generators()[static_cast<std::size_t>(i)];
        auto pw = g.exponents(g.power(gi, g.prime()));
        for (int t = 0; t < g.pc_ngens(); ++t) pr.power[offset + i][offset + t] = pw[t];
        for (int j = i + 1; j < g.pc_ngens(); ++j) {
          Elem gj = g.generators()[static_cast<std::size_t>(j)];
          auto cj = g.exponents(g.conjugate(gj, g.inverse(gi)));
          for (int t = 0; t < g.pc_ngens(); ++t)
            pr.conj[offset + i][offset + j][offset + t] = cj[t];
        }
      }
    };
    copy_in(h, 0);
    copy_in(k, nh);
    return FiniteGroup::from_presentation(std::move(pr));
  }
  if (order > kMaxTableOrder)
    throw size_error("direct product of table-backed groups is too large");
  std::vector<Elem> table(order * order);
  auto id = [&](Elem a, Elem b) {
    return static_cast<Elem>(static_cast<std::size_t>(a) * k.order() + b);
  };
  for (std::size_t a1 = 0; a1 < h.order(); ++a1)
    for (std::size_t b1 = 0; b1 < k.order(); ++b1)
      for (std::size_t a2 = 0; a2 < h.order(); ++a2)
        for (std::size_t b2 = 0; b2 < k.order(); ++b2)
          table[static_cast<std::size_t>(id(static_cast<Elem>(a1), static_cast<Elem>(b1))) * order +
                id(static_cast<Elem>(a2), static_cast<Elem>(b2))] =
              id(h.mul(static_cast<Elem>(a1), static_cast<Elem>(a2)),
                 k.mul(static_cast<Elem>(b1), static_cast<Elem>(b2)));
  return FiniteGroup::from_table(h.prime(), order, std::move(table));
}

FiniteGroup central_product(const FiniteGroup& h, const FiniteGroup& k,
                            const CentralAmalgam& amalgam) {
  if (h.prime() != k.prime())
    throw contract_error("central product of groups over different primes");
  const std::size_t msize = amalgam.m_in_h.size();
  if (msize != amalgam.image_in_k.size())
    throw contract_error("central product: amalgam lists have different sizes");
  if (msize <= 1)
    throw contract_error(
        "central product: amalgamated subgroup must be nontrivial "
        "(use direct_product for the degenerate case)");
  // M <= Z(H), injective, image central in K; homomorphism check is implied
  // by verifying theta on all pairs.
  std::map<Elem, Elem> theta;
  for (std::size_t i = 0; i < msize; ++i) {
    Elem m = amalgam.m_in_h[i];
    Elem im = amalgam.image_in_k[i];
    if (!std::binary_search(h.center_elems().begin(), h.center_elems().end(), m))
      throw contract_error("central product: amalgam is not central in H");
    if (!std::binary_search(k.center_elems().begin(), k.center_elems().end(), im))
      throw contract_error("central product: image is not central in K");
    if (!theta.emplace(m, im).second)
      throw contract_error("central product: repeated amalgam element");
  }
  if (theta.count(0) == 0 || theta[0] != 0)
    throw contract_error("central product: amalgam must contain the identity");
  {
    std::vector<Elem> images;
    for (auto& [m, im] : theta) images.push_back(im);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      throw contract_error("central product: theta is not injective");
  }
  for (auto& [m1, im1] : theta)
    for (auto& [m2, im2] : theta) {
      Elem m12 = h.mul(m1, m2);
      auto it = theta.find(m12);
      if (it == theta.end())
        throw contract_error("central product: amalgam is not a subgroup");
      if (it->second != k.mul(im1, im2))
        throw contract_error("central product: theta is not a homomorphism");
    }

  FiniteGroup prod = direct_product(h, k);
  // D = {(m, theta(m)^-1)}, central; the quotient is the central product.
  std::vector<Elem> dgens;
  for (auto& [m, im] : theta)
    dgens.push_back(static_cast<Elem>(static_cast<std::size_t>(m) * k.order() +
                                      k.inverse(im)));
  Subgroup d = closure(prod, dgens);
  return quotient_group(prod, d).group;
}

FiniteGroup central_product_identify_centers(const FiniteGroup& h,
                                             const FiniteGroup& k) {
  const int p = h.prime();
  if (static_cast<int>(h.center_elems().size()) != p)
    throw contract_error("identify_centers: Z(H) must have order p");
  // M = Z(H) = <zh>; map zh to an order-p central element of K.
  Elem zh = 0;
  for (Elem e : h.center_elems())
    if (e != 0) {
      zh = e;
      break;
    }
  Elem zk = 0;
  for (Elem e : k.center_elems())
    if (e != 0 && k.element_order(e) == p) {
      zk = e;
      break;
    }
  if (zk == 0) throw contract_error("identify_centers: K has no central order-p element");
  CentralAmalgam am;
  Elem m = 0, im = 0;
  for (int i = 0; i < p; ++i) {
    am.m_in_h.push_back(m);
    am.image_in_k.push_back(im);
    m = h.mul(m, zh);
    im = k.mul(im, zk);
  }
  return central_product(h, k, am);
}

// --- GroupSpec grammar --------------------------------------------------------

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto open = s.find('(');
  if (s.size() < 4 || open == std::string::npos || s.back() != ')')
    throw spec_parse_error("cannot parse group spec '" + text + "'");
  std::string head = s.substr(0, open);
  std::string args = s.substr(open + 1, s.size() - open - 2);
  std::vector<long> nums;
  std::stringstream ss(args);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      nums.push_back(v);
    } catch (const std::exception&) {
      throw spec_parse_error("bad number '" + tok + "' in group spec '" + text + "'");
    }
  }
  auto need = [&](std::size_t n) {
    if (nums.size() != n)
      throw spec_parse_error("wrong number of arguments in group spec '" + text + "'");
  };
  GroupSpec out;
  if (head == "C") {
    need(2);
    out = {Family::Cyclic, static_cast<int>(nums[0]), static_cast<int>(nums[1]), 1};
  } else if (head == "EA") {
    need(2);
    out = {Family::ElementaryAbelian, static_cast<int>(nums[0]), static_cast<int>(nums[1]), 1};
  } else if (head == "M") {
    need(1);
    out = {Family::M, static_cast<int>(nums[0]), 1, 1};
  } else if (head == "N") {
    need(1);
    out = {Family::N, static_cast<int>(nums[0]), 1, 2};
  } else if (head == "ES") {
    need(3);
    out = {Family::ExtraSpecial, static_cast<int>(nums[0]), static_cast<int>(nums[1]),
           static_cast<int>(nums[2])};
    if (out.exponent_class != 1 && out.exponent_class != 2)
      throw spec_parse_error("ES exponent class must be 1 or 2 in '" + text + "'");
  } else if (head == "AES") {
    need(2);
    out = {Family::AlmostExtraSpecial, static_cast<int>(nums[0]), static_cast<int>(nums[1]), 1};
  } else {
    throw spec_parse_error("unknown group family '" + head + "'");
  }
  if (!is_odd_prime(out.p))
    throw unsupported_prime_error("p = " + std::to_string(out.p) +
                                  " is not supported (odd primes only)");
  if (out.a < 0) throw spec_parse_error("negative parameter in group spec '" + text + "'");
  return out;
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::Cyclic: os << "C(" << p << "," << a << ")"; break;
    case Family::ElementaryAbelian: os << "EA(" << p << "," << a << ")"; break;
    case Family::M: os << "M(" << p << ")"; break;
    case Family::N: os << "N(" << p << ")"; break;
    case Family::ExtraSpecial:
      os << "ES(" << p << "," << a << "," << exponent_class << ")";
      break;
    case Family::AlmostExtraSpecial: os << "AES(" << p << "," << a << ")"; break;
  }
  return os.str();
}

FiniteGroup GroupSpec::build() const {
  switch (family) {
    case Family::Cyclic: return cyclic(p, a);
    case Family::ElementaryAbelian: return elementary_abelian(p, a);
    case Family::M: return make_M(p);
    case Family::N: return make_N(p);
    case Family::ExtraSpecial: return extra_special(p, a, exponent_class);
    case Family::AlmostExtraSpecial: return almost_extra_special(p, a);
  }
  throw contract_error("unreachable");
}

std::size_t GroupSpec::order() const {
  int n = 0;
  switch (family) {
    case Family::Cyclic:
    case Family::ElementaryAbelian: n = a; break;
    case Family::M:
    case Family::N: n = 3; break;
    case Family::ExtraSpecial: n = 2 * a + 1; break;
    case Family::AlmostExtraSpecial: n = 2 * a + 2; break;
  }
  return static_cast<std::size_t>(ipow(p, n));
}

}  // namespace whk
