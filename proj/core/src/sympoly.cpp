#include "whk/sympoly.hpp"

#include <algorithm>
#include <map>

#include "whk/subgroups.hpp"

namespace whk {

namespace {

void gen_exps(int k, int remaining, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.push_back(e);
    gen_exps(k, remaining - e, cur, out);
    cur.pop_back();
  }
}

int mod_inverse(int a, int p) {
  int r = 1;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

}  // namespace

MonomialBasis::MonomialBasis(int p_, int k_) : p(p_), k(k_) {
  if (k < 1) throw contract_error("monomial basis needs k >= 1");
  std::vector<int> cur;
  gen_exps(k, p, cur, exps);
  std::sort(exps.begin(), exps.end());
}

std::size_t MonomialBasis::index_of(const std::vector<int>& e) const {
  auto it = std::lower_bound(exps.begin(), exps.end(), e);
  if (it == exps.end() || *it != e) throw contract_error("unknown monomial");
  return static_cast<std::size_t>(it - exps.begin());
}

bool HomogeneousPoly::zero() const {
  return std::all_of(coef.begin(), coef.end(), [](int c) { return c == 0; });
}

HomogeneousPoly zero_poly(int p, int k) {
  return HomogeneousPoly{p, k, std::vector<int>(MonomialBasis(p, k).dim(), 0)};
}

HomogeneousPoly add(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  HomogeneousPoly out = a;
  for (std::size_t i = 0; i < out.coef.size(); ++i)
    out.coef[i] = (out.coef[i] + b.coef[i]) % a.p;
  return out;
}

HomogeneousPoly scale(const HomogeneousPoly& a, int lambda) {
  HomogeneousPoly out = a;
  lambda %= a.p;
  if (lambda < 0) lambda += a.p;
  for (int& c : out.coef) c = c * lambda % a.p;
  return out;
}

HomogeneousPoly b_monomial(int p, int k, std::span<const int> x,
                           std::span<const int> y) {
  MonomialBasis basis(p, k);
  // expand (sum x_i t_i)^{p-1} (sum y_i t_i) degree by degree
  std::map<std::vector<int>, int> cur;
  cur[std::vector<int>(static_cast<std::size_t>(k), 0)] = 1;
  auto mul_linear = [&](std::span<const int> v) {
    std::map<std::vector<int>, int> next;
    for (const auto& [e, c] : cur)
      for (int i = 0; i < k; ++i) {
        if (v[static_cast<std::size_t>(i)] % p == 0) continue;
        std::vector<int> e2 = e;
        ++e2[static_cast<std::size_t>(i)];
        next[e2] = (next[e2] + c * (v[static_cast<std::size_t>(i)] % p)) % p;
      }
    cur = std::move(next);
  };
  for (int t = 0; t < p - 1; ++t) mul_linear(x);
  mul_linear(y);
  HomogeneousPoly out = zero_poly(p, k);
  for (const auto& [e, c] : cur)
    if (c % p != 0) out.coef[basis.index_of(e)] = (c % p + p) % p;
  return out;
}

HomogeneousPoly monomial_poly(int p, int k, const std::vector<int>& e) {
  HomogeneousPoly out = zero_poly(p, k);
  out.coef[MonomialBasis(p, k).index_of(e)] = 1;
  return out;
}

int evaluate(const HomogeneousPoly& a, std::span<const int> psi) {
  MonomialBasis basis(a.p, a.k);
  int total = 0;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    if (a.coef[i] == 0) continue;
    int term = a.coef[i];
    for (int t = 0; t < a.k; ++t)
      for (int r = 0; r < basis.exps[i][static_cast<std::size_t>(t)]; ++r)
        term = term * ((psi[static_cast<std::size_t>(t)] % a.p + a.p) % a.p) % a.p;
    total = (total + term) % a.p;
  }
  return total;
}

int fp_rank(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t rcount = rows.size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rcount;
    for (std::size_t r = static_cast<std::size_t>(rank); r < rcount; ++r)
      if (rows[r][c] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot == rcount) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    int inv = mod_inverse(((rows[static_cast<std::size_t>(rank)][c] % p) + p) % p, p);
    for (std::size_t j = c; j < cols; ++j)
      rows[static_cast<std::size_t>(rank)][j] =
          ((rows[static_cast<std::size_t>(rank)][j] % p + p) % p) * inv % p;
    for (std::size_t r = 0; r < rcount; ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      int f = ((rows[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        rows[r][j] = ((rows[r][j] - f * rows[static_cast<std::size_t>(rank)][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<int>> all_vectors(int p, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  for (;;) {
    out.push_back(v);
    int i = k - 1;
    for (; i >= 0; --i) {
      if (++v[static_cast<std::size_t>(i)] < p) break;
      v[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace

int span_rank_all_pairs(int p, int k) {
  if (ipow(p, 2 * k) > 2'000'000) throw size_error("span_rank_all_pairs: p^2k too large");
  std::vector<std::vector<int>> vecs = all_vectors(p, k);
  std::vector<std::vector<int>> rows;
  for (const auto& x : vecs)
    for (const auto& y : vecs) rows.push_back(b_monomial(p, k, x, y).coef);
  return fp_rank(std::move(rows), p);
}

bool BilinearForm::alternating() const {
  for (int i = 0; i < k; ++i) {
    if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] % p != 0) return false;
    for (int j = 0; j < k; ++j)
      if ((m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
           m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) % p != 0)
        return false;
  }
  return true;
}

int BilinearForm::rank() const {
  std::vector<std::vector<int>> rows = m;
  return fp_rank(std::move(rows), p);
}

int BilinearForm::apply(std::span<const int> x, std::span<const int> y) const {
  int total = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      total = (total + x[static_cast<std::size_t>(i)] *
                           m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] %
                           p * y[static_cast<std::size_t>(j)]) % p;
  return (total % p + p) % p;
}

int span_rank_isotropic_pairs(const BilinearForm& b) {
  if (!b.alternating()) throw contract_error("form must be alternating");
  std::vector<std::vector<int>> vecs = all_vectors(b.p, b.k);
  std::vector<std::vector<int>> rows;
  for (const auto& x : vecs)
    for (const auto& y : vecs)
      if (b.apply(x, y) == 0) rows.push_back(b_monomial(b.p, b.k, x, y).coef);
  return fp_rank(std::move(rows), b.p);
}

CommutatorForm commutator_form(const FiniteGroup& g) {
  const int p = g.prime();
  if (g.derived_elems().size() != static_cast<std::size_t>(p))
    throw contract_error("commutator_form: derived subgroup must have order p");
  if (g.derived_elems() != g.frattini_elems())
    throw contract_error("commutator_form: Frattini must equal the derived subgroup");

  CommutatorForm out;
  out.z = g.derived_elems()[1];  // least nontrivial element
  // dlog in <z>
  std::vector<int> zlog(g.order(), -1);
  {
    Elem x = 0;
    for (int i = 0; i < p; ++i) {
      zlog[x] = i;
      x = g.mul(x, out.z);
    }
  }

  QuotientGroup fq = quotient_group(g, frattini(g));
  const FiniteGroup& v = fq.group;
  std::vector<Elem> vbasis;
  {
    std::size_t covered = 1;
    for (Elem e : v.elements()) {
      if (covered == v.order()) break;
      if (e == 0) continue;
      vbasis.push_back(e);
      std::size_t now = v.closure_elems(vbasis).size();
      if (now == covered)
        vbasis.pop_back();
      else
        covered = now;
    }
  }
  const int k = static_cast<int>(vbasis.size());
  // coordinates of every quotient element
  std::vector<std::vector<int>> vcoord(v.order());
  {
    std::vector<int> c(static_cast<std::size_t>(k), 0);
    for (;;) {
      Elem e = 0;
      for (int i = 0; i < k; ++i)
        e = v.mul(e, v.power(vbasis[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]));
      vcoord[e] = c;
      int i = k - 1;
      for (; i >= 0; --i) {
        if (++c[static_cast<std::size_t>(i)] < p) break;
        c[static_cast<std::size_t>(i)] = 0;
      }
      if (i < 0) break;
    }
  }

  out.form.p = p;
  out.form.k = k;
  out.form.m.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
  out.basis_lifts.reserve(static_cast<std::size_t>(k));
  for (Elem e : vbasis) out.basis_lifts.push_back(fq.section[e]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elem c = g.commutator(out.basis_lifts[static_cast<std::size_t>(i)],
                            out.basis_lifts[static_cast<std::size_t>(j)]);
      if (zlog[c] < 0)
        throw contract_error("commutator_form: commutator outside the derived subgroup");
      out.form.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = zlog[c];
    }

  out.coords.resize(g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    out.coords[a] = vcoord[fq.to_quotient[a]];
  return out;
}

std::vector<std::vector<int>> hyperplane_functionals(int p, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& v : all_vectors(p, k)) {
    int first = -1;
    for (int i = 0; i < k; ++i)
      if (v[static_cast<std::size_t>(i)] != 0) {
        first = i;
        break;
      }
    if (first >= 0 && v[static_cast<std::size_t>(first)] == 1) out.push_back(v);
  }
  return out;  // all_vectors is lexicographic already
}

std::vector<std::vector<int>> r_matrix(int p, int k) {
  MonomialBasis basis(p, k);
  std::vector<std::vector<int>> psis = hyperplane_functionals(p, k);
  std::vector<std::vector<int>> rows(basis.dim(), std::vector<int>(psis.size(), 0));
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    HomogeneousPoly mono = monomial_poly(p, k, basis.exps[i]);
    for (std::size_t q = 0; q < psis.size(); ++q)
      rows[i][q] = evaluate(mono, psis[q]);
  }
  return rows;
}

}  // namespace whk
