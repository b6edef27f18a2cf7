#include "whk/snf.hpp"

#include <algorithm>
#include <sstream>

namespace whk {

namespace {

// Inverse of a unit modulo p^s.
std::int64_t unit_inverse(std::int64_t u, std::int64_t e) {
  std::int64_t t = 0, newt = 1, r = e, newr = u % e;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw contract_error("unit_inverse: argument is not a unit");
  return ((t % e) + e) % e;
}

int val_or_s(std::int64_t v, int p, int s) {
  if (v == 0) return s;
  return std::min(valuation(v, p), s);
}

}  // namespace

std::int64_t AbelianInvariants::group_order() const {
  std::int64_t o = 1;
  for (std::int64_t f : factors) o *= f;
  return o;
}

std::optional<int> AbelianInvariants::elementary_rank() const {
  if (factors.empty()) return 0;
  std::int64_t q = factors.front();
  bool prime = q > 1;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) prime = false;
  if (!prime) return std::nullopt;
  for (std::int64_t f : factors)
    if (f != q) return std::nullopt;
  return static_cast<int>(factors.size());
}

std::string AbelianInvariants::order_string(int p) const {
  int e = 0;
  for (std::int64_t f : factors) e += plog(f, p);
  std::ostringstream os;
  os << p << "^" << e;
  return os.str();
}

PrimePowerLattice::PrimePowerLattice(int p, int s) : p_(p), s_(s), e_(ipow(p, s)) {
  if (s < 0) throw contract_error("negative exponent");
}

std::vector<int> PrimePowerLattice::diagonalize(
    std::vector<std::vector<std::int64_t>>& rows, std::size_t cols,
    std::vector<std::vector<std::int64_t>>* companion) const {
  for (auto& r : rows) {
    if (r.size() != cols) throw contract_error("diagonalize: ragged matrix");
    for (auto& v : r) v = ((v % e_) + e_) % e_;
  }
  std::vector<int> diag(cols, s_);
  const std::size_t steps = std::min(cols, rows.size());
  for (std::size_t t = 0; t < steps; ++t) {
    // global minimal-valuation pivot in the trailing submatrix
    int best = s_;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows.size(); ++i)
      for (std::size_t j = t; j < cols; ++j) {
        int v = val_or_s(rows[i][j], p_, s_);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best == s_) break;  // everything left is zero mod e
    std::swap(rows[t], rows[bi]);
    for (auto& r : rows) std::swap(r[t], r[bj]);
    if (companion)
      for (auto& r : *companion) std::swap(r[t], r[bj]);

    const std::int64_t pivot = rows[t][t];
    const std::int64_t pv = ipow(p_, best);
    const std::int64_t unit = pivot / pv;
    const std::int64_t uinv = unit_inverse(unit, e_);
    // clear the column (row operations)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == t || rows[i][t] == 0) continue;
      std::int64_t f = (rows[i][t] / pv % e_) * uinv % e_;
      for (std::size_t j = t; j < cols; ++j)
        rows[i][j] = ((rows[i][j] - f * rows[t][j]) % e_ + e_) % e_;
    }
    // clear the row (column operations, mirrored on the companion)
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (rows[t][j] == 0) continue;
      std::int64_t f = (rows[t][j] / pv % e_) * uinv % e_;
      for (auto& r : rows) r[j] = ((r[j] - f * r[t]) % e_ + e_) % e_;
      if (companion)
        for (auto& r : *companion) r[j] = ((r[j] - f * r[t]) % e_ + e_) % e_;
    }
    diag[t] = best;
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

RowSpan::RowSpan(int p, int s, std::size_t cols)
    : p_(p), s_(s), e_(ipow(p, s)), cols_(cols) {}

void RowSpan::insert(std::vector<std::int64_t> row) {
  if (row.size() != cols_) throw contract_error("RowSpan: wrong row length");
  for (auto& v : row) v = ((v % e_) + e_) % e_;
  for (;;) {
    // reduce against pivots left to right; swap in when strictly smaller
    // valuation is found at a pivot column
    std::size_t c = 0;
    bool swapped = false;
    while (c < cols_) {
      if (row[c] == 0) {
        ++c;
        continue;
      }
      auto it = std::lower_bound(cols_index_.begin(), cols_index_.end(), c);
      std::size_t idx = static_cast<std::size_t>(it - cols_index_.begin());
      if (it == cols_index_.end() || *it != c) {
        // new pivot column: normalize leading entry to p^v
        int v = val_or_s(row[c], p_, s_);
        std::int64_t unit = row[c] / ipow(p_, v);
        std::int64_t uinv = unit_inverse(unit, e_);
        for (auto& x : row) x = x * uinv % e_;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), row);
        cols_index_.insert(it, c);
        // Howell closure: p^(s-v) * row has leading zero but may be nonzero
        if (v > 0) {
          std::vector<std::int64_t> tail(cols_);
          std::int64_t mult = ipow(p_, s_ - v);
          bool nonzero = false;
          for (std::size_t j = 0; j < cols_; ++j) {
            tail[j] = row[j] * mult % e_;
            nonzero |= (tail[j] != 0);
          }
          if (nonzero) insert(std::move(tail));
        }
        return;
      }
      int vr = val_or_s(row[c], p_, s_);
      int vp = val_or_s(rows_[idx][c], p_, s_);
      if (vr < vp) {
        std::swap(row, rows_[idx]);
        // re-normalize the new pivot and re-insert the displaced row
        std::vector<std::int64_t> displaced = std::move(row);
        row = rows_[idx];
        int v = val_or_s(row[c], p_, s_);
        std::int64_t uinv = unit_inverse(row[c] / ipow(p_, v), e_);
        for (auto& x : row) x = x * uinv % e_;
        rows_[idx] = row;
        if (v > 0) {
          std::vector<std::int64_t> tail(cols_);
          std::int64_t mult = ipow(p_, s_ - v);
          bool nonzero = false;
          for (std::size_t j = 0; j < cols_; ++j) {
            tail[j] = rows_[idx][j] * mult % e_;
            nonzero |= (tail[j] != 0);
          }
          if (nonzero) insert(std::move(tail));
        }
        row = std::move(displaced);
        swapped = true;
        break;  // restart reduction of the displaced row
      }
      std::int64_t pv = ipow(p_, vp);
      std::int64_t factor = (row[c] / pv) % e_;
      for (std::size_t j = 0; j < cols_; ++j)
        row[j] = ((row[j] - factor * rows_[idx][j]) % e_ + e_) % e_;
      ++c;
    }
    if (!swapped) return;  // row fully reduced to zero or inserted
  }
}

bool RowSpan::contains(std::vector<std::int64_t> row) const {
  if (row.size() != cols_) throw contract_error("RowSpan: wrong row length");
  for (auto& v : row) v = ((v % e_) + e_) % e_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c] == 0) continue;
    auto it = std::lower_bound(cols_index_.begin(), cols_index_.end(), c);
    if (it == cols_index_.end() || *it != c) return false;
    std::size_t idx = static_cast<std::size_t>(it - cols_index_.begin());
    int vr = val_or_s(row[c], p_, s_);
    int vp = val_or_s(rows_[idx][c], p_, s_);
    if (vr < vp) return false;
    std::int64_t pv = ipow(p_, vp);
    std::int64_t factor = (row[c] / pv) % e_;
    for (std::size_t j = 0; j < cols_; ++j)
      row[j] = ((row[j] - factor * rows_[idx][j]) % e_ + e_) % e_;
  }
  for (std::int64_t v : row)
    if (v != 0) return false;
  return true;
}

int RowSpan::size_logp() const {
  int total = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    total += s_ - val_or_s(rows_[i][cols_index_[i]], p_, s_);
  return total;
}

AbelianInvariants smith_quotient(int p, const std::vector<std::int64_t>& moduli,
                                 const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t k = moduli.size();
  int s = 0;
  for (std::int64_t m : moduli) s = std::max(s, plog(m, p));
  AbelianInvariants out;
  if (k == 0) return out;
  PrimePowerLattice lat(p, s);
  std::vector<std::vector<std::int64_t>> a;
  a.reserve(k + rows.size());
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> d(k, 0);
    d[i] = moduli[i] % lat.modulus();
    a.push_back(std::move(d));
  }
  for (const auto& r : rows) {
    if (r.size() != k) throw contract_error("smith_quotient: wrong row length");
    a.push_back(r);
  }
  std::vector<int> diag = lat.diagonalize(a, k, nullptr);
  for (int v : diag)
    if (v > 0) out.factors.push_back(ipow(p, v));
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

AbelianInvariants lattice_quotient(int p, int s, std::size_t cols,
                                   std::vector<std::vector<std::int64_t>> l2_rows,
                                   std::vector<std::vector<std::int64_t>> l1_rows) {
  PrimePowerLattice lat(p, s);
  // diagonalize L2's generators, mirroring the column operations on L1; the
  // pivoting permutes columns so that the returned valuations are positional
  std::vector<int> a = lat.diagonalize(l2_rows, cols, &l1_rows);
  // In the new coordinates L2 = (+) p^{a_j} Z; dividing column j by p^{a_j}
  // identifies L2 with Z^cols, and e*Z^cols maps onto (+) p^{s-a_j} Z.
  std::vector<std::int64_t> moduli(cols);
  for (std::size_t j = 0; j < cols; ++j) moduli[j] = ipow(p, s - a[j]);
  std::vector<std::vector<std::int64_t>> reduced;
  reduced.reserve(l1_rows.size());
  for (auto& row : l1_rows) {
    std::vector<std::int64_t> r(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t pj = ipow(p, a[j]);
      if (row[j] % pj != 0)
        throw contract_error("lattice_quotient: L1 is not contained in L2");
      r[j] = (row[j] / pj) % moduli[j];
    }
    reduced.push_back(std::move(r));
  }
  return smith_quotient(p, moduli, reduced);
}

}  // namespace whk
