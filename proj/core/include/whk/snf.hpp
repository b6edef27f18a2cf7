#pragma once

#include <optional>
#include <vector>

#include "whk/common.hpp"

namespace whk {

/// Invariant-factor description of a finite abelian group: a divisibility
/// chain d_1 | d_2 | ... with every d_i > 1; the empty chain is the trivial
/// group.
struct AbelianInvariants {
  std::vector<std::int64_t> factors;

  std::int64_t group_order() const;
  /// k when the group is (C_q)^k for a single prime q, nullopt otherwise
  /// (0 for the trivial group).
  std::optional<int> elementary_rank() const;
  /// "3^21"-style order string.
  std::string order_string(int p) const;
  bool trivial() const { return factors.empty(); }
  bool operator==(const AbelianInvariants&) const = default;
};

/// Lattice arithmetic modulo e = p^s. Z/p^s is a chain ring, so Gaussian
/// elimination with minimal-valuation pivots diagonalizes any matrix exactly;
/// all entries stay in [0, e), so the computation cannot overflow and is
/// exact by construction. The lattices handled here always contain e*Z^k
/// (the component moduli divide e), which makes the mod-e reduction lossless.
class PrimePowerLattice {
 public:
  PrimePowerLattice(int p, int s);

  int p() const { return p_; }
  int s() const { return s_; }
  std::int64_t modulus() const { return e_; }

  /// Diagonalizes `rows` (k columns) in place by unimodular row and column
  /// operations over Z/e. Returns the diagonal p-valuations per column,
  /// ascending; a residue of zero counts as valuation s. Column operations
  /// are mirrored onto `companion` when given (same column count).
  std::vector<int> diagonalize(std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols,
                               std::vector<std::vector<std::int64_t>>* companion) const;

 private:
  int p_;
  int s_;
  std::int64_t e_;
};

/// Row span over Z/p^s in Howell form: supports membership tests and size
/// counting for submodules of (Z/e)^k. Used for relation-span comparisons and
/// the minimal-generator search.
class RowSpan {
 public:
  RowSpan(int p, int s, std::size_t cols);

  void insert(std::vector<std::int64_t> row);
  bool contains(std::vector<std::int64_t> row) const;
  /// log_p of the number of elements in the span.
  int size_logp() const;
  std::size_t cols() const { return cols_; }

 private:
  int p_;
  int s_;
  std::int64_t e_;
  std::size_t cols_;
  // pivot_rows_[i] has its leading entry (a power of p) in column
  // pivot_col_[i]; columns strictly increase.
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> cols_index_;
};

/// Invariant factors of (Z/m_1 x ... x Z/m_k) / <relation rows>, each modulus
/// a power of the same prime p (modulus 1 columns are allowed and ignored by
/// the quotient). Entries of each row must be reduced modulo the column
/// modulus.
AbelianInvariants smith_quotient(int p, const std::vector<std::int64_t>& moduli,
                                 const std::vector<std::vector<std::int64_t>>& rows);

/// Invariant factors of L2/L1 for lattices e*Z^k <= L1 <= L2 <= Z^k given by
/// generating rows modulo e = p^s. Throws contract_error if L1 is not
/// contained in L2.
AbelianInvariants lattice_quotient(int p, int s, std::size_t cols,
                                   std::vector<std::vector<std::int64_t>> l2_rows,
                                   std::vector<std::vector<std::int64_t>> l1_rows);

}  // namespace whk
