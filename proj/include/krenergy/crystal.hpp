#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "krenergy/tableaux.hpp"

namespace krenergy {

// Letters are 1..n. Internally the count of letter L lives at index L-1, so a
// 1-based color c in the crystal formulas reads counts[(c - 1) mod n].

/// Number of letters (and colors); at least 2.
struct CrystalParams {
  int n;
  explicit CrystalParams(int n_);
};

/// A single-row tableau in the alphabet 1..n, stored as letter counts.
class CrystalElement {
 public:
  explicit CrystalElement(std::vector<std::int64_t> counts);
  static CrystalElement empty(int n);
  /// Parses a row word such as "1224" (letters 1..9, weakly increasing).
  static CrystalElement from_row(std::string_view word, int n);

  int n() const { return static_cast<int>(counts_.size()); }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t capacity() const { return capacity_; }
  /// Count of letter `letter` in 1..n.
  std::int64_t count(int letter) const { return counts_[static_cast<std::size_t>(letter - 1)]; }
  /// Count of the letter with 1-based color `color`, read modulo n.
  std::int64_t count_mod(long long color) const;
  /// The weakly increasing row word.
  std::vector<int> letters() const;
  std::string to_string() const;

  bool operator==(const CrystalElement&) const = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t capacity_ = 0;
};

class TensorElement {
 public:
  TensorElement(CrystalParams params, std::vector<CrystalElement> factors);

  int n() const { return n_; }
  int m() const { return static_cast<int>(factors_.size()); }
  const std::vector<CrystalElement>& factors() const { return factors_; }
  /// Factor b_i, 1-based.
  const CrystalElement& factor(int i) const { return factors_.at(static_cast<std::size_t>(i - 1)); }

  bool operator==(const TensorElement&) const = default;

 private:
  int n_;
  std::vector<CrystalElement> factors_;
};

/// Integer values x_i^{(r)} for i in 1..m and residues r in 0..n-1.
class TropicalGrid {
 public:
  TropicalGrid(int m, int n);
  int m() const { return m_; }
  int n() const { return n_; }
  std::int64_t at(int i, int r) const;
  void set(int i, int r, std::int64_t v);
  bool operator==(const TropicalGrid&) const = default;

 private:
  int m_;
  int n_;
  std::vector<std::int64_t> values_;
};

/// ok_r(b1, b2) for a 1-based color r (any integer, taken mod n).
std::int64_t ok(long long r, const CrystalElement& b1, const CrystalElement& b2);

/// Combinatorial R-matrix B1 (x) B2 -> B2 (x) B1 by the piecewise-linear formula.
std::pair<CrystalElement, CrystalElement> r_matrix(const CrystalElement& b1, const CrystalElement& b2);

/// The same map found by search: the unique pair whose two-row skew tableau
/// rectifies to the rectification of (b1, b2). The second factor is the top
/// row, placed entirely to the right of the first.
std::pair<CrystalElement, CrystalElement> r_matrix_oracle(const CrystalElement& b1, const CrystalElement& b2,
                                                          std::uint64_t guard = 1'000'000);

/// Skew tableau with `bottom` as row 2 and `top` as row 1 shifted right by |bottom|.
Ssyt two_row_tableau(const CrystalElement& bottom, const CrystalElement& top);

/// Replaces (b_j, b_{j+1}) by their R-matrix image; j is 1-based.
TensorElement apply_s(const TensorElement& b, int j);

/// Local coenergy H(b1 (x) b2) = ok_1(b1, b2).
std::int64_t coenergy(const CrystalElement& b1, const CrystalElement& b2);

/// Largest shift of the top row b2 leftwards over the bottom row b1 that keeps
/// columns strictly increasing.
std::int64_t coenergy_sliding_oracle(const CrystalElement& b1, const CrystalElement& b2);

/// Sum over i < j of H(s_i ... s_{j-2}(b)_{j-1} (x) b_j).
std::int64_t intrinsic_energy(const TensorElement& b);

/// x_i^{(r)} = number of letters congruent to r+1-i (mod n) in b_i.
TropicalGrid counts_to_grid(const TensorElement& b);
TensorElement grid_to_counts(const TropicalGrid& grid);

/// Minimum over tableaux T of shape (n-1)delta_{m-1}, entries 1..m, of
/// the sum over cells (i,j) of x_{T(i,j)}^{(i-j)}.
std::int64_t energy_staircase(const TensorElement& b, std::uint64_t guard = default_enumeration_guard());

/// One term of the staircase objective: a tableau and the variables (i, r)
/// its cells contribute, in reading order.
struct StaircaseTerm {
  Ssyt tableau;
  std::vector<std::pair<int, int>> variables;
};

std::vector<StaircaseTerm> staircase_objective(int n, int m, std::uint64_t guard = default_enumeration_guard());

}  // namespace krenergy
