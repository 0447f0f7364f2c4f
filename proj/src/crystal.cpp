#include "krenergy/crystal.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "krenergy/checked.hpp"

namespace krenergy {

CrystalParams::CrystalParams(int n_) : n(n_) {
  if (n < 2) throw std::invalid_argument("crystal parameter n must be at least 2");
}

CrystalElement::CrystalElement(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
  CrystalParams{n()};
  for (auto c : counts_) {
    if (c < 0) throw std::invalid_argument("letter counts must be nonnegative");
    capacity_ = checked_add(capacity_, c);
  }
}

CrystalElement CrystalElement::empty(int n) { return CrystalElement(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

CrystalElement CrystalElement::from_row(std::string_view word, int n) {
  CrystalParams{n};
  if (n > 9) throw std::invalid_argument("row words are only supported for n <= 9");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  int prev = 0;
  for (char ch : word) {
    const int letter = ch - '0';
    if (letter < 1 || letter > n) throw std::invalid_argument("row word letter out of range: " + std::string(1, ch));
    if (letter < prev) throw std::invalid_argument("row word must be weakly increasing");
    prev = letter;
    ++counts[static_cast<std::size_t>(letter - 1)];
  }
  return CrystalElement(std::move(counts));
}

std::int64_t CrystalElement::count_mod(long long color) const {
  return counts_[static_cast<std::size_t>(residue(color - 1, n()))];
}

std::vector<int> CrystalElement::letters() const {
  std::vector<int> out;
  for (int letter = 1; letter <= n(); ++letter)
    for (std::int64_t k = 0; k < count(letter); ++k) out.push_back(letter);
  return out;
}

std::string CrystalElement::to_string() const {
  std::string s;
  for (int letter : letters()) {
    if (!s.empty() && n() > 9) s += ',';
    s += std::to_string(letter);
  }
  return s;
}

TensorElement::TensorElement(CrystalParams params, std::vector<CrystalElement> factors)
    : n_(params.n), factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("a tensor needs at least one factor");
  for (const auto& f : factors_)
    if (f.n() != n_) throw std::invalid_argument("all tensor factors must share n");
}

TropicalGrid::TropicalGrid(int m, int n) : m_(m), n_(n), values_(static_cast<std::size_t>(m * n), 0) {
  if (m < 1 || n < 2) throw std::invalid_argument("grid requires m >= 1 and n >= 2");
}

std::int64_t TropicalGrid::at(int i, int r) const {
  if (i < 1 || i > m_) throw std::out_of_range("grid row out of range");
  return values_[static_cast<std::size_t>((i - 1) * n_ + residue(r, n_))];
}

void TropicalGrid::set(int i, int r, std::int64_t v) {
  if (i < 1 || i > m_) throw std::out_of_range("grid row out of range");
  values_[static_cast<std::size_t>((i - 1) * n_ + residue(r, n_))] = v;
}

namespace {

void require_same_n(const CrystalElement& a, const CrystalElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("crystal elements have different n");
}

}  // namespace

std::int64_t ok(long long r, const CrystalElement& b1, const CrystalElement& b2) {
  require_same_n(b1, b2);
  const int n = b1.n();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int s = 0; s <= n - 1; ++s) {
    std::int64_t sum = 0;
    for (int t = 1; t <= s; ++t) sum = checked_add(sum, b2.count_mod(r + t - 1));
    for (int t = s + 1; t <= n - 1; ++t) sum = checked_add(sum, b1.count_mod(r + t));
    best = std::min(best, sum);
  }
  return best;
}

std::pair<CrystalElement, CrystalElement> r_matrix(const CrystalElement& b1, const CrystalElement& b2) {
  require_same_n(b1, b2);
  const int n = b1.n();
  std::vector<std::int64_t> oks(static_cast<std::size_t>(n) + 1);
  for (int c = 1; c <= n + 1; ++c) oks[static_cast<std::size_t>(c - 1)] = ok(c, b1, b2);
  std::vector<std::int64_t> c1(static_cast<std::size_t>(n)), c2(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) {
    const std::int64_t delta = checked_sub(oks[static_cast<std::size_t>(c)], oks[static_cast<std::size_t>(c - 1)]);
    const std::int64_t v1 = checked_add(b2.count(c), delta);
    const std::int64_t v2 = checked_sub(b1.count(c), delta);
    if (v1 < 0 || v2 < 0) throw std::logic_error("R-matrix produced a negative letter count");
    c1[static_cast<std::size_t>(c - 1)] = v1;
    c2[static_cast<std::size_t>(c - 1)] = v2;
  }
  return {CrystalElement(std::move(c1)), CrystalElement(std::move(c2))};
}

Ssyt two_row_tableau(const CrystalElement& bottom, const CrystalElement& top) {
  require_same_n(bottom, top);
  const auto lb = static_cast<int>(bottom.capacity());
  const auto lt = static_cast<int>(top.capacity());
  if (lb + lt == 0) return Ssyt(SkewShape{}, {}, bottom.n());
  if (lb == 0) return Ssyt(SkewShape(Shape({lt})), {top.letters()}, bottom.n());
  return Ssyt(SkewShape(Shape({lb + lt, lb}), Shape({lb})), {top.letters(), bottom.letters()}, bottom.n());
}

std::pair<CrystalElement, CrystalElement> r_matrix_oracle(const CrystalElement& b1, const CrystalElement& b2,
                                                          std::uint64_t guard) {
  require_same_n(b1, b2);
  const int n = b1.n();
  const Ssyt target = rectify(two_row_tableau(b1, b2));
  std::vector<std::int64_t> total(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c) total[static_cast<std::size_t>(c - 1)] = checked_add(b1.count(c), b2.count(c));

  std::optional<std::pair<CrystalElement, CrystalElement>> found;
  std::uint64_t candidates = 0;
  std::vector<std::int64_t> c1(static_cast<std::size_t>(n), 0);

  // Distribute |b2| letters into c1 under the per-letter totals; c2 takes the rest.
  auto search = [&](auto&& self, int letter, std::int64_t remaining) -> void {
    if (letter > n) {
      if (remaining != 0) return;
      if (++candidates > guard) throw GuardExceeded("R-matrix oracle exceeded candidate guard");
      std::vector<std::int64_t> c2(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < c2.size(); ++k) c2[k] = total[k] - c1[k];
      CrystalElement e1(c1), e2(std::move(c2));
      if (rectify(two_row_tableau(e1, e2)) == target) {
        if (found) throw std::logic_error("R-matrix oracle found more than one matching pair");
        found.emplace(e1, e2);
      }
      return;
    }
    const auto idx = static_cast<std::size_t>(letter - 1);
    const std::int64_t hi = std::min(remaining, total[idx]);
    for (std::int64_t v = 0; v <= hi; ++v) {
      c1[idx] = v;
      self(self, letter + 1, remaining - v);
    }
    c1[idx] = 0;
  };
  search(search, 1, b2.capacity());
  if (!found) throw std::logic_error("R-matrix oracle found no matching pair");
  return *found;
}

TensorElement apply_s(const TensorElement& b, int j) {
  if (j < 1 || j >= b.m()) throw std::out_of_range("apply_s index out of range");
  auto factors = b.factors();
  auto [c1, c2] = r_matrix(factors[static_cast<std::size_t>(j - 1)], factors[static_cast<std::size_t>(j)]);
  factors[static_cast<std::size_t>(j - 1)] = std::move(c1);
  factors[static_cast<std::size_t>(j)] = std::move(c2);
  return TensorElement(CrystalParams{b.n()}, std::move(factors));
}

std::int64_t coenergy(const CrystalElement& b1, const CrystalElement& b2) { return ok(1, b1, b2); }

std::int64_t coenergy_sliding_oracle(const CrystalElement& b1, const CrystalElement& b2) {
  require_same_n(b1, b2);
  const auto bottom = b1.letters();
  const auto top = b2.letters();
  const std::size_t limit = std::min(bottom.size(), top.size());
  std::int64_t best = 0;
  for (std::size_t k = 1; k <= limit; ++k) {
    bool valid = true;
    for (std::size_t t = 0; t < k && valid; ++t) valid = top[t] < bottom[bottom.size() - k + t];
    if (valid) best = static_cast<std::int64_t>(k);
  }
  return best;
}

std::int64_t intrinsic_energy(const TensorElement& b) {
  std::int64_t total = 0;
  for (int i = 1; i < b.m(); ++i) {
    // After applying s_i, ..., s_{j-2} the factor at j-1 is b_i carried rightwards.
    TensorElement moved = b;
    for (int j = i + 1; j <= b.m(); ++j) {
      if (j >= i + 2) moved = apply_s(moved, j - 2);
      total = checked_add(total, coenergy(moved.factor(j - 1), moved.factor(j)));
    }
  }
  return total;
}

TropicalGrid counts_to_grid(const TensorElement& b) {
  TropicalGrid grid(b.m(), b.n());
  for (int i = 1; i <= b.m(); ++i)
    for (int r = 0; r < b.n(); ++r) grid.set(i, r, b.factor(i).count_mod(r + 1 - i));
  return grid;
}

TensorElement grid_to_counts(const TropicalGrid& grid) {
  std::vector<CrystalElement> factors;
  for (int i = 1; i <= grid.m(); ++i) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(grid.n()));
    for (int r = 0; r < grid.n(); ++r) counts[static_cast<std::size_t>(residue(r - i, grid.n()))] = grid.at(i, r);
    factors.emplace_back(std::move(counts));
  }
  return TensorElement(CrystalParams{grid.n()}, std::move(factors));
}

std::int64_t energy_staircase(const TensorElement& b, std::uint64_t guard) {
  if (b.m() == 1) return 0;
  const int n = b.n();
  const TropicalGrid grid = counts_to_grid(b);
  SsytEnumerator it(SkewShape(staircase(b.m() - 1, n - 1)), b.m(), guard);
  const auto cells = it.cells();
  std::vector<int> colors;
  for (const Cell& c : cells) colors.push_back(residue(c.row - c.col, n));
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  while (it.next()) {
    const auto entries = it.entries();
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) sum = checked_add(sum, grid.at(entries[k], colors[k]));
    best = std::min(best, sum);
  }
  return best;
}

std::vector<StaircaseTerm> staircase_objective(int n, int m, std::uint64_t guard) {
  CrystalParams{n};
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  std::vector<StaircaseTerm> out;
  const SkewShape shape = m == 1 ? SkewShape{} : SkewShape(staircase(m - 1, n - 1));
  SsytEnumerator it(shape, m, guard);
  while (it.next()) {
    StaircaseTerm term{it.current(), {}};
    const auto cells = it.cells();
    const auto entries = it.entries();
    for (std::size_t k = 0; k < cells.size(); ++k)
      term.variables.emplace_back(entries[k], residue(cells[k].row - cells[k].col, n));
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace krenergy
