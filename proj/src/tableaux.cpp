#include "krenergy/tableaux.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace krenergy {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("shape parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("shape parts must be weakly decreasing");
  }
}

int Shape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Shape Shape::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int len : parts_)
    for (int j = 0; j < len; ++j) ++conj[static_cast<std::size_t>(j)];
  return Shape(std::move(conj));
}

bool Shape::contains(const Shape& other) const {
  if (other.rows() > rows()) return false;
  for (int i = 0; i < other.rows(); ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

Shape staircase(int t, int scale) {
  if (t < 1 || scale < 1) throw std::invalid_argument("staircase requires t >= 1 and scale >= 1");
  std::vector<int> parts;
  for (int k = t; k >= 1; --k) parts.push_back(scale * k);
  return Shape(std::move(parts));
}

SkewShape::SkewShape(Shape outer, Shape inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw std::invalid_argument("inner shape is not contained in outer shape");
}

bool SkewShape::contains(Cell c) const {
  if (c.row < 1 || c.row > rows()) return false;
  return c.col > inner_[c.row - 1] && c.col <= outer_[c.row - 1];
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < rows(); ++i)
    for (int j = inner_[i]; j < outer_[i]; ++j) out.push_back({i + 1, j + 1});
  return out;
}

bool is_semistandard(const SkewShape& shape, const std::vector<std::vector<int>>& rows, int max_entry) {
  if (static_cast<int>(rows.size()) != shape.rows()) return false;
  for (int i = 0; i < shape.rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != shape.outer()[i] - shape.inner()[i]) return false;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 1 || row[k] > max_entry) return false;
      if (k > 0 && row[k] < row[k - 1]) return false;
    }
  }
  // Column strictness between consecutive rows wherever both cells are skew cells.
  for (int i = 1; i < shape.rows(); ++i) {
    const int lo = std::max(shape.inner()[i], shape.inner()[i - 1]);
    const int hi = std::min(shape.outer()[i], shape.outer()[i - 1]);
    for (int col = lo; col < hi; ++col) {
      const int up = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(col - shape.inner()[i - 1])];
      const int down = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col - shape.inner()[i])];
      if (down <= up) return false;
    }
  }
  return true;
}

Ssyt::Ssyt(SkewShape shape, const std::vector<std::vector<int>>& rows, int max_entry)
    : shape_(std::move(shape)), max_entry_(max_entry) {
  if (max_entry < 0) throw std::invalid_argument("max_entry must be nonnegative");
  if (!is_semistandard(shape_, rows, max_entry)) throw std::invalid_argument("filling is not semistandard");
  grid_.resize(static_cast<std::size_t>(shape_.rows()));
  for (int i = 0; i < shape_.rows(); ++i) {
    auto& g = grid_[static_cast<std::size_t>(i)];
    g.assign(static_cast<std::size_t>(shape_.inner()[i]), 0);
    g.insert(g.end(), rows[static_cast<std::size_t>(i)].begin(), rows[static_cast<std::size_t>(i)].end());
  }
}

int Ssyt::at(int row, int col) const {
  if (!shape_.contains({row, col})) return 0;
  return grid_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
}

std::vector<std::vector<int>> Ssyt::rows() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < shape_.rows(); ++i) {
    const auto& g = grid_[static_cast<std::size_t>(i)];
    out.emplace_back(g.begin() + shape_.inner()[i], g.end());
  }
  return out;
}

std::vector<int> Ssyt::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows()) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::uint64_t default_enumeration_guard() {
  if (const char* env = std::getenv("KR_ENERGY_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

SsytEnumerator::SsytEnumerator(SkewShape shape, int max_entry, std::uint64_t guard)
    : shape_(std::move(shape)), max_entry_(max_entry), guard_(guard), cells_(shape_.cells()) {
  const std::size_t n = cells_.size();
  left_.assign(n, -1);
  above_.assign(n, -1);
  upper_.assign(n, max_entry_);
  values_.assign(n, 0);
  auto index_of = [&](Cell c) -> long {
    for (std::size_t k = 0; k < n; ++k)
      if (cells_[k] == c) return static_cast<long>(k);
    return -1;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Cell c = cells_[k];
    left_[k] = index_of({c.row, c.col - 1});
    above_[k] = index_of({c.row - 1, c.col});
    int below = 0;
    for (int r = c.row + 1; shape_.contains({r, c.col}); ++r) ++below;
    upper_[k] = max_entry_ - below;
  }
}

int SsytEnumerator::lower(std::size_t k) const {
  int lo = 1;
  if (left_[k] >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(left_[k])]);
  if (above_[k] >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(above_[k])] + 1);
  return lo;
}

bool SsytEnumerator::next() {
  if (done_) return false;
  const long n = static_cast<long>(cells_.size());
  long k;
  if (!started_) {
    started_ = true;
    if (n == 0) {
      ++produced_;
      return true;
    }
    k = 0;
    values_[0] = lower(0) - 1;
  } else {
    if (n == 0) {
      done_ = true;
      return false;
    }
    k = n - 1;
  }
  while (k >= 0) {
    const auto uk = static_cast<std::size_t>(k);
    ++values_[uk];
    if (values_[uk] > upper_[uk]) {
      --k;
      continue;
    }
    if (k == n - 1) {
      if (++produced_ > guard_)
        throw GuardExceeded("tableau enumeration exceeded guard of " + std::to_string(guard_));
      return true;
    }
    ++k;
    values_[static_cast<std::size_t>(k)] = lower(static_cast<std::size_t>(k)) - 1;
  }
  done_ = true;
  return false;
}

Ssyt SsytEnumerator::current() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_.rows()));
  for (std::size_t k = 0; k < cells_.size(); ++k)
    rows[static_cast<std::size_t>(cells_[k].row - 1)].push_back(values_[k]);
  return Ssyt(shape_, rows, max_entry_);
}

std::uint64_t count_ssyt(const SkewShape& shape, int max_entry, std::uint64_t guard) {
  SsytEnumerator it(shape, max_entry, guard);
  while (it.next()) {}
  return it.produced();
}

std::vector<Ssyt> all_ssyt(const SkewShape& shape, int max_entry, std::uint64_t guard) {
  std::vector<Ssyt> out;
  SsytEnumerator it(shape, max_entry, guard);
  while (it.next()) out.push_back(it.current());
  return out;
}

std::vector<Cell> inner_corners(const SkewShape& shape) {
  std::vector<Cell> out;
  const Shape& in = shape.inner();
  for (int i = 0; i < in.rows(); ++i)
    if (in[i + 1] < in[i]) out.push_back({i + 1, in[i]});
  return out;
}

Ssyt jdt_slide(const Ssyt& t, Cell corner) {
  const SkewShape& shape = t.shape();
  const auto corners = inner_corners(shape);
  if (std::find(corners.begin(), corners.end(), corner) == corners.end())
    throw std::invalid_argument("slide target is not an inner corner");

  std::vector<std::vector<int>> grid;
  for (int i = 1; i <= shape.rows(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= shape.outer()[i - 1]; ++j) row.push_back(t.at(i, j));
    grid.push_back(std::move(row));
  }
  std::vector<int> outer = shape.outer().parts();
  std::vector<int> inner = shape.inner().parts();
  inner[static_cast<std::size_t>(corner.row - 1)] -= 1;

  // 0-based hole position
  int i = corner.row - 1;
  int j = corner.col - 1;
  const int nrows = static_cast<int>(grid.size());
  while (true) {
    const bool has_right = j + 1 < outer[static_cast<std::size_t>(i)];
    const bool has_below = i + 1 < nrows && j < outer[static_cast<std::size_t>(i + 1)];
    if (!has_right && !has_below) break;
    const int right = has_right ? grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)] : 0;
    const int below = has_below ? grid[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)] : 0;
    if (has_below && (!has_right || below <= right)) {
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = below;
      ++i;
    } else {
      grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = right;
      ++j;
    }
  }
  outer[static_cast<std::size_t>(i)] -= 1;
  grid[static_cast<std::size_t>(i)].pop_back();

  Shape new_outer(outer);
  Shape new_inner(inner);
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < new_outer.rows(); ++r) {
    const auto& g = grid[static_cast<std::size_t>(r)];
    rows.emplace_back(g.begin() + new_inner[r], g.end());
  }
  return Ssyt(SkewShape(new_outer, new_inner), rows, t.max_entry());
}

Ssyt rectify(const Ssyt& t) {
  return rectify(t, [](std::span<const Cell>) -> std::size_t { return 0; });
}

Ssyt rectify(const Ssyt& t, const CornerChooser& choose) {
  Ssyt cur = t;
  while (!cur.shape().is_straight()) {
    const auto corners = inner_corners(cur.shape());
    const std::size_t pick = choose(corners);
    if (pick >= corners.size()) throw std::out_of_range("corner chooser returned an invalid index");
    cur = jdt_slide(cur, corners[pick]);
  }
  return cur;
}

}  // namespace krenergy
