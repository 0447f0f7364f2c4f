#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace krenergy {

/// A cell in English notation, 1-based (row counted from the top).
struct Cell {
  int row;
  int col;
  bool operator==(const Cell&) const = default;
};

/// A partition. Trailing zeros are dropped on construction.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  /// Length of row `i` (0-based); 0 past the last row.
  int operator[](int i) const { return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0; }
  int size() const;
  bool empty() const { return parts_.empty(); }
  Shape conjugate() const;
  bool contains(const Shape& other) const;

  bool operator==(const Shape&) const = default;

 private:
  std::vector<int> parts_;
};

/// The shape (scale*t, scale*(t-1), ..., scale).
Shape staircase(int t, int scale);

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Shape outer, Shape inner = Shape{});

  const Shape& outer() const { return outer_; }
  const Shape& inner() const { return inner_; }
  int rows() const { return outer_.rows(); }
  int size() const { return outer_.size() - inner_.size(); }
  bool is_straight() const { return inner_.empty(); }
  bool contains(Cell c) const;

  /// Skew cells in row-major order.
  std::vector<Cell> cells() const;

  bool operator==(const SkewShape&) const = default;

 private:
  Shape outer_;
  Shape inner_;
};

/// Semistandard filling of a skew shape with entries in 1..max_entry.
class Ssyt {
 public:
  /// `rows[i]` lists the entries of the skew cells of row i+1, left to right.
  Ssyt(SkewShape shape, const std::vector<std::vector<int>>& rows, int max_entry);

  const SkewShape& shape() const { return shape_; }
  int max_entry() const { return max_entry_; }
  /// Entry at a 1-based cell; 0 for cells of the inner shape or outside.
  int at(int row, int col) const;
  std::vector<std::vector<int>> rows() const;
  /// Row-major entries, top row first.
  std::vector<int> reading_word() const;

  bool operator==(const Ssyt&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> grid_;  // full rows; inner cells hold 0
  int max_entry_ = 0;
};

/// True iff `rows` is a semistandard filling of `shape` with entries in 1..max_entry.
bool is_semistandard(const SkewShape& shape, const std::vector<std::vector<int>>& rows, int max_entry);

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 10^7 unless KR_ENERGY_GUARD is set to a positive integer.
std::uint64_t default_enumeration_guard();

/// Yields each semistandard filling once, in lexicographic order of the
/// reading word. An empty shape yields a single empty tableau.
class SsytEnumerator {
 public:
  SsytEnumerator(SkewShape shape, int max_entry, std::uint64_t guard = default_enumeration_guard());

  bool next();
  std::span<const int> entries() const { return values_; }
  std::span<const Cell> cells() const { return cells_; }
  Ssyt current() const;
  std::uint64_t produced() const { return produced_; }

 private:
  int lower(std::size_t k) const;

  SkewShape shape_;
  int max_entry_;
  std::uint64_t guard_;
  std::vector<Cell> cells_;
  std::vector<long> left_;   // index of left neighbour in cells_, or -1
  std::vector<long> above_;  // index of upper neighbour in cells_, or -1
  std::vector<int> upper_;
  std::vector<int> values_;
  std::uint64_t produced_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::uint64_t count_ssyt(const SkewShape& shape, int max_entry, std::uint64_t guard = default_enumeration_guard());
std::vector<Ssyt> all_ssyt(const SkewShape& shape, int max_entry, std::uint64_t guard = default_enumeration_guard());

/// Cells of the inner shape whose removal leaves a partition.
std::vector<Cell> inner_corners(const SkewShape& shape);

/// One jeu de taquin slide into an inner corner.
Ssyt jdt_slide(const Ssyt& t, Cell corner);

/// Picks which inner corner to slide into next.
using CornerChooser = std::function<std::size_t(std::span<const Cell>)>;

/// Rectification by repeated slides, by default always into the topmost corner.
Ssyt rectify(const Ssyt& t);
Ssyt rectify(const Ssyt& t, const CornerChooser& choose);

}  // namespace krenergy
