#include "krenergy/jacobi_trudi.hpp"

#include <stdexcept>

namespace krenergy {

mpq_class determinant_gauss(Matrix<mpq_class> mat) {
  const std::size_t size = mat.size();
  for (const auto& row : mat)
    if (row.size() != size) throw std::invalid_argument("determinant needs a square matrix");
  mpq_class det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && sgn(mat[pivot][col]) == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    for (std::size_t row = col + 1; row < size; ++row) {
      if (sgn(mat[row][col]) == 0) continue;
      const mpq_class factor = mat[row][col] / mat[col][col];
      for (std::size_t k = col; k < size; ++k) mat[row][k] -= factor * mat[col][k];
    }
  }
  return det;
}

ColoredPoly loop_schur_jt(const Ambient& amb, const SkewShape& shape, long long r) {
  return loop_schur_jt(PolyAlgebra{amb}, shape, r, VarRange{1, amb.m});
}

StaircaseJtDims staircase_jt_dims(int n, int m) {
  if (n < 2) throw std::invalid_argument("staircase matrices need n >= 2");
  if (m < 2) throw std::invalid_argument("staircase matrices need m >= 2");
  const int cells_in_first_column = (n - 1) * (m - 1);
  return {n, m, (cells_in_first_column + n - 1) / n};
}

namespace {

// Conjugate of (n-1)delta_{m-1}: each of m-1, m-2, ..., 1 repeated n-1 times.
int staircase_conjugate_part(int n, int m, int row) {
  const int value = m - 1 - (row - 1) / (n - 1);
  return std::max(value, 0);
}

std::optional<ELabel> staircase_label(int n, int m, int row, int col) {
  const int deg = staircase_conjugate_part(n, m, row) - row + col;
  if (deg < 0 || deg > m) return std::nullopt;
  return ELabel{deg, residue(1 - col, n)};
}

}  // namespace

LabelMatrix build_A_labels(int n, int m) {
  const StaircaseJtDims dims = staircase_jt_dims(n, m);
  const int size = dims.a_size();
  LabelMatrix out(static_cast<std::size_t>(size));
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) out[static_cast<std::size_t>(i - 1)].push_back(staircase_label(n, m, i, j));
  return out;
}

LabelMatrix build_B_labels(int n, int m) {
  const StaircaseJtDims dims = staircase_jt_dims(n, m);
  const int rows = dims.b_rows();
  const int cols = dims.b_cols();
  LabelMatrix out(static_cast<std::size_t>(rows), std::vector<std::optional<ELabel>>(static_cast<std::size_t>(cols)));
  for (int j = 1; j <= cols; ++j) {
    for (int i = 1; i <= rows; ++i) {
      auto& slot = out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (j <= n)
        slot = staircase_label(n, m, i, j);
      else if (i >= n)
        slot = out[static_cast<std::size_t>(i - n)][static_cast<std::size_t>(j - n - 1)];
    }
  }
  return out;
}

bool satisfies_translate(const LabelMatrix& labels, int n) {
  const int rows = static_cast<int>(labels.size());
  for (int i = 1; i <= rows; ++i) {
    const auto& row = labels[static_cast<std::size_t>(i - 1)];
    const int cols = static_cast<int>(row.size());
    for (int j = n + 1; j <= cols; ++j) {
      const std::optional<ELabel> expected =
          i >= n ? labels[static_cast<std::size_t>(i - n)][static_cast<std::size_t>(j - n - 1)] : std::nullopt;
      if (row[static_cast<std::size_t>(j - 1)] != expected) return false;
      // Entries of column j-n in the last n-1 rows would be pushed off.
      if (i > rows - (n - 1) && labels[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - n - 1)])
        return false;
    }
  }
  return true;
}

PolyMatrix build_A(const Ambient& amb, long long r) {
  return realize(PolyAlgebra{amb}, build_A_labels(amb.n, amb.m), r, VarRange{1, amb.m});
}

PolyMatrix build_B(const Ambient& amb, long long r) {
  return realize(PolyAlgebra{amb}, build_B_labels(amb.n, amb.m), r, VarRange{1, amb.m});
}

}  // namespace krenergy
