#pragma once

#include <gmpxx.h>

#include <bit>
#include <optional>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "krenergy/lsym.hpp"

namespace krenergy {

template <class V>
using Matrix = std::vector<std::vector<V>>;

using PolyMatrix = Matrix<ColoredPoly>;

/// Expansion by minors, memoised over the set of columns used by the leading
/// rows. Needs only ring operations, so it works for polynomial entries.
template <class V>
V determinant_laplace(const Matrix<V>& mat, const V& zero, const V& one) {
  const std::size_t size = mat.size();
  if (size == 0) return one;
  if (size > 30) throw std::invalid_argument("matrix too large for minor expansion");
  for (const auto& row : mat)
    if (row.size() != size) throw std::invalid_argument("determinant needs a square matrix");
  std::unordered_map<std::uint32_t, V> minors{{0u, one}};
  for (std::size_t i = 0; i < size; ++i) {
    std::unordered_map<std::uint32_t, V> next;
    for (const auto& [mask, val] : minors) {
      for (std::size_t c = 0; c < size; ++c) {
        const std::uint32_t bit = 1u << c;
        if ((mask & bit) || is_zero_value(mat[i][c])) continue;
        // Earlier rows sitting in columns right of c each contribute an inversion.
        const int inversions = std::popcount(mask >> (c + 1));
        V term = val * mat[i][c];
        auto [it, inserted] = next.try_emplace(mask | bit, zero);
        if (inversions % 2) it->second = it->second - term;
        else it->second = it->second + term;
      }
    }
    minors = std::move(next);
  }
  auto it = minors.find((1u << size) - 1u);
  return it == minors.end() ? zero : it->second;
}

/// Exact Gaussian elimination over the rationals.
mpq_class determinant_gauss(Matrix<mpq_class> mat);

template <LoopAlgebra A>
typename A::value_type determinant(const A& alg, const Matrix<typename A::value_type>& mat) {
  if constexpr (std::is_same_v<typename A::value_type, mpq_class>)
    return determinant_gauss(mat);
  else
    return determinant_laplace(mat, alg.zero(), alg.one());
}

/// Matrix (e^{(r-j+1+mu_j)}_{lambda_i-mu_j-i+j}) where the tableau shape is
/// lambda'/mu', i.e. lambda and mu are the conjugates of the outer and inner
/// shapes of `shape`.
template <LoopAlgebra A>
Matrix<typename A::value_type> jt_matrix(const A& alg, const SkewShape& shape, long long r, VarRange vars) {
  const Shape lambda = shape.outer().conjugate();
  const Shape mu = shape.inner().conjugate();
  const int size = lambda.rows();
  Matrix<typename A::value_type> mat(static_cast<std::size_t>(size));
  for (int i = 1; i <= size; ++i) {
    auto& row = mat[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= size; ++j) {
      const int deg = lambda[i - 1] - mu[j - 1] - i + j;
      row.push_back(loop_e(alg, deg, r - j + 1 + mu[j - 1], vars));
    }
  }
  return mat;
}

template <LoopAlgebra A>
typename A::value_type loop_schur_jt(const A& alg, const SkewShape& shape, long long r, VarRange vars) {
  return determinant(alg, jt_matrix(alg, shape, r, vars));
}

ColoredPoly loop_schur_jt(const Ambient& amb, const SkewShape& shape, long long r);

// Staircase Jacobi-Trudi matrices. A_m is the e-matrix of (n-1)delta_{m-1}
// padded with empty columns to size na x na, a = ceil((n-1)(m-1)/n). B_m
// appends n columns, each a copy of the column n places to its left moved
// down n-1 rows, giving n(a+1)-1 rows and n(a+1) columns.

/// Entry e_degree^{(r + color_offset)}, with color_offset reduced mod n.
struct ELabel {
  int degree;
  int color_offset;
  bool operator==(const ELabel&) const = default;
};

using LabelMatrix = Matrix<std::optional<ELabel>>;

struct StaircaseJtDims {
  int n;
  int m;
  int a;
  int a_size() const { return n * a; }
  int b_rows() const { return n * (a + 1) - 1; }
  int b_cols() const { return n * (a + 1); }
};

StaircaseJtDims staircase_jt_dims(int n, int m);
/// Labels vanish when the degree is negative or exceeds m.
LabelMatrix build_A_labels(int n, int m);
LabelMatrix build_B_labels(int n, int m);

/// Every column j > n equals column j-n moved down n-1 rows, with nothing
/// pushed off the bottom.
bool satisfies_translate(const LabelMatrix& labels, int n);

template <LoopAlgebra A>
Matrix<typename A::value_type> realize(const A& alg, const LabelMatrix& labels, long long r, VarRange vars) {
  Matrix<typename A::value_type> mat;
  for (const auto& row : labels) {
    auto& out = mat.emplace_back();
    for (const auto& label : row)
      out.push_back(label ? loop_e(alg, label->degree, r + label->color_offset, vars) : alg.zero());
  }
  return mat;
}

/// Components (-1)^{c-1} tau^{(r-c)}_{(n-1)m-c+1}(vars) for c = 1..n(a+1), m = |vars|.
template <LoopAlgebra A>
std::vector<typename A::value_type> tau_vector(const A& alg, long long r, VarRange vars) {
  const int n = alg.n();
  const int m = vars.size();
  const StaircaseJtDims dims = staircase_jt_dims(n, m);
  std::vector<typename A::value_type> out;
  for (int c = 1; c <= dims.b_cols(); ++c) {
    auto t = tau(alg, (n - 1) * m - c + 1, r - c, vars);
    out.push_back(c % 2 == 1 ? t : alg.zero() - t);
  }
  return out;
}

template <class V>
Matrix<V> remove_column(const Matrix<V>& mat, std::size_t col) {
  Matrix<V> out = mat;
  for (auto& row : out) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
  return out;
}

PolyMatrix build_A(const Ambient& amb, long long r);
PolyMatrix build_B(const Ambient& amb, long long r);

}  // namespace krenergy
