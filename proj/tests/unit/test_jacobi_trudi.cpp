#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "krenergy/jacobi_trudi.hpp"

using namespace krenergy;

namespace {

// Leibniz expansion as an independent determinant.
mpq_class leibniz(const Matrix<mpq_class>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

using L = std::optional<ELabel>;
L e(int d, int off) { return ELabel{d, static_cast<int>(residue(off, 3))}; }
const L _ = std::nullopt;

std::vector<Shape> partitions_in_box(int rows, int cols) {
  std::vector<Shape> out;
  for (int a = 0; a <= cols; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c)
        if (rows >= 3 || c == 0) out.emplace_back(std::vector<int>{a, b, c});
  return out;
}

}  // namespace

TEST_CASE("determinants agree with the Leibniz expansion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::size_t size = 0; size <= 6; ++size) {
    for (int t = 0; t < 10; ++t) {
      Matrix<mpq_class> m(size, std::vector<mpq_class>(size));
      for (auto& row : m)
        for (auto& v : row) {
          v = mpq_class(d(rng), 1 + (d(rng) + 9) % 4);
          v.canonicalize();
        }
      if (size > 0 && t % 3 == 0) m[0] = m[size - 1];  // force some singular cases
      const mpq_class want = size == 0 ? mpq_class(1) : leibniz(m);
      CHECK(determinant_gauss(m) == want);
      CHECK(determinant_laplace(m, mpq_class(0), mpq_class(1)) == want);
    }
  }
  CHECK_THROWS(determinant_gauss(Matrix<mpq_class>{{1, 2}}));
}

TEST_CASE("symbolic determinant of a small matrix") {
  const Ambient amb(2, 2);
  const auto a = ColoredPoly::variable(amb, 1, 0), b = ColoredPoly::variable(amb, 1, 1);
  const auto c = ColoredPoly::variable(amb, 2, 0), d = ColoredPoly::variable(amb, 2, 1);
  CHECK(determinant(PolyAlgebra{amb}, PolyMatrix{{a, b}, {c, d}}) == a * d - b * c);
}

TEST_CASE("Jacobi-Trudi for rows and columns") {
  const Ambient amb(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int k = 1; k <= 3; ++k) {
      CHECK(loop_schur_jt(amb, SkewShape(Shape({k})), r) == loop_h(amb, k, r, {1, 3}));
      CHECK(loop_schur_jt(amb, SkewShape(Shape(std::vector<int>(static_cast<std::size_t>(k), 1))), r) ==
            loop_e(amb, k, r, {1, 3}));
    }
  }
}

TEST_CASE("Jacobi-Trudi equals the tableau sum in a 3x3 box") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      const Ambient amb(m, n);
      const auto shapes = partitions_in_box(3, 3);
      for (const Shape& outer : shapes)
        for (const Shape& inner : shapes) {
          if (!outer.contains(inner) || outer.size() == 0) continue;
          const SkewShape s(outer, inner);
          for (int r = 0; r < n; ++r) CHECK(loop_schur_jt(amb, s, r) == loop_schur_tableaux(amb, s, r));
        }
    }
}

TEST_CASE("staircase matrix dimensions") {
  const auto d = staircase_jt_dims(3, 4);
  CHECK(d.a == 2);
  CHECK(d.a_size() == 6);
  CHECK(d.b_rows() == 8);
  CHECK(d.b_cols() == 9);
  CHECK(staircase_jt_dims(2, 3).a == 1);
  CHECK(staircase_jt_dims(4, 5).a == 3);
  CHECK_THROWS(staircase_jt_dims(3, 1));
}

TEST_CASE("A_4 for n=3 matches the displayed matrix") {
  const LabelMatrix want = {
      {e(3, 0), e(4, -1), _, _, _, _},
      {e(2, 0), e(3, -1), e(4, -2), _, _, _},
      {e(0, 0), e(1, -1), e(2, -2), e(3, 0), e(4, -1), _},
      {_, e(0, -1), e(1, -2), e(2, 0), e(3, -1), e(4, -2)},
      {_, _, _, e(0, 0), e(1, -1), e(2, -2)},
      {_, _, _, _, e(0, -1), e(1, -2)},
  };
  CHECK(build_A_labels(3, 4) == want);
}

TEST_CASE("B_4 for n=3 matches the displayed matrix") {
  const LabelMatrix want = {
      {e(3, 0), e(4, -1), _, _, _, _, _, _, _},
      {e(2, 0), e(3, -1), e(4, -2), _, _, _, _, _, _},
      {e(0, 0), e(1, -1), e(2, -2), e(3, 0), e(4, -1), _, _, _, _},
      {_, e(0, -1), e(1, -2), e(2, 0), e(3, -1), e(4, -2), _, _, _},
      {_, _, _, e(0, 0), e(1, -1), e(2, -2), e(3, 0), e(4, -1), _},
      {_, _, _, _, e(0, -1), e(1, -2), e(2, 0), e(3, -1), e(4, -2)},
      {_, _, _, _, _, _, e(0, 0), e(1, -1), e(2, -2)},
      {_, _, _, _, _, _, _, e(0, -1), e(1, -2)},
  };
  CHECK(build_B_labels(3, 4) == want);
}

TEST_CASE("column translation structure") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 5; ++m) {
      CHECK(satisfies_translate(build_A_labels(n, m), n));
      CHECK(satisfies_translate(build_B_labels(n, m), n));
    }
  LabelMatrix broken = build_A_labels(3, 4);
  broken[3][4] = ELabel{1, 0};
  CHECK_FALSE(satisfies_translate(broken, 3));
}

TEST_CASE("det A_m is the staircase loop Schur function") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) {
      const Ambient amb(m, n);
      for (int r = 0; r < n; ++r)
        CHECK(determinant(PolyAlgebra{amb}, build_A(amb, r)) ==
              loop_schur_tableaux(amb, SkewShape(staircase(m - 1, n - 1)), r));
    }
}

TEST_CASE("tau vector") {
  const Ambient amb(4, 3);
  const auto t = tau_vector(PolyAlgebra{amb}, 1, {1, 4});
  REQUIRE(t.size() == 9);
  CHECK(t[0] == tau(amb, 8, 0, {1, 4}));
  CHECK(t[1] == -tau(amb, 7, -1, {1, 4}));
  CHECK(t[8] == tau(amb, 0, -8, {1, 4}));
}
