#include <doctest.h>

#include <random>

#include "krenergy/crystal.hpp"
#include "krenergy/verify.hpp"

using namespace krenergy;

namespace {

CrystalElement row(const char* w, int n = 4) { return CrystalElement::from_row(w, n); }

TensorElement tensor(std::initializer_list<const char*> rows, int n) {
  std::vector<CrystalElement> fs;
  for (const char* r : rows) fs.push_back(row(r, n));
  return TensorElement(CrystalParams{n}, std::move(fs));
}

// ok_r straight from the definition, with 1-based colors read mod n.
std::int64_t ok_by_definition(int r, const CrystalElement& y1, const CrystalElement& y2) {
  const int n = y1.n();
  auto y = [n](const CrystalElement& b, int c) { return b.count(((c - 1) % n + n) % n + 1); };
  std::int64_t best = -1;
  for (int s = 0; s <= n - 1; ++s) {
    std::int64_t sum = 0;
    for (int t = 1; t <= s; ++t) sum += y(y2, r + t - 1);
    for (int t = s + 1; t <= n - 1; ++t) sum += y(y1, r + t);
    if (best < 0 || sum < best) best = sum;
  }
  return best;
}

}  // namespace

TEST_CASE("crystal elements") {
  const auto b = row("1224");
  CHECK(b.counts() == std::vector<std::int64_t>{1, 2, 0, 1});
  CHECK(b.capacity() == 4);
  CHECK(b.to_string() == "1224");
  CHECK(b.letters() == std::vector<int>{1, 2, 2, 4});
  CHECK(b.count_mod(6) == 2);
  CHECK(b.count_mod(0) == 1);
  CHECK(CrystalElement::empty(3).capacity() == 0);
  CHECK_THROWS(row("21"));
  CHECK_THROWS(row("15"));
  CHECK_THROWS(CrystalElement::from_row("1", 10));
  CHECK_THROWS(CrystalElement({1}));
  CHECK_THROWS(CrystalElement({1, -1}));
  CHECK_THROWS(CrystalParams{1});
  CHECK_THROWS(TensorElement(CrystalParams{3}, {}));
  CHECK_THROWS(TensorElement(CrystalParams{3}, {row("1", 3), row("1", 4)}));
}

TEST_CASE("ok on the worked example") {
  CHECK(ok(1, row("13"), row("1224")) == 1);
  CHECK(ok(2, row("13"), row("1224")) == 2);
  CHECK(ok(1, row("13"), row("")) == 0);
  CHECK_THROWS(ok(1, row("1", 3), row("1", 4)));
}

TEST_CASE("ok agrees with the definition") {
  for (int n = 2; n <= 4; ++n) {
    const auto pool = elements_up_to(n, 2);
    for (const auto& a : pool)
      for (const auto& b : pool)
        for (int r = -1; r <= n + 1; ++r) CHECK(ok(r, a, b) == ok_by_definition(r, a, b));
  }
}

TEST_CASE("R-matrix worked example and trivial cases") {
  const auto [c1, c2] = r_matrix(row("13"), row("1224"));
  CHECK(c1 == row("1123"));
  CHECK(c2 == row("24"));
  CHECK(r_matrix_oracle(row("13"), row("1224")) == std::make_pair(row("1123"), row("24")));
  CHECK(r_matrix(row("123"), row("123")) == std::make_pair(row("123"), row("123")));
  CHECK(r_matrix_oracle(row(""), row("224")) == std::make_pair(row("224"), row("")));
  CHECK(r_matrix(row("112", 3), row("23", 3)) == r_matrix_oracle(row("112", 3), row("23", 3)));
}

TEST_CASE("R-matrix formula matches the jeu de taquin oracle") {
  for (auto [n, cap] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}}) {
    const auto pool = elements_up_to(n, cap);
    for (const auto& a : pool)
      for (const auto& b : pool) {
        const auto formula = r_matrix(a, b);
        CHECK(formula == r_matrix_oracle(a, b));
        CHECK(formula.first.capacity() == b.capacity());
        CHECK(formula.second.capacity() == a.capacity());
        for (int L = 1; L <= n; ++L) CHECK(formula.first.count(L) + formula.second.count(L) == a.count(L) + b.count(L));
        CHECK(r_matrix(formula.first, formula.second) == std::make_pair(a, b));
        CHECK(coenergy(formula.first, formula.second) == coenergy(a, b));
      }
  }
}

TEST_CASE("two-row tableau layout") {
  const Ssyt t = two_row_tableau(row("13"), row("1224"));
  CHECK(t.shape() == SkewShape(Shape({6, 2}), Shape({2})));
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2, 2, 4}, {1, 3}});
  CHECK(two_row_tableau(row(""), row("12")).rows() == std::vector<std::vector<int>>{{1, 2}});
  CHECK(two_row_tableau(row(""), row("")).shape().size() == 0);
}

TEST_CASE("coenergy") {
  CHECK(coenergy(row("2234"), row("12334")) == 3);
  CHECK(coenergy_sliding_oracle(row("2234"), row("12334")) == 3);
  CHECK(coenergy(row("13"), row("1224")) == 1);
  CHECK(coenergy(row("1", 2), row("1", 2)) == 0);
  CHECK(coenergy_sliding_oracle(row("123"), row("")) == 0);
  for (int n = 2; n <= 4; ++n) {
    const auto pool = elements_up_to(n, 3);
    for (const auto& a : pool)
      for (const auto& b : pool) CHECK(coenergy(a, b) == coenergy_sliding_oracle(a, b));
  }
}

TEST_CASE("apply_s") {
  const auto b = tensor({"13", "1224", "123"}, 4);
  CHECK(apply_s(b, 1) == tensor({"1123", "24", "123"}, 4));
  CHECK(apply_s(apply_s(b, 2), 2) == b);
  CHECK_THROWS_AS(apply_s(b, 0), std::out_of_range);
  CHECK_THROWS_AS(apply_s(b, 3), std::out_of_range);

  std::mt19937_64 rng(7);
  const auto pool = elements_up_to(3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const TensorElement x(CrystalParams{3}, {pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]});
    CHECK(apply_s(apply_s(apply_s(x, 1), 2), 1) == apply_s(apply_s(apply_s(x, 2), 1), 2));
  }
}

TEST_CASE("intrinsic energy") {
  const auto b = tensor({"13", "1224", "123"}, 4);
  CHECK(intrinsic_energy(b) == 5);
  CHECK(energy_staircase(b) == 5);
  CHECK(intrinsic_energy(tensor({"1224"}, 4)) == 0);
  CHECK(energy_staircase(tensor({"1224"}, 4)) == 0);
  CHECK(intrinsic_energy(tensor({"", "", ""}, 3)) == 0);
  CHECK(energy_staircase(tensor({"", "", ""}, 3)) == 0);
  const auto small = tensor({"1", "2", "1"}, 2);
  CHECK(intrinsic_energy(small) == energy_staircase(small));
  for (int j = 1; j <= 2; ++j) CHECK(intrinsic_energy(apply_s(b, j)) == 5);
}

TEST_CASE("intrinsic energy equals the staircase minimum") {
  for (int n = 2; n <= 3; ++n) {
    const auto pool = elements_up_to(n, 2);
    for (const auto& a : pool)
      for (const auto& b : pool)
        for (const auto& c : pool) {
          const TensorElement x(CrystalParams{n}, {a, b, c});
          CHECK(intrinsic_energy(x) == energy_staircase(x));
        }
  }
}

TEST_CASE("counts_to_grid") {
  const auto b = tensor({"13", "1224", "123"}, 4);
  const TropicalGrid g = counts_to_grid(b);
  // Row i, color r reads the count of letter r+1-i mod n (residue 0 is letter n).
  auto letter = [](int i, int r, int n) { return ((r + 1 - i) % n + n - 1) % n + 1; };
  for (int i = 1; i <= 3; ++i)
    for (int r = 0; r < 4; ++r) CHECK(g.at(i, r) == b.factor(i).count(letter(i, r, 4)));
  CHECK(g.at(1, 0) == b.factor(1).count(4));
  CHECK(g.at(2, 0) == b.factor(2).count(3));
  CHECK(g.at(2, 1) == b.factor(2).count(4));
  CHECK(grid_to_counts(g) == b);

  const TropicalGrid one = counts_to_grid(tensor({"1224"}, 4));
  for (int r = 0; r < 4; ++r) CHECK(one.at(1, r) == row("1224").count(letter(1, r, 4)));

  const TropicalGrid two = counts_to_grid(tensor({"1", "12"}, 2));
  CHECK(two.at(2, 1) == 1);
  CHECK(two.at(2, 0) == 1);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 4);
  for (int t = 0; t < 50; ++t) {
    std::vector<CrystalElement> fs;
    for (int i = 0; i < 4; ++i) fs.emplace_back(std::vector<std::int64_t>{d(rng), d(rng), d(rng)});
    const TensorElement x(CrystalParams{3}, fs);
    CHECK(grid_to_counts(counts_to_grid(x)) == x);
  }
}

TEST_CASE("staircase objective for n=2, m=3") {
  const auto terms = staircase_objective(2, 3);
  REQUIRE(terms.size() == 8);
  // Every term reads x_{T(1,1)}^{(0)} x_{T(1,2)}^{(1)} x_{T(2,1)}^{(1)}.
  for (const auto& t : terms) {
    REQUIRE(t.variables.size() == 3);
    CHECK(t.variables[0] == std::pair{t.tableau.at(1, 1), 0});
    CHECK(t.variables[1] == std::pair{t.tableau.at(1, 2), 1});
    CHECK(t.variables[2] == std::pair{t.tableau.at(2, 1), 1});
  }
  CHECK(staircase_objective(3, 1).size() == 1);
}
