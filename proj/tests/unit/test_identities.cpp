#include <doctest.h>

#include "krenergy/identities.hpp"
#include "krenergy/lsym.hpp"

using namespace krenergy;

namespace {

std::size_t count_of(const IdentityReport& r, const std::string& name) {
  std::size_t c = 0;
  for (const auto& ch : r.checks) c += ch.identity == name;
  return c;
}

}  // namespace

TEST_CASE("e-h relation, symbolic, n=2, m=2") {
  const auto rep = identity_suite(2, 2, {IdentityMode::Symbolic, 1, 50, kEhRelation});
  CHECK(rep.all_passed());
  CHECK(count_of(rep, "e-h-relation") == 2 * 4);  // two colors, k = 1..2(n-1)m
}

TEST_CASE("staircase product, symbolic and randomized") {
  const auto sym = identity_suite(2, 2, {IdentityMode::Symbolic, 1, 50, kStair});
  CHECK(sym.all_passed());
  CHECK(count_of(sym, "stair") > 0);
  const auto rnd = identity_suite(3, 3, {IdentityMode::Randomized, 7, 50, kStair});
  CHECK(rnd.all_passed());
  CHECK(count_of(rnd, "stair") > 0);
}

TEST_CASE("every family passes for small sizes") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto rep = identity_suite(n, m, {IdentityMode::Symbolic, 1, 50, kAllFamilies});
      CHECK(rep.all_passed());
      const auto rnd = identity_suite(n, m, {IdentityMode::Randomized, 3, 5, kAllFamilies});
      CHECK(rnd.all_passed());
    }
}

TEST_CASE("the uncorrected tau recursion fails when n divides k") {
  // n=2, m=1, k=2: sum_i (-1)^i e_i^{(r-i)} tau_{k-i}^{(r-i-1)} is not zero.
  const Ambient amb(1, 2);
  const VarRange all{1, 1};
  for (int r = 0; r < 2; ++r) {
    ColoredPoly sum(amb);
    for (int i = 0; i <= 2; ++i) {
      const auto term = loop_e(amb, i, r - i, all) * tau(amb, 2 - i, r - i - 1, all);
      sum = i % 2 ? sum - term : sum + term;
    }
    CHECK_FALSE(sum.is_zero());
    CHECK(sum == ColoredPoly(amb) - color_product_e(PolyAlgebra{amb}, 1, all));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS(identity_suite(2, 0, {}));
  CHECK_THROWS(identity_suite(7, 6, {}));
  CHECK_THROWS(identity_suite(2, 2, {IdentityMode::Randomized, 1, 0, kAllFamilies}));
}
