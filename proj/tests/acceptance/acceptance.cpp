// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "krenergy/birational.hpp"
#include "krenergy/crystal.hpp"
#include "krenergy/identities.hpp"
#include "krenergy/jacobi_trudi.hpp"
#include "krenergy/lsym.hpp"
#include "krenergy/verify.hpp"

using namespace krenergy;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title, double limit_seconds) : id_(id), title_(std::move(title)), limit_(limit_seconds) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  bool report(double seconds) const {
    const bool in_time = limit_ <= 0 || seconds < limit_;
    const bool ok = failed_ == 0 && checks_ > 0 && in_time;
    std::printf("%s criterion %d: %s [%llu checks, %llu failed, %.2f s", ok ? "PASS" : "FAIL", id_, title_.c_str(),
                static_cast<unsigned long long>(checks_), static_cast<unsigned long long>(failed_), seconds);
    if (limit_ > 0) std::printf(", limit %.0f s", limit_);
    std::printf("]\n");
    for (const auto& f : failures_) std::printf("    failed: %s\n", f.c_str());
    if (!in_time) std::printf("    over the time limit\n");
    return ok;
  }

 private:
  int id_;
  std::string title_;
  double limit_;
  std::uint64_t checks_ = 0;
  std::uint64_t failed_ = 0;
  std::vector<std::string> failures_;
};

CrystalElement row(const char* w, int n = 4) { return CrystalElement::from_row(w, n); }

std::string show(const TensorElement& b) { return tensor_to_json(b).dump(); }

// Every tensor of m factors drawn from `pool`.
void for_each_tensor(int n, int m, const std::vector<CrystalElement>& pool,
                     const std::function<void(const TensorElement&)>& fn) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<CrystalElement> fs;
    for (std::size_t k : idx) fs.push_back(pool[k]);
    fn(TensorElement(CrystalParams{n}, std::move(fs)));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == pool.size()) idx[pos++] = 0;
    if (pos == idx.size()) return;
  }
}

void for_each_random_tensor(int n, int m, int cap, int count, std::uint64_t seed,
                            const std::function<void(const TensorElement&)>& fn) {
  const auto pool = elements_up_to(n, cap);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < count; ++t) {
    std::vector<CrystalElement> fs;
    for (int i = 0; i < m; ++i) fs.push_back(pool[pick(rng)]);
    fn(TensorElement(CrystalParams{n}, std::move(fs)));
  }
}

// The suite-2 regime: exhaustive n, m in {2,3} with capacities <= 3, and
// 500 seeded tensors for n = m = 4 with capacities <= 5.
void for_each_regime_tensor(const std::function<void(int, int, const TensorElement&)>& fn) {
  for (int n = 2; n <= 3; ++n) {
    const auto pool = elements_up_to(n, 3);
    for (int m = 2; m <= 3; ++m) for_each_tensor(n, m, pool, [&](const TensorElement& b) { fn(n, m, b); });
  }
  for_each_random_tensor(4, 4, 5, 500, 2024, [&](const TensorElement& b) { fn(4, 4, b); });
}

using Clock = std::chrono::steady_clock;

template <class F>
bool run(Criterion c, F&& body) {
  const auto start = Clock::now();
  body(c);
  return c.report(std::chrono::duration<double>(Clock::now() - start).count());
}

void worked_examples(Criterion& c) {
  c.check(ok(1, row("13"), row("1224")) == 1, "ok_1 = 1");
  c.check(ok(2, row("13"), row("1224")) == 2, "ok_2 = 2");
  c.check(r_matrix(row("13"), row("1224")) == std::make_pair(row("1123"), row("24")), "R(13, 1224) = (1123, 24)");
  c.check(coenergy(row("13"), row("1224")) == 1, "H(13, 1224) = 1");
  c.check(coenergy(row("2234"), row("12334")) == 3, "coenergy(2234, 12334) = 3");
  const TensorElement b(CrystalParams{4}, {row("13"), row("1224"), row("123")});
  c.check(intrinsic_energy(b) == 5, "D(13, 1224, 123) = 5");

  using L = std::optional<ELabel>;
  auto e = [](int d, int off) -> L { return ELabel{d, residue(off, 3)}; };
  const L _ = std::nullopt;
  const LabelMatrix a4 = {
      {e(3, 0), e(4, -1), _, _, _, _},
      {e(2, 0), e(3, -1), e(4, -2), _, _, _},
      {e(0, 0), e(1, -1), e(2, -2), e(3, 0), e(4, -1), _},
      {_, e(0, -1), e(1, -2), e(2, 0), e(3, -1), e(4, -2)},
      {_, _, _, e(0, 0), e(1, -1), e(2, -2)},
      {_, _, _, _, e(0, -1), e(1, -2)},
  };
  const LabelMatrix b4 = {
      {e(3, 0), e(4, -1), _, _, _, _, _, _, _},
      {e(2, 0), e(3, -1), e(4, -2), _, _, _, _, _, _},
      {e(0, 0), e(1, -1), e(2, -2), e(3, 0), e(4, -1), _, _, _, _},
      {_, e(0, -1), e(1, -2), e(2, 0), e(3, -1), e(4, -2), _, _, _},
      {_, _, _, e(0, 0), e(1, -1), e(2, -2), e(3, 0), e(4, -1), _},
      {_, _, _, _, e(0, -1), e(1, -2), e(2, 0), e(3, -1), e(4, -2)},
      {_, _, _, _, _, _, e(0, 0), e(1, -1), e(2, -2)},
      {_, _, _, _, _, _, _, e(0, -1), e(1, -2)},
  };
  c.check(build_A_labels(3, 4) == a4, "A_4 for n = 3");
  c.check(build_B_labels(3, 4) == b4, "B_4 for n = 3");

  // The displayed n=2, m=3 objective, colors written 1..n.
  const std::vector<std::vector<std::pair<int, int>>> displayed = {
      {{1, 1}, {1, 2}, {2, 1}}, {{2, 1}, {1, 2}, {2, 1}}, {{3, 1}, {1, 2}, {2, 1}}, {{1, 1}, {1, 2}, {3, 1}},
      {{2, 1}, {1, 2}, {3, 1}}, {{3, 1}, {1, 2}, {3, 1}}, {{2, 1}, {2, 2}, {3, 1}}, {{3, 1}, {2, 2}, {3, 1}},
  };
  auto terms = staircase_objective(2, 3);
  std::stable_sort(terms.begin(), terms.end(), [](const StaircaseTerm& x, const StaircaseTerm& y) {
    auto rx = x.tableau.rows(), ry = y.tableau.rows();
    std::reverse(rx.begin(), rx.end());
    std::reverse(ry.begin(), ry.end());
    return rx < ry;
  });
  c.check(terms.size() == displayed.size(), "8 tableaux for n = 2, m = 3");
  for (std::size_t k = 0; k < std::min(terms.size(), displayed.size()); ++k) {
    std::vector<std::pair<int, int>> got;
    for (auto [i, r] : terms[k].variables) got.emplace_back(i, r == 0 ? 2 : r);
    auto want = displayed[k];
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    c.check(got == want, "displayed term " + std::to_string(k + 1));
  }
}

void energy_equivalence(Criterion& c) {
  for_each_regime_tensor([&](int, int, const TensorElement& b) {
    c.check(intrinsic_energy(b) == energy_staircase(b), "intrinsic = staircase on " + show(b));
  });
}

void r_matrix_oracles(Criterion& c) {
  for (int n = 2; n <= 3; ++n) {
    const auto pool = elements_up_to(n, 3);
    for (const auto& a : pool)
      for (const auto& b : pool) {
        const std::string pair = pair_to_json(a, b).dump();
        c.check(r_matrix(a, b) == r_matrix_oracle(a, b), "R formula = oracle on " + pair);
        c.check(coenergy(a, b) == coenergy_sliding_oracle(a, b), "coenergy = sliding on " + pair);
      }
  }
}

// Small exhaustive regime for the combinatorial action, and seeded points
// for the birational one.
template <class Comb, class Bir>
void action_regimes(Comb&& comb, Bir&& bir) {
  for (int n = 2; n <= 3; ++n) {
    const auto pool = elements_up_to(n, 2);
    for (int m = 2; m <= 4; ++m) for_each_tensor(n, m, pool, comb);
  }
  std::uint64_t seed = 77;
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m) {
      std::mt19937_64 rng(seed++);
      for (int t = 0; t < 200; ++t) bir(RationalPoint::random(m, n, rng));
    }
}

void s_action_relations(Criterion& c) {
  action_regimes(
      [&](const TensorElement& b) {
        const int m = b.m();
        for (int j = 1; j < m; ++j) c.check(apply_s(apply_s(b, j), j) == b, "apply_s involution on " + show(b));
        for (int j = 1; j + 1 < m; ++j)
          c.check(apply_s(apply_s(apply_s(b, j), j + 1), j) == apply_s(apply_s(apply_s(b, j + 1), j), j + 1),
                  "apply_s braid on " + show(b));
        for (int i = 1; i < m; ++i)
          for (int j = i + 2; j < m; ++j)
            c.check(apply_s(apply_s(b, i), j) == apply_s(apply_s(b, j), i), "apply_s commute on " + show(b));
      },
      [&](const RationalPoint& p) {
        const int m = p.m();
        const std::string where = point_to_json(p).dump();
        for (int j = 1; j < m; ++j) c.check(s_action(j, s_action(j, p)) == p, "s_action involution at " + where);
        for (int j = 1; j + 1 < m; ++j)
          c.check(s_action(j, s_action(j + 1, s_action(j, p))) == s_action(j + 1, s_action(j, s_action(j + 1, p))),
                  "s_action braid at " + where);
        for (int i = 1; i < m; ++i)
          for (int j = i + 2; j < m; ++j)
            c.check(s_action(i, s_action(j, p)) == s_action(j, s_action(i, p)), "s_action commute at " + where);
      });
}

void energy_invariance(Criterion& c) {
  action_regimes(
      [&](const TensorElement& b) {
        const auto d = intrinsic_energy(b);
        for (int j = 1; j < b.m(); ++j) c.check(intrinsic_energy(apply_s(b, j)) == d, "energy invariance on " + show(b));
      },
      [&](const RationalPoint& p) {
        const mpq_class d = rational_energy_global(p);
        for (int j = 1; j < p.m(); ++j)
          c.check(rational_energy_global(s_action(j, p)) == d, "rational energy invariance at " + point_to_json(p).dump());
      });
}

void identity_suite_criterion(Criterion& c) {
  auto record = [&](const IdentityReport& rep) {
    for (const auto& ch : rep.checks)
      c.check(ch.passed, ch.identity + " n=" + std::to_string(ch.n) + " m=" + std::to_string(ch.m) + " r=" +
                             std::to_string(ch.r) + " k=" + std::to_string(ch.k) + " " + ch.detail);
  };
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 4; ++m) record(identity_suite(n, m, {IdentityMode::Symbolic, 1, 50, kAllFamilies}));
  record(identity_suite(4, 5, {IdentityMode::Randomized, 5, 50, kAllFamilies}));
}

void energy_product(Criterion& c) {
  std::uint64_t seed = 300;
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 4; ++m) {
      std::mt19937_64 rng(seed++);
      for (int t = 0; t < 100; ++t) {
        const RationalPoint p = RationalPoint::random(m, n, rng);
        c.check(rational_energy_product(p) == rational_energy_global(p), "product = global at " + point_to_json(p).dump());
      }
      const SkewShape shape = m == 1 ? SkewShape{} : SkewShape(staircase(m - 1, n - 1));
      const mpq_class count(static_cast<unsigned long>(count_ssyt(shape, m)));
      const RationalPoint ones(m, n);
      c.check(rational_energy_global(ones) == count && rational_energy_product(ones) == count,
              "all-ones count n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  c.check(rational_energy_global(RationalPoint(3, 2)) == 8, "all-ones value 8 for n = 2, m = 3");
}

void tropical_bridge(Criterion& c) {
  struct Polys {
    ColoredPoly schur, sigma;
  };
  std::map<std::pair<int, int>, Polys> cache;
  for_each_regime_tensor([&](int n, int m, const TensorElement& b) {
    auto it = cache.find({n, m});
    if (it == cache.end()) {
      const Ambient amb(m, n);
      const SkewShape shape(staircase(m - 1, n - 1));
      it = cache.emplace(std::pair{n, m}, Polys{loop_schur_tableaux(amb, shape, 0),
                                                 staircase_sigma_product(PolyAlgebra{amb}, 0, VarRange{1, m})})
               .first;
    }
    const TropicalGrid grid = counts_to_grid(b);
    const auto d = intrinsic_energy(b);
    c.check(trop_eval(it->second.sigma, grid) == d, "trop sigma product on " + show(b));
    c.check(trop_eval(it->second.schur, grid) == d, "trop loop Schur on " + show(b));
  });
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(Criterion(1, "worked examples", 1), worked_examples);
  ok &= run(Criterion(2, "intrinsic energy equals the staircase minimum", 120), energy_equivalence);
  ok &= run(Criterion(3, "R-matrix and coenergy against their oracles", 60), r_matrix_oracles);
  ok &= run(Criterion(4, "involution and braid relations of the S_m actions", 0), s_action_relations);
  ok &= run(Criterion(5, "energy invariance under the R-action", 0), energy_invariance);
  ok &= run(Criterion(6, "loop-symmetric identity suite", 600), identity_suite_criterion);
  ok &= run(Criterion(7, "rational energy product formula", 0), energy_product);
  ok &= run(Criterion(8, "tropical bridge", 0), tropical_bridge);
  return ok ? 0 : 1;
}
