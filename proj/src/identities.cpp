#include "krenergy/identities.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "krenergy/birational.hpp"
#include "krenergy/jacobi_trudi.hpp"
#include "krenergy/json_io.hpp"
#include "krenergy/lsym.hpp"

namespace krenergy {

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

namespace {

constexpr std::size_t kWitnessChars = 400;

std::string shape_label(const Shape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.parts().size(); ++i) out += (i ? "," : "") + std::to_string(s.parts()[i]);
  return out + ")";
}

std::string skew_label(const SkewShape& s) { return shape_label(s.outer()) + "/" + shape_label(s.inner()); }

/// Partitions inside a rows x cols box.
std::vector<Shape> box_partitions(int rows, int cols) {
  std::vector<Shape> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int row, int bound) -> void {
    if (row == rows) {
      out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      parts.push_back(v);
      self(self, row + 1, v);
      parts.pop_back();
    }
  };
  rec(rec, 0, cols);
  return out;
}

// Collects checks keyed by (identity, r, k, detail). In randomized mode the
// same key is recorded once per point and a check fails if any point fails.
class Recorder {
 public:
  Recorder(int n, int m) : n_(n), m_(m) {}

  void set_context(std::string ctx) { context_ = std::move(ctx); }

  void record(const std::string& identity, int r, int k, const std::string& detail, bool ok,
              const std::string& witness) {
    const auto key = std::make_tuple(identity, r, k, detail);
    auto [it, inserted] = index_.try_emplace(key, checks_.size());
    if (inserted) checks_.push_back(IdentityCheck{identity, n_, m_, r, k, detail, true, {}});
    IdentityCheck& c = checks_[it->second];
    if (!ok && c.passed) {
      c.passed = false;
      c.witness = witness;
    }
  }

  void equal(const std::string& identity, int r, int k, const std::string& detail, const ColoredPoly& lhs,
             const ColoredPoly& rhs) {
    if (lhs == rhs) return record(identity, r, k, detail, true, {});
    std::string diff = (lhs - rhs).to_string();
    if (diff.size() > kWitnessChars) diff = diff.substr(0, kWitnessChars) + "...";
    record(identity, r, k, detail, false, "lhs - rhs = " + diff);
  }

  void equal(const std::string& identity, int r, int k, const std::string& detail, const mpq_class& lhs,
             const mpq_class& rhs) {
    record(identity, r, k, detail, lhs == rhs, lhs == rhs ? std::string{} : context_);
  }

  std::vector<IdentityCheck> take() { return std::move(checks_); }

 private:
  int n_;
  int m_;
  std::string context_;
  std::map<std::tuple<std::string, int, int, std::string>, std::size_t> index_;
  std::vector<IdentityCheck> checks_;
};

template <class V>
V signed_term(int i, const V& v, const V& zero) {
  return i % 2 == 0 ? v : zero - v;
}

template <LoopAlgebra A>
void run_algebraic(const A& alg, int m, const IdentityOptions& opt, Recorder& rec, bool symbolic) {
  using V = typename A::value_type;
  const int n = alg.n();
  const VarRange vars{1, m};
  const auto idx = [](int v) { return static_cast<std::size_t>(v); };

  const int kmax = std::max(2 * (n - 1) * m, (n - 1) * m + n + 1);
  std::vector<std::vector<V>> e(idx(m + 1));
  for (int k = 0; k <= m; ++k)
    for (int c = 0; c < n; ++c) e[idx(k)].push_back(loop_e(alg, k, c, vars));
  const auto ev = [&](int k, long long c) -> V {
    if (k < 0 || k > m) return alg.zero();
    return e[idx(k)][idx(residue(c, n))];
  };
  const auto htab = detail::descending_table(alg, kmax, vars, kmax);
  const auto hv = [&](int k, long long c) -> V {
    if (k < 0) return alg.zero();
    return htab[idx(k)][idx(residue(c, n))];
  };
  const int tmax = (n - 1) * m;
  const auto ttab = detail::descending_table(alg, tmax, vars, n - 1);
  const auto tv = [&](int k, long long c) -> V {
    if (k < 0 || k > tmax) return alg.zero();
    return ttab[idx(k)][idx(residue(c, n))];
  };
  std::vector<V> big_e;
  for (int k = 0; k <= m; ++k) big_e.push_back(color_product_e(alg, k, vars));
  const auto Ev = [&](int k) -> V { return k < 0 || k > m ? alg.zero() : big_e[idx(k)]; };

  for (int r = 0; r < n; ++r) {
    if (opt.families & kEhRelation) {
      for (int k = 1; k <= 2 * (n - 1) * m; ++k) {
        V sum = alg.zero();
        for (int i = 0; i <= k; ++i) sum = sum + signed_term<V>(i, ev(i, r - i) * hv(k - i, r - i - 1), alg.zero());
        rec.equal("e-h-relation", r, k, {}, sum, alg.zero());
      }
    }
    if (opt.families & kTauExpansion) {
      for (int k = 0; k <= (n - 1) * m + n; ++k) {
        V rhs = alg.zero();
        for (int i = 0; k - i * n >= 0; ++i) rhs = rhs + signed_term<V>(i, hv(k - i * n, r) * Ev(i), alg.zero());
        rec.equal("tau-expansion", r, k, {}, tv(k, r), rhs);
      }
    }
    if (opt.families & kTauRecursion) {
      // The alternating sum leaves (-1)^{k/n} e_{k/n}(color products) when n divides k.
      for (int k = 1; k <= (n - 1) * m + m; ++k) {
        V sum = alg.zero();
        for (int i = 0; i <= std::min(k, m); ++i) sum = sum + signed_term<V>(i, ev(i, r - i) * tv(k - i, r - i - 1), alg.zero());
        const V rhs = k % n == 0 ? signed_term<V>(k / n, Ev(k / n), alg.zero()) : alg.zero();
        rec.equal("tau-recursion", r, k, {}, sum, rhs);
      }
    }
    if (m >= 2 && (opt.families & (kStair | kJacobiTrudi | kBZero | kDetBim))) {
      const SkewShape stair(staircase(m - 1, n - 1));
      const auto a_mat = realize(alg, build_A_labels(n, m), r, vars);
      const V det_a = determinant(alg, a_mat);
      if (opt.families & kStair) {
        const V rhs = staircase_sigma_product(alg, r, vars);
        if (symbolic) {
          if constexpr (std::is_same_v<V, ColoredPoly>)
            rec.equal("stair", r, -1, "tableaux", loop_schur_tableaux(alg.amb, stair, r), rhs);
        }
        rec.equal("stair", r, -1, "det A_m", det_a, rhs);
      }
      if ((opt.families & kJacobiTrudi) && symbolic) {
        if constexpr (std::is_same_v<V, ColoredPoly>)
          rec.equal("jacobi-trudi", r, -1, "A_m " + skew_label(stair), det_a, loop_schur_tableaux(alg.amb, stair, r));
      }
      if (opt.families & (kBZero | kDetBim)) {
        const auto b_mat = realize(alg, build_B_labels(n, m), r, vars);
        const auto tvec = tau_vector(alg, r, vars);
        if (opt.families & kBZero) {
          for (std::size_t row = 0; row < b_mat.size(); ++row) {
            V dot = alg.zero();
            for (std::size_t c = 0; c < tvec.size(); ++c)
              if (!is_zero_value(b_mat[row][c])) dot = dot + b_mat[row][c] * tvec[c];
            rec.equal("b-zero", r, static_cast<int>(row + 1), {}, dot, alg.zero());
          }
        }
        if (opt.families & kDetBim) {
          for (int c = 1; c <= static_cast<int>(tvec.size()); ++c) {
            const V lhs = determinant(alg, remove_column(b_mat, static_cast<std::size_t>(c - 1)));
            rec.equal("det-bim", r, c, {}, lhs, tv((n - 1) * m - c + 1, r - c) * det_a);
          }
        }
      }
    }
    if (opt.families & kJacobiTrudi) {
      const auto parts = box_partitions(3, 3);
      for (const Shape& outer : parts) {
        if (outer.size() == 0) continue;
        for (const Shape& inner : parts) {
          if (!outer.contains(inner)) continue;
          const SkewShape skew(outer, inner);
          rec.equal("jacobi-trudi", r, -1, skew_label(skew), loop_schur_jt(alg, skew, r, vars),
                    loop_schur_tableaux(alg, skew, r, vars));
        }
      }
    }
  }
}

void run_structural(int n, int m, Recorder& rec) {
  if (m < 2) return;
  rec.record("translate", -1, -1, "A_m", satisfies_translate(build_A_labels(n, m), n), "A_m labels");
  rec.record("translate", -1, -1, "B_m", satisfies_translate(build_B_labels(n, m), n), "B_m labels");
}

}  // namespace

IdentityReport identity_suite(int n, int m, const IdentityOptions& options) {
  CrystalParams{n};
  if (m < 1) throw std::invalid_argument("identity suite needs m >= 1");
  if (m * n > kMaxVariables) throw std::invalid_argument("identity suite supports at most 36 variables");
  if (options.points < 1) throw std::invalid_argument("identity suite needs at least one point");

  Recorder rec(n, m);
  if (options.families & kTranslate) run_structural(n, m, rec);
  if (options.mode == IdentityMode::Symbolic) {
    run_algebraic(PolyAlgebra{Ambient(m, n)}, m, options, rec, true);
  } else {
    std::mt19937_64 rng(options.seed);
    for (int t = 0; t < options.points; ++t) {
      const RationalPoint p = RationalPoint::random(m, n, rng);
      rec.set_context(point_to_json(p).dump());
      run_algebraic(PointAlgebra{&p}, m, options, rec, false);
    }
  }
  return IdentityReport{rec.take()};
}

}  // namespace krenergy
