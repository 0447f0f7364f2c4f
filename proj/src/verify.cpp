#include "krenergy/verify.hpp"

#include <array>
#include <chrono>
#include <random>
#include <sstream>

#include "krenergy/birational.hpp"
#include "krenergy/crystal.hpp"
#include "krenergy/identities.hpp"
#include "krenergy/lsym.hpp"

namespace krenergy {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 7> kSuiteNames{{
    {Suite::RMatrix, "rmatrix"},
    {Suite::Coenergy, "coenergy"},
    {Suite::EnergyEquivalence, "energy-equivalence"},
    {Suite::Braid, "braid"},
    {Suite::LsymIdentities, "lsym-identities"},
    {Suite::Birational, "birational"},
    {Suite::Section4, "section4"},
}};

constexpr std::array<std::pair<VerifyMode, std::string_view>, 3> kModeNames{{
    {VerifyMode::Exhaustive, "exhaustive"},
    {VerifyMode::Randomized, "randomized"},
    {VerifyMode::Both, "both"},
}};

bool exhaustive(VerifyMode m) { return m != VerifyMode::Randomized; }
bool randomized(VerifyMode m) { return m != VerifyMode::Exhaustive; }

class Tally {
 public:
  explicit Tally(SuiteReport& rep) : rep_(rep) {}

  template <class W>
  void check(bool ok, W&& witness) {
    if (ok) {
      ++rep_.passed;
      return;
    }
    ++rep_.failed;
    if (rep_.witnesses.size() < SuiteReport::kMaxWitnesses) rep_.witnesses.push_back(witness());
  }

 private:
  SuiteReport& rep_;
};

std::mt19937_64 cell_rng(std::uint64_t seed, Suite s, int n, int m) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m)};
  return std::mt19937_64(seq);
}

CrystalElement random_element(int n, int cap, std::mt19937_64& rng) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  const int size = std::uniform_int_distribution<int>(0, cap)(rng);
  std::uniform_int_distribution<int> letter(0, n - 1);
  for (int k = 0; k < size; ++k) ++counts[static_cast<std::size_t>(letter(rng))];
  return CrystalElement(std::move(counts));
}

TensorElement random_tensor(int n, int m, int cap, std::mt19937_64& rng) {
  std::vector<CrystalElement> fs;
  for (int i = 0; i < m; ++i) fs.push_back(random_element(n, cap, rng));
  return TensorElement(CrystalParams{n}, std::move(fs));
}

/// Calls f on every m-fold tensor of factors from `pool`.
template <class F>
void for_each_tensor(int n, int m, const std::vector<CrystalElement>& pool, F&& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<CrystalElement> fs;
    for (auto k : idx) fs.push_back(pool[k]);
    f(TensorElement(CrystalParams{n}, std::move(fs)));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == pool.size()) idx[pos++] = 0;
    if (pos == idx.size()) return;
  }
}

/// Runs f on the exhaustive and/or random tensors of one (n, m) cell.
template <class F>
void for_each_regime_tensor(const VerifyConfig& cfg, Suite s, int n, int m, F&& f) {
  if (exhaustive(cfg.mode)) for_each_tensor(n, m, elements_up_to(n, cfg.capacity_cap), f);
  if (randomized(cfg.mode)) {
    auto rng = cell_rng(cfg.seed, s, n, m);
    for (int t = 0; t < cfg.trials; ++t) f(random_tensor(n, m, cfg.capacity_cap, rng));
  }
}

template <class F>
void for_each_regime_pair(const VerifyConfig& cfg, Suite s, int n, F&& f) {
  for_each_regime_tensor(cfg, s, n, 2, [&](const TensorElement& b) { f(b.factor(1), b.factor(2)); });
}

Json tagged(const std::string& check, Json input) { return {{"check", check}, {"input", std::move(input)}}; }

void run_rmatrix(const VerifyConfig& cfg, Tally& tally) {
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for_each_regime_pair(cfg, Suite::RMatrix, n, [&](const CrystalElement& b1, const CrystalElement& b2) {
      const auto formula = r_matrix(b1, b2);
      const auto oracle = r_matrix_oracle(b1, b2);
      tally.check(formula == oracle, [&] {
        Json w = tagged("formula-vs-oracle", pair_to_json(b1, b2));
        w["formula"] = pair_to_json(formula.first, formula.second);
        w["oracle"] = pair_to_json(oracle.first, oracle.second);
        return w;
      });
      const auto back = r_matrix(formula.first, formula.second);
      tally.check(back == std::make_pair(b1, b2), [&] { return tagged("involution", pair_to_json(b1, b2)); });
    });
  }
}

void run_coenergy(const VerifyConfig& cfg, Tally& tally) {
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for_each_regime_pair(cfg, Suite::Coenergy, n, [&](const CrystalElement& b1, const CrystalElement& b2) {
      const auto h = coenergy(b1, b2);
      const auto slide = coenergy_sliding_oracle(b1, b2);
      tally.check(h == slide, [&] {
        Json w = tagged("formula-vs-sliding", pair_to_json(b1, b2));
        w["formula"] = h;
        w["oracle"] = slide;
        return w;
      });
      const auto [c1, c2] = r_matrix(b1, b2);
      tally.check(coenergy(c1, c2) == h, [&] { return tagged("r-invariance", pair_to_json(b1, b2)); });
    });
  }
}

void run_energy(const VerifyConfig& cfg, Tally& tally) {
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int m = std::max(cfg.m_min, 1); m <= cfg.m_max; ++m) {
      const Ambient amb(m, n);
      const SkewShape shape = m == 1 ? SkewShape{} : SkewShape(staircase(m - 1, n - 1));
      const ColoredPoly schur = loop_schur_tableaux(amb, shape, 0);
      const ColoredPoly sigma_poly = staircase_sigma_product(PolyAlgebra{amb}, 0, VarRange{1, m});
      tally.check(schur == sigma_poly, [&] { return tagged("schur-equals-sigma-product", Json{{"n", n}, {"m", m}}); });
      for_each_regime_tensor(cfg, Suite::EnergyEquivalence, n, m, [&](const TensorElement& b) {
        const auto d = intrinsic_energy(b);
        const auto grid = counts_to_grid(b);
        const auto stair = energy_staircase(b);
        const auto trop_schur = trop_eval(schur, grid);
        const auto trop_sigma = trop_eval(sigma_poly, grid);
        const Tropical direct = staircase_sigma_product(TropicalAlgebra{&grid}, 0, VarRange{1, m});
        auto witness = [&](const char* name, std::int64_t other) {
          return [&, name, other] {
            Json w = tagged(name, tensor_to_json(b));
            w["intrinsic"] = d;
            w["other"] = other;
            return w;
          };
        };
        tally.check(d == stair, witness("intrinsic-vs-staircase", stair));
        tally.check(trop_schur && *trop_schur == d, witness("trop-loop-schur", trop_schur.value_or(-1)));
        tally.check(trop_sigma && *trop_sigma == d, witness("trop-sigma-product", trop_sigma.value_or(-1)));
        tally.check(!direct.is_infinite() && direct.v == d, witness("min-plus-sigma-product", direct.v));
      });
    }
  }
}

void run_braid(const VerifyConfig& cfg, Tally& tally) {
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int m = std::max(cfg.m_min, 2); m <= cfg.m_max; ++m) {
      for_each_regime_tensor(cfg, Suite::Braid, n, m, [&](const TensorElement& b) {
        const auto d = intrinsic_energy(b);
        for (int j = 1; j < m; ++j) {
          const TensorElement sb = apply_s(b, j);
          tally.check(apply_s(sb, j) == b, [&] { return tagged("involution s_" + std::to_string(j), tensor_to_json(b)); });
          tally.check(intrinsic_energy(sb) == d,
                      [&] { return tagged("energy-invariance s_" + std::to_string(j), tensor_to_json(b)); });
          if (j + 1 < m) {
            const TensorElement lhs = apply_s(apply_s(sb, j + 1), j);
            const TensorElement rhs = apply_s(apply_s(apply_s(b, j + 1), j), j + 1);
            tally.check(lhs == rhs, [&] { return tagged("braid s_" + std::to_string(j), tensor_to_json(b)); });
          }
          for (int k = j + 2; k < m; ++k) {
            tally.check(apply_s(apply_s(b, k), j) == apply_s(sb, k), [&] {
              return tagged("commute s_" + std::to_string(j) + " s_" + std::to_string(k), tensor_to_json(b));
            });
          }
        }
      });
    }
  }
}

void run_birational(const VerifyConfig& cfg, Tally& tally) {
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int m = std::max(cfg.m_min, 1); m <= cfg.m_max; ++m) {
      const RationalPoint ones(m, n);
      const SkewShape shape = m == 1 ? SkewShape{} : SkewShape(staircase(m - 1, n - 1));
      const mpq_class count(static_cast<unsigned long>(count_ssyt(shape, m)));
      tally.check(rational_energy_product(ones) == count && rational_energy_global(ones) == count,
                  [&] { return tagged("all-ones-count", Json{{"n", n}, {"m", m}}); });

      auto rng = cell_rng(cfg.seed, Suite::Birational, n, m);
      for (int t = 0; t < cfg.trials; ++t) {
        const RationalPoint p = RationalPoint::random(m, n, rng);
        auto w = [&](const std::string& name) { return [&, name] { return tagged(name, point_to_json(p)); }; };
        const mpq_class global = rational_energy_global(p);
        tally.check(rational_energy_product(p) == global, w("product-vs-global"));
        for (int j = 1; j < m; ++j) {
          const RationalPoint sp = s_action(j, p);
          tally.check(s_action(j, sp) == p, w("involution s_" + std::to_string(j)));
          tally.check(rational_energy_global(sp) == global, w("energy-invariance s_" + std::to_string(j)));
          if (j + 1 < m)
            tally.check(s_action(j, s_action(j + 1, sp)) == s_action(j + 1, s_action(j, s_action(j + 1, p))),
                        w("braid s_" + std::to_string(j)));
        }
        for (int i = 1; i <= m; ++i)
          for (int j = i + 1; j <= m; ++j)
            for (int r = 0; r < n; ++r)
              tally.check(check_lem_tact(i, j, r, p).all(),
                          w("transport i=" + std::to_string(i) + " j=" + std::to_string(j) + " r=" + std::to_string(r)));
      }
    }
  }
}

void run_identities(const VerifyConfig& cfg, Tally& tally, unsigned families, bool needs_m2) {
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int m = std::max(cfg.m_min, needs_m2 ? 2 : 1); m <= cfg.m_max; ++m) {
      std::vector<IdentityMode> modes;
      const bool symbolic_ok = n <= 3 && m <= 4;
      if (exhaustive(cfg.mode) && symbolic_ok) modes.push_back(IdentityMode::Symbolic);
      if (randomized(cfg.mode) || !symbolic_ok) modes.push_back(IdentityMode::Randomized);
      for (IdentityMode mode : modes) {
        IdentityOptions opt;
        opt.mode = mode;
        opt.seed = cell_rng(cfg.seed, Suite::LsymIdentities, n, m)();
        opt.points = cfg.trials;
        opt.families = families;
        for (const auto& c : identity_suite(n, m, opt).checks) {
          tally.check(c.passed, [&] {
            Json w = report_to_json(IdentityReport{{c}})["checks"][0];
            w["mode"] = mode == IdentityMode::Symbolic ? "symbolic" : "randomized";
            return w;
          });
        }
      }
    }
  }
}

}  // namespace

std::string_view suite_name(Suite s) {
  for (const auto& [suite, name] : kSuiteNames)
    if (suite == s) return name;
  throw std::logic_error("unknown suite");
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [suite, n] : kSuiteNames)
    if (n == name) return suite;
  return std::nullopt;
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> all = [] {
    std::vector<Suite> v;
    for (const auto& entry : kSuiteNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

std::string_view mode_name(VerifyMode m) {
  for (const auto& [mode, name] : kModeNames)
    if (mode == m) return name;
  throw std::logic_error("unknown mode");
}

std::optional<VerifyMode> parse_mode(std::string_view name) {
  for (const auto& [mode, n] : kModeNames)
    if (n == name) return mode;
  return std::nullopt;
}

void VerifyConfig::validate() const {
  if (suites.empty()) throw InputError("at least one suite is required");
  if (n_min < 2 || n_max > 6 || n_min > n_max) throw InputError("n range must lie within [2, 6]");
  if (m_min < 1 || m_max > 6 || m_min > m_max) throw InputError("m range must lie within [1, 6]");
  if (trials < 1) throw InputError("trials must be at least 1");
  if (capacity_cap < 0) throw InputError("capacity cap must be nonnegative");
}

std::vector<CrystalElement> elements_up_to(int n, int cap) {
  CrystalParams{n};
  std::vector<CrystalElement> out;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int letter, int remaining) -> void {
    if (letter == n) {
      out.emplace_back(counts);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      counts[static_cast<std::size_t>(letter)] = v;
      self(self, letter + 1, remaining - v);
    }
    counts[static_cast<std::size_t>(letter)] = 0;
  };
  rec(rec, 0, cap);
  return out;
}

std::uint64_t RunReport::failed() const {
  std::uint64_t total = 0;
  for (const auto& s : suites) total += s.failed;
  return total;
}

Json RunReport::to_json(bool include_timings) const {
  Json suites_json = Json::array();
  for (const auto& s : suites) {
    Json entry = {{"suite", suite_name(s.suite)},
                  {"status", s.failed == 0 ? "pass" : "fail"},
                  {"checks", s.total()},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"witnesses", s.witnesses}};
    if (include_timings) entry["seconds"] = s.seconds;
    suites_json.push_back(std::move(entry));
  }
  Json names = Json::array();
  for (Suite s : config.suites) names.push_back(suite_name(s));
  return {{"seed", config.seed},
          {"config",
           {{"suites", std::move(names)},
            {"n_range", {config.n_min, config.n_max}},
            {"m_range", {config.m_min, config.m_max}},
            {"capacity_cap", config.capacity_cap},
            {"trials", config.trials},
            {"mode", mode_name(config.mode)}}},
          {"suites", std::move(suites_json)},
          {"failed", failed()},
          {"status", failed() == 0 ? "pass" : "fail"}};
}

std::string RunReport::summary() const {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << (s.failed == 0 ? "PASS " : "FAIL ") << suite_name(s.suite) << ": " << s.passed << "/" << s.total()
        << " checks passed (" << s.seconds << " s)\n";
  }
  out << (failed() == 0 ? "all suites passed" : std::to_string(failed()) + " checks failed") << " (seed " << config.seed
      << ")\n";
  return out.str();
}

RunReport run_verify(const VerifyConfig& config) {
  config.validate();
  RunReport report{config, {}};
  for (Suite s : config.suites) {
    SuiteReport rep;
    rep.suite = s;
    Tally tally(rep);
    const auto start = std::chrono::steady_clock::now();
    switch (s) {
      case Suite::RMatrix: run_rmatrix(config, tally); break;
      case Suite::Coenergy: run_coenergy(config, tally); break;
      case Suite::EnergyEquivalence: run_energy(config, tally); break;
      case Suite::Braid: run_braid(config, tally); break;
      case Suite::LsymIdentities:
        run_identities(config, tally, kAllFamilies & ~kMatrixFamilies, false);
        break;
      case Suite::Birational: run_birational(config, tally); break;
      case Suite::Section4: run_identities(config, tally, kMatrixFamilies, true); break;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.suites.push_back(std::move(rep));
  }
  return report;
}

}  // namespace krenergy
