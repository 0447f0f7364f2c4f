#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "krenergy/json_io.hpp"

namespace krenergy {

enum class Suite { RMatrix, Coenergy, EnergyEquivalence, Braid, LsymIdentities, Birational, Section4 };

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

enum class VerifyMode { Exhaustive, Randomized, Both };

std::string_view mode_name(VerifyMode m);
std::optional<VerifyMode> parse_mode(std::string_view name);

// Exhaustive mode enumerates every factor with at most capacity_cap letters
// and runs the loop-symmetric identities symbolically (n <= 3, m <= 4;
// larger sizes fall back to random points). Randomized mode draws `trials`
// tensors or points per (n, m).
struct VerifyConfig {
  std::vector<Suite> suites = all_suites();
  int n_min = 2;
  int n_max = 3;
  int m_min = 1;
  int m_max = 3;
  int capacity_cap = 3;
  int trials = 100;
  std::uint64_t seed = 1;
  VerifyMode mode = VerifyMode::Exhaustive;

  /// Throws InputError when a field is out of range.
  void validate() const;
};

struct SuiteReport {
  Suite suite;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<Json> witnesses;  // at most kMaxWitnesses, the first failures
  double seconds = 0;

  static constexpr std::size_t kMaxWitnesses = 20;
  std::uint64_t total() const { return passed + failed; }
};

struct RunReport {
  VerifyConfig config;
  std::vector<SuiteReport> suites;

  std::uint64_t failed() const;
  /// Wall-clock times are left out unless requested, so that a fixed seed
  /// gives byte-identical output.
  Json to_json(bool include_timings = false) const;
  std::string summary() const;
};

RunReport run_verify(const VerifyConfig& config);

/// Every factor over letters 1..n with at most `cap` letters, in a fixed order.
std::vector<CrystalElement> elements_up_to(int n, int cap);

}  // namespace krenergy
