#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace krenergy {

enum class IdentityMode { Symbolic, Randomized };

enum IdentityFamily : unsigned {
  kEhRelation = 1u << 0,     // alternating e/h sum vanishes
  kTauExpansion = 1u << 1,   // tau via h and classical e of color products
  kTauRecursion = 1u << 2,   // alternating e/tau sum vanishes
  kStair = 1u << 3,          // staircase loop Schur = product of sigmas
  kJacobiTrudi = 1u << 4,    // determinant = tableau sum
  kTranslate = 1u << 5,      // column translation structure of A_m and B_m
  kBZero = 1u << 6,          // B_m T = 0
  kDetBim = 1u << 7,         // det B_{c,m} = tau det A_m
  kAllFamilies = (1u << 8) - 1,
  kMatrixFamilies = kTranslate | kBZero | kDetBim,
};

struct IdentityOptions {
  IdentityMode mode = IdentityMode::Symbolic;
  std::uint64_t seed = 1;
  int points = 50;
  unsigned families = kAllFamilies;
};

struct IdentityCheck {
  std::string identity;
  int n = 0;
  int m = 0;
  int r = -1;  // -1 when the check does not depend on a color
  int k = -1;  // degree, column or other index; -1 when unused
  std::string detail;
  bool passed = true;
  std::string witness;  // failing point (JSON) or nonzero difference
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Runs the selected identity families for one (n, m). Symbolic mode compares
/// polynomials exactly; randomized mode compares exact values at seeded
/// positive rational points and records the first failing point.
IdentityReport identity_suite(int n, int m, const IdentityOptions& options);

}  // namespace krenergy
