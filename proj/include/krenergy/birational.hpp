#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "krenergy/lsym.hpp"

namespace krenergy {

/// Exact positive rational values for x_i^{(r)}, i in 1..m, r in 0..n-1.
class RationalPoint {
 public:
  /// All values 1.
  RationalPoint(int m, int n);
  RationalPoint(int m, int n, std::vector<mpq_class> row_major_values);

  /// Numerators and denominators drawn uniformly from [1, bound].
  static RationalPoint random(int m, int n, std::mt19937_64& rng, int bound = 1000);

  int m() const { return m_; }
  int n() const { return n_; }
  const mpq_class& at(int i, long long r) const;
  void set(int i, long long r, mpq_class v);
  const std::vector<mpq_class>& values() const { return values_; }

  bool operator==(const RationalPoint& o) const { return m_ == o.m_ && n_ == o.n_ && values_ == o.values_; }

 private:
  int m_;
  int n_;
  std::vector<mpq_class> values_;
};

struct PointAlgebra {
  using value_type = mpq_class;
  const RationalPoint* point;

  int n() const { return point->n(); }
  mpq_class zero() const { return 0; }
  mpq_class one() const { return 1; }
  mpq_class var(int i, long long r) const { return point->at(i, r); }
};

/// kappa_r(b_j, b_{j+1}) = sum_s prod_{t=1}^{s} x_{j+1}^{(r+t)} prod_{t=s+1}^{n-1} x_j^{(r+t)}.
mpq_class kappa(long long r, int j, const RationalPoint& p);

/// The birational R-action s_j on a point; j is 1-based.
RationalPoint s_action(int j, const RationalPoint& p);

/// Product over i < j of kappa_{j-1} at positions (j-1, j) after s_i, ..., s_{j-2}.
mpq_class rational_energy_global(const RationalPoint& p);

/// sigma^{(0)}_{(n-1)(m-1)}(x_1..x_m) sigma^{(1)}_{(n-1)(m-2)}(x_2..x_m) ... sigma^{(m-2)}_{n-1}(x_{m-1}, x_m).
mpq_class rational_energy_product(const RationalPoint& p);

struct LemTactResult {
  bool kappa_ratio = false;   // kappa after transport equals the sigma ratio
  bool transport_form = false;  // s_i...s_{j-1}(x_j^{(r)}) via x_i times a sigma ratio
  bool sigma_form = false;    // the same via sigma_{(n-1)(j-i)+1} / sigma_{(n-1)(j-i)}
  bool all() const { return kappa_ratio && transport_form && sigma_form; }
};

LemTactResult check_lem_tact(int i, int j, long long r, const RationalPoint& p);

}  // namespace krenergy
