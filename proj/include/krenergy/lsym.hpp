#pragma once

#include <gmpxx.h>

#include <array>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krenergy/checked.hpp"
#include "krenergy/crystal.hpp"
#include "krenergy/tableaux.hpp"

namespace krenergy {

inline constexpr int kMaxVariables = 36;

/// Variables x_i^{(r)} for i in 1..m and colors r in Z/nZ.
struct Ambient {
  int m;
  int n;

  Ambient(int m_, int n_);
  int variables() const { return m * n; }
  /// Row-major id of x_i^{(r)}: lexicographic in (i, r).
  int var_id(int i, long long r) const { return (i - 1) * n + residue(r, n); }
  bool operator==(const Ambient&) const = default;
};

/// A contiguous block of variable rows x_first, ..., x_last (1-based, inclusive).
struct VarRange {
  int first;
  int last;
  int size() const { return last >= first ? last - first + 1 : 0; }
  bool empty() const { return size() == 0; }
  VarRange rest() const { return {first + 1, last}; }
};

class ColoredMonomial {
 public:
  ColoredMonomial() { exps_.fill(0); }
  static ColoredMonomial variable(const Ambient& amb, int i, long long r, int exponent = 1);

  int exponent(int id) const { return exps_[static_cast<std::size_t>(id)]; }
  int degree() const;
  /// Entries (i, r, e) with e > 0, in variable order.
  std::vector<std::array<int, 3>> entries(const Ambient& amb) const;
  void multiply_by(int id, int exponent = 1);

  ColoredMonomial operator*(const ColoredMonomial& o) const;
  auto operator<=>(const ColoredMonomial&) const = default;
  bool operator==(const ColoredMonomial&) const = default;

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_;
};

/// Sparse polynomial with arbitrary-precision integer coefficients, kept in
/// canonical form: terms sorted by monomial, no zero coefficients.
class ColoredPoly {
 public:
  using Term = std::pair<ColoredMonomial, mpz_class>;

  explicit ColoredPoly(Ambient amb) : amb_(amb) {}
  static ColoredPoly one(Ambient amb) { return constant(amb, 1); }
  static ColoredPoly constant(Ambient amb, const mpz_class& c);
  static ColoredPoly variable(Ambient amb, int i, long long r);
  static ColoredPoly monomial(Ambient amb, const ColoredMonomial& mono, const mpz_class& c = 1);
  /// Builds a polynomial from arbitrary terms, combining duplicates.
  static ColoredPoly from_terms(Ambient amb, std::vector<Term> terms);

  const Ambient& ambient() const { return amb_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const ColoredMonomial& mono) const;
  bool all_coefficients_positive() const;
  /// True iff every monomial has total degree `d` (vacuous for zero).
  bool is_homogeneous(int d) const;

  ColoredPoly operator+(const ColoredPoly& o) const;
  ColoredPoly operator-(const ColoredPoly& o) const;
  ColoredPoly operator-() const;
  ColoredPoly operator*(const ColoredPoly& o) const;
  ColoredPoly& operator+=(const ColoredPoly& o) { return *this = *this + o; }
  ColoredPoly& operator-=(const ColoredPoly& o) { return *this = *this - o; }
  ColoredPoly& operator*=(const ColoredPoly& o) { return *this = *this * o; }
  bool operator==(const ColoredPoly& o) const { return amb_ == o.amb_ && terms_ == o.terms_; }

  /// Evaluates with `value(i, r)` supplying x_i^{(r)}.
  template <class T, class F>
  T evaluate(F&& value) const;

  std::string to_string() const;

 private:
  void require_same_ambient(const ColoredPoly& o) const;

  Ambient amb_;
  std::vector<Term> terms_;
};

/// Min-plus number; `infinite()` is the additive identity.
struct Tropical {
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t v = kInf;

  static Tropical infinite() { return {}; }
  bool is_infinite() const { return v == kInf; }
  Tropical operator+(Tropical o) const { return {std::min(v, o.v)}; }
  Tropical operator*(Tropical o) const {
    if (is_infinite() || o.is_infinite()) return {};
    return {checked_add(v, o.v)};
  }
  bool operator==(const Tropical&) const = default;
};

/// Min over monomials of the exponent-weighted sum of grid values; nullopt for
/// the zero polynomial. Rejects polynomials with a negative coefficient.
std::optional<std::int64_t> trop_eval(const ColoredPoly& p, const TropicalGrid& grid);

// Algebras supplying the values of the variables x_i^{(r)}. The generic loop
// function routines below only need zero, one, variables, + and *.

template <class A>
concept LoopAlgebra = requires(const A& a, int i, long long r) {
  typename A::value_type;
  { a.n() } -> std::convertible_to<int>;
  { a.zero() } -> std::convertible_to<typename A::value_type>;
  { a.one() } -> std::convertible_to<typename A::value_type>;
  { a.var(i, r) } -> std::convertible_to<typename A::value_type>;
};

struct PolyAlgebra {
  using value_type = ColoredPoly;
  Ambient amb;

  int n() const { return amb.n; }
  ColoredPoly zero() const { return ColoredPoly(amb); }
  ColoredPoly one() const { return ColoredPoly::one(amb); }
  ColoredPoly var(int i, long long r) const { return ColoredPoly::variable(amb, i, r); }
};

struct TropicalAlgebra {
  using value_type = Tropical;
  const TropicalGrid* grid;

  int n() const { return grid->n(); }
  Tropical zero() const { return Tropical::infinite(); }
  Tropical one() const { return {0}; }
  Tropical var(int i, long long r) const { return {grid->at(i, static_cast<int>(residue(r, grid->n())))}; }
};

inline bool is_zero_value(const ColoredPoly& p) { return p.is_zero(); }
inline bool is_zero_value(const mpq_class& q) { return sgn(q) == 0; }
inline bool is_zero_value(const Tropical& t) { return t.is_infinite(); }

namespace detail {

/// table[k][c] = sum over weakly increasing index sequences in `vars` of
/// length k, each index repeated at most `cap` times, of the product of
/// x^{(c)}, x^{(c-1)}, ... along the sequence.
template <LoopAlgebra A>
std::vector<std::vector<typename A::value_type>> descending_table(const A& alg, int kmax, VarRange vars, int cap) {
  using V = typename A::value_type;
  const int n = alg.n();
  std::vector<std::vector<V>> cur(static_cast<std::size_t>(kmax + 1), std::vector<V>(static_cast<std::size_t>(n), alg.zero()));
  for (int c = 0; c < n; ++c) cur[0][static_cast<std::size_t>(c)] = alg.one();
  for (int pos = vars.last; pos >= vars.first; --pos) {
    auto next = cur;
    for (int k = 1; k <= kmax; ++k) {
      for (int c = 0; c < n; ++c) {
        // q copies of x_pos with colors c, c-1, ..., c-q+1, then the suffix from color c-q.
        V prefix = alg.one();
        V acc = cur[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
        for (int q = 1; q <= std::min(k, cap); ++q) {
          prefix = prefix * alg.var(pos, c - q + 1);
          const V& tail = cur[static_cast<std::size_t>(k - q)][static_cast<std::size_t>(residue(c - q, n))];
          if (!is_zero_value(tail)) acc = acc + prefix * tail;
        }
        next[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = std::move(acc);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// Loop elementary e_k^{(r)}: increasing indices, colors r, r+1, ...
template <LoopAlgebra A>
typename A::value_type loop_e(const A& alg, int k, long long r, VarRange vars) {
  using V = typename A::value_type;
  if (k < 0 || k > vars.size()) return alg.zero();
  if (k == 0) return alg.one();
  const int n = alg.n();
  std::vector<std::vector<V>> cur(static_cast<std::size_t>(k + 1), std::vector<V>(static_cast<std::size_t>(n), alg.zero()));
  for (int c = 0; c < n; ++c) cur[0][static_cast<std::size_t>(c)] = alg.one();
  for (int pos = vars.last; pos >= vars.first; --pos) {
    for (int kk = k; kk >= 1; --kk) {
      for (int c = 0; c < n; ++c) {
        const V& tail = cur[static_cast<std::size_t>(kk - 1)][static_cast<std::size_t>(residue(c + 1, n))];
        if (!is_zero_value(tail))
          cur[static_cast<std::size_t>(kk)][static_cast<std::size_t>(c)] =
              cur[static_cast<std::size_t>(kk)][static_cast<std::size_t>(c)] + alg.var(pos, c) * tail;
      }
    }
  }
  return cur[static_cast<std::size_t>(k)][static_cast<std::size_t>(residue(r, n))];
}

/// Loop complete homogeneous h_k^{(r)}: weakly increasing indices, colors r, r-1, ...
template <LoopAlgebra A>
typename A::value_type loop_h(const A& alg, int k, long long r, VarRange vars) {
  if (k < 0) return alg.zero();
  if (k == 0) return alg.one();
  if (vars.empty()) return alg.zero();
  return detail::descending_table(alg, k, vars, k)[static_cast<std::size_t>(k)][static_cast<std::size_t>(residue(r, alg.n()))];
}

/// tau_k^{(r)}: as loop_h but no index may repeat more than n-1 times.
template <LoopAlgebra A>
typename A::value_type tau(const A& alg, int k, long long r, VarRange vars) {
  if (k < 0) return alg.zero();
  if (k == 0) return alg.one();
  if (k > (alg.n() - 1) * vars.size()) return alg.zero();
  return detail::descending_table(alg, k, vars, alg.n() - 1)[static_cast<std::size_t>(k)]
                                                            [static_cast<std::size_t>(residue(r, alg.n()))];
}

/// sigma_k^{(r)}(x_first, ...) = sum_i x_first^{(r)} ... x_first^{(r-i+1)} tau_{k-i}^{(r-i)}(rest).
template <LoopAlgebra A>
typename A::value_type sigma(const A& alg, int k, long long r, VarRange vars) {
  using V = typename A::value_type;
  if (vars.empty()) throw std::invalid_argument("sigma needs a nonempty variable range");
  if (k < 0) return alg.zero();
  const int n = alg.n();
  const VarRange rest = vars.rest();
  const int kmax = std::min(k, (n - 1) * rest.size());
  auto table = detail::descending_table(alg, kmax, rest, n - 1);
  V total = alg.zero();
  V prefix = alg.one();
  for (int i = 0; i <= k; ++i) {
    if (i > 0) prefix = prefix * alg.var(vars.first, r - i + 1);
    const int rem = k - i;
    if (rem > kmax) continue;
    total = total + prefix * table[static_cast<std::size_t>(rem)][static_cast<std::size_t>(residue(r - i, n))];
  }
  return total;
}

/// Classical e_k of the color products P_i = prod_s x_i^{(s)}.
template <LoopAlgebra A>
typename A::value_type color_product_e(const A& alg, int k, VarRange vars) {
  using V = typename A::value_type;
  if (k < 0 || k > vars.size()) return alg.zero();
  std::vector<V> cur(static_cast<std::size_t>(k + 1), alg.zero());
  cur[0] = alg.one();
  for (int pos = vars.first; pos <= vars.last; ++pos) {
    V prod = alg.one();
    for (int s = 0; s < alg.n(); ++s) prod = prod * alg.var(pos, s);
    for (int kk = k; kk >= 1; --kk)
      if (!is_zero_value(cur[static_cast<std::size_t>(kk - 1)]))
        cur[static_cast<std::size_t>(kk)] = cur[static_cast<std::size_t>(kk)] + prod * cur[static_cast<std::size_t>(kk - 1)];
  }
  return cur[static_cast<std::size_t>(k)];
}

/// Tableau sum of x_{T(s)}^{(c(s)+r)} with content c(s) = row - col and
/// entry t standing for the variable row vars.first + t - 1.
template <LoopAlgebra A>
typename A::value_type loop_schur_tableaux(const A& alg, const SkewShape& shape, long long r, VarRange vars,
                                           std::uint64_t guard = default_enumeration_guard()) {
  using V = typename A::value_type;
  SsytEnumerator it(shape, vars.size(), guard);
  const auto cells = it.cells();
  V total = alg.zero();
  while (it.next()) {
    V term = alg.one();
    const auto entries = it.entries();
    for (std::size_t k = 0; k < cells.size(); ++k)
      term = term * alg.var(vars.first + entries[k] - 1, r + cells[k].row - cells[k].col);
    total = total + term;
  }
  return total;
}

/// The product sigma^{(r)}_{(n-1)(m-1)}(x_1..x_m) sigma^{(r+1)}_{(n-1)(m-2)}(x_2..x_m) ... sigma^{(r+m-2)}_{n-1}(x_{m-1}, x_m)
/// over the variable rows in `vars` (1 when there is a single row).
template <LoopAlgebra A>
typename A::value_type staircase_sigma_product(const A& alg, long long r, VarRange vars) {
  using V = typename A::value_type;
  const int m = vars.size();
  const int n = alg.n();
  V total = alg.one();
  for (int t = 0; t + 2 <= m; ++t)
    total = total * sigma(alg, (n - 1) * (m - 1 - t), r + t, VarRange{vars.first + t, vars.last});
  return total;
}

// Polynomial-valued conveniences over the full variable set of `amb`.
ColoredPoly loop_e(const Ambient& amb, int k, long long r, VarRange vars);
ColoredPoly loop_h(const Ambient& amb, int k, long long r, VarRange vars);
ColoredPoly tau(const Ambient& amb, int k, long long r, VarRange vars);
ColoredPoly sigma(const Ambient& amb, int k, long long r, VarRange vars);
/// Tableau sum built directly as a monomial map (entries 1..amb.m).
ColoredPoly loop_schur_tableaux(const Ambient& amb, const SkewShape& shape, long long r,
                                std::uint64_t guard = default_enumeration_guard());

template <class T, class F>
T ColoredPoly::evaluate(F&& value) const {
  T total = 0;
  for (const auto& [mono, coef] : terms_) {
    T term = T(coef);
    for (const auto& [i, r, e] : mono.entries(amb_))
      for (int k = 0; k < e; ++k) term *= value(i, r);
    total += term;
  }
  return total;
}

}  // namespace krenergy
