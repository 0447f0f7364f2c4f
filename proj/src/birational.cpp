#include "krenergy/birational.hpp"

#include <stdexcept>

namespace krenergy {

RationalPoint::RationalPoint(int m, int n)
    : RationalPoint(m, n, std::vector<mpq_class>(static_cast<std::size_t>(m * n), mpq_class(1))) {}

RationalPoint::RationalPoint(int m, int n, std::vector<mpq_class> row_major_values)
    : m_(m), n_(n), values_(std::move(row_major_values)) {
  if (m < 1 || n < 2) throw std::invalid_argument("point requires m >= 1 and n >= 2");
  if (values_.size() != static_cast<std::size_t>(m * n)) throw std::invalid_argument("point has wrong number of values");
  for (auto& v : values_) {
    v.canonicalize();
    if (sgn(v) <= 0) throw std::invalid_argument("point values must be strictly positive");
  }
}

RationalPoint RationalPoint::random(int m, int n, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(1, bound);
  std::vector<mpq_class> values;
  for (int k = 0; k < m * n; ++k) {
    const int num = dist(rng);
    const int den = dist(rng);
    values.emplace_back(num, den);
  }
  return RationalPoint(m, n, std::move(values));
}

const mpq_class& RationalPoint::at(int i, long long r) const {
  if (i < 1 || i > m_) throw std::out_of_range("point row out of range");
  return values_[static_cast<std::size_t>((i - 1) * n_ + residue(r, n_))];
}

void RationalPoint::set(int i, long long r, mpq_class v) {
  if (i < 1 || i > m_) throw std::out_of_range("point row out of range");
  v.canonicalize();
  if (sgn(v) <= 0) throw std::invalid_argument("point values must be strictly positive");
  values_[static_cast<std::size_t>((i - 1) * n_ + residue(r, n_))] = std::move(v);
}

mpq_class kappa(long long r, int j, const RationalPoint& p) {
  if (j < 1 || j >= p.m()) throw std::out_of_range("kappa index out of range");
  const int n = p.n();
  mpq_class total = 0;
  for (int s = 0; s <= n - 1; ++s) {
    mpq_class term = 1;
    for (int t = 1; t <= s; ++t) term *= p.at(j + 1, r + t);
    for (int t = s + 1; t <= n - 1; ++t) term *= p.at(j, r + t);
    total += term;
  }
  return total;
}

RationalPoint s_action(int j, const RationalPoint& p) {
  if (j < 1 || j >= p.m()) throw std::out_of_range("s_action index out of range");
  const int n = p.n();
  std::vector<mpq_class> k(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) k[static_cast<std::size_t>(r)] = kappa(r, j, p);
  auto kap = [&](long long r) -> const mpq_class& { return k[static_cast<std::size_t>(residue(r, n))]; };
  RationalPoint out = p;
  for (int r = 0; r < n; ++r) {
    out.set(j, r, p.at(j + 1, r + 1) * kap(r + 1) / kap(r));
    out.set(j + 1, r, p.at(j, r - 1) * kap(r - 1) / kap(r));
  }
  return out;
}

mpq_class rational_energy_global(const RationalPoint& p) {
  mpq_class total = 1;
  for (int i = 1; i < p.m(); ++i) {
    RationalPoint moved = p;
    for (int j = i + 1; j <= p.m(); ++j) {
      if (j >= i + 2) moved = s_action(j - 2, moved);
      total *= kappa(j - 1, j - 1, moved);
    }
  }
  return total;
}

mpq_class rational_energy_product(const RationalPoint& p) {
  return staircase_sigma_product(PointAlgebra{&p}, 0, VarRange{1, p.m()});
}

LemTactResult check_lem_tact(int i, int j, long long r, const RationalPoint& p) {
  if (i < 1 || j <= i || j > p.m()) throw std::out_of_range("lem_tact needs 1 <= i < j <= m");
  const int n = p.n();
  const PointAlgebra alg{&p};
  const VarRange full{i, j};
  const VarRange head{i, j - 1};
  const long long c = r - j + i;
  const int deg = (n - 1) * (j - i);

  LemTactResult res;
  RationalPoint moved = p;
  for (int q = i; q <= j - 2; ++q) moved = s_action(q, moved);
  res.kappa_ratio = kappa(r, j - 1, moved) == sigma(alg, deg, c, full) / sigma(alg, (n - 1) * (j - i - 1), c, head);

  moved = s_action(j - 1, moved);
  const mpq_class lhs = moved.at(j, r);
  const mpq_class denom = sigma(alg, deg, c, full);
  res.transport_form = lhs == p.at(i, c) * sigma(alg, deg, c - 1, full) / denom;
  res.sigma_form = lhs == sigma(alg, deg + 1, c, full) / denom;
  return res;
}

}  // namespace krenergy
