#include "krenergy/lsym.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace krenergy {

Ambient::Ambient(int m_, int n_) : m(m_), n(n_) {
  if (m < 1) throw std::invalid_argument("ambient needs m >= 1");
  if (n < 2) throw std::invalid_argument("ambient needs n >= 2");
  if (m * n > kMaxVariables) throw std::invalid_argument("ambient has too many variables");
}

ColoredMonomial ColoredMonomial::variable(const Ambient& amb, int i, long long r, int exponent) {
  if (i < 1 || i > amb.m) throw std::out_of_range("variable row out of range");
  ColoredMonomial mono;
  mono.multiply_by(amb.var_id(i, r), exponent);
  return mono;
}

int ColoredMonomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::vector<std::array<int, 3>> ColoredMonomial::entries(const Ambient& amb) const {
  std::vector<std::array<int, 3>> out;
  for (int id = 0; id < amb.variables(); ++id) {
    const int e = exps_[static_cast<std::size_t>(id)];
    if (e > 0) out.push_back({id / amb.n + 1, id % amb.n, e});
  }
  return out;
}

void ColoredMonomial::multiply_by(int id, int exponent) {
  auto& slot = exps_[static_cast<std::size_t>(id)];
  const int e = slot + exponent;
  if (e < 0 || e > 255) throw std::overflow_error("monomial exponent out of range");
  slot = static_cast<std::uint8_t>(e);
}

ColoredMonomial ColoredMonomial::operator*(const ColoredMonomial& o) const {
  ColoredMonomial out = *this;
  for (std::size_t id = 0; id < exps_.size(); ++id)
    if (o.exps_[id]) out.multiply_by(static_cast<int>(id), o.exps_[id]);
  return out;
}

std::size_t ColoredMonomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

struct MonoHash {
  std::size_t operator()(const ColoredMonomial& m) const { return m.hash(); }
};

}  // namespace

ColoredPoly ColoredPoly::constant(Ambient amb, const mpz_class& c) {
  return monomial(amb, ColoredMonomial{}, c);
}

ColoredPoly ColoredPoly::variable(Ambient amb, int i, long long r) {
  return monomial(amb, ColoredMonomial::variable(amb, i, r));
}

ColoredPoly ColoredPoly::monomial(Ambient amb, const ColoredMonomial& mono, const mpz_class& c) {
  ColoredPoly p(amb);
  if (sgn(c) != 0) p.terms_.emplace_back(mono, c);
  return p;
}

ColoredPoly ColoredPoly::from_terms(Ambient amb, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  ColoredPoly p(amb);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return sgn(t.second) == 0; });
  return p;
}

mpz_class ColoredPoly::coefficient(const ColoredMonomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const ColoredMonomial& m) { return t.first < m; });
  if (it != terms_.end() && it->first == mono) return it->second;
  return 0;
}

bool ColoredPoly::all_coefficients_positive() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.second) > 0; });
}

bool ColoredPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree() == d; });
}

void ColoredPoly::require_same_ambient(const ColoredPoly& o) const {
  if (!(amb_ == o.amb_)) throw std::invalid_argument("polynomials live in different ambients");
}

ColoredPoly ColoredPoly::operator+(const ColoredPoly& o) const {
  require_same_ambient(o);
  ColoredPoly out(amb_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      mpz_class c = a->second + b->second;
      if (sgn(c) != 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

ColoredPoly ColoredPoly::operator-() const {
  ColoredPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

ColoredPoly ColoredPoly::operator-(const ColoredPoly& o) const { return *this + (-o); }

ColoredPoly ColoredPoly::operator*(const ColoredPoly& o) const {
  require_same_ambient(o);
  if (terms_.empty() || o.terms_.empty()) return ColoredPoly(amb_);
  if (o.terms_.size() == 1 && o.terms_[0].first == ColoredMonomial{}) {
    ColoredPoly out = *this;
    for (auto& t : out.terms_) t.second *= o.terms_[0].second;
    return out;
  }
  if (terms_.size() == 1 && terms_[0].first == ColoredMonomial{}) return o * *this;
  std::unordered_map<ColoredMonomial, mpz_class, MonoHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, c] : acc)
    if (sgn(c) != 0) terms.emplace_back(mono, std::move(c));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  ColoredPoly out(amb_);
  out.terms_ = std::move(terms);
  return out;
}

std::string ColoredPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const mpz_class mag = abs(c);
    const auto entries = mono.entries(amb_);
    if (mag != 1 || entries.empty()) os << mag.get_str();
    bool sep = mag != 1;
    for (const auto& [i, r, e] : entries) {
      if (sep) os << '*';
      sep = true;
      os << "x" << i << "^(" << r << ")";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::optional<std::int64_t> trop_eval(const ColoredPoly& p, const TropicalGrid& grid) {
  if (grid.m() != p.ambient().m || grid.n() != p.ambient().n)
    throw std::invalid_argument("grid dimensions do not match the polynomial ambient");
  if (!p.all_coefficients_positive())
    throw std::invalid_argument("tropicalization needs a polynomial with positive coefficients");
  std::optional<std::int64_t> best;
  for (const auto& [mono, c] : p.terms()) {
    std::int64_t sum = 0;
    for (const auto& [i, r, e] : mono.entries(p.ambient())) sum = checked_add(sum, checked_mul(e, grid.at(i, r)));
    if (!best || sum < *best) best = sum;
  }
  return best;
}

ColoredPoly loop_e(const Ambient& amb, int k, long long r, VarRange vars) { return loop_e(PolyAlgebra{amb}, k, r, vars); }
ColoredPoly loop_h(const Ambient& amb, int k, long long r, VarRange vars) { return loop_h(PolyAlgebra{amb}, k, r, vars); }
ColoredPoly tau(const Ambient& amb, int k, long long r, VarRange vars) { return tau(PolyAlgebra{amb}, k, r, vars); }
ColoredPoly sigma(const Ambient& amb, int k, long long r, VarRange vars) { return sigma(PolyAlgebra{amb}, k, r, vars); }

ColoredPoly loop_schur_tableaux(const Ambient& amb, const SkewShape& shape, long long r, std::uint64_t guard) {
  SsytEnumerator it(shape, amb.m, guard);
  const auto cells = it.cells();
  std::vector<int> colors;
  for (const Cell& c : cells) colors.push_back(residue(r + c.row - c.col, amb.n));
  std::map<ColoredMonomial, mpz_class> acc;
  while (it.next()) {
    ColoredMonomial mono;
    const auto entries = it.entries();
    for (std::size_t k = 0; k < cells.size(); ++k) mono.multiply_by(amb.var_id(entries[k], colors[k]));
    acc[mono] += 1;
  }
  std::vector<ColoredPoly::Term> terms(acc.begin(), acc.end());
  return ColoredPoly::from_terms(amb, std::move(terms));
}

}  // namespace krenergy
