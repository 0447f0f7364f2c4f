#include "krenergy/json_io.hpp"

#include <limits>

namespace krenergy {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, int lo, int hi) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < lo || x > hi) fail(std::string("field '") + key + "' out of range");
  return static_cast<int>(x);
}

mpz_class big_integer(const Json& v, const char* what) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<std::int64_t>()));
  if (!v.is_string()) fail(std::string(what) + " must be a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) fail(std::string("invalid decimal ") + what + ": " + s);
  return z;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

TensorElement tensor_from_json(const Json& j) {
  return guarded([&] {
    const int n = int_field(j, "n", 2, 1 << 20);
    const bool has_factors = j.contains("factors");
    const bool has_rows = j.contains("rows");
    if (has_factors == has_rows) fail("tensor needs exactly one of 'factors' or 'rows'");
    std::vector<CrystalElement> factors;
    if (has_factors) {
      const Json& fs = j["factors"];
      if (!fs.is_array()) fail("'factors' must be an array");
      for (const Json& f : fs) {
        if (!f.is_array() || f.size() != static_cast<std::size_t>(n)) fail("each factor needs n letter counts");
        std::vector<std::int64_t> counts;
        for (const Json& c : f) {
          if (!c.is_number_integer()) fail("letter counts must be integers");
          counts.push_back(c.get<std::int64_t>());
        }
        factors.emplace_back(std::move(counts));
      }
    } else {
      const Json& rs = j["rows"];
      if (!rs.is_array()) fail("'rows' must be an array");
      for (const Json& r : rs) {
        if (!r.is_string()) fail("rows must be strings");
        factors.push_back(CrystalElement::from_row(r.get<std::string>(), n));
      }
    }
    return TensorElement(CrystalParams{n}, std::move(factors));
  });
}

Json tensor_to_json(const TensorElement& b) {
  Json factors = Json::array();
  for (const auto& f : b.factors()) factors.push_back(f.counts());
  return {{"n", b.n()}, {"factors", std::move(factors)}};
}

std::pair<CrystalElement, CrystalElement> pair_from_json(const Json& j) {
  const TensorElement b = tensor_from_json(j);
  if (b.m() != 2) throw InputError("a pair needs exactly two factors");
  return {b.factor(1), b.factor(2)};
}

Json pair_to_json(const CrystalElement& b1, const CrystalElement& b2) {
  return tensor_to_json(TensorElement(CrystalParams{b1.n()}, {b1, b2}));
}

Json poly_to_json(const ColoredPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, coef] : p.terms()) {
    Json exps = Json::array();
    for (const auto& e : mono.entries(p.ambient())) exps.push_back(e);
    terms.push_back({{"coef", coef.get_str()}, {"exps", std::move(exps)}});
  }
  return {{"m", p.ambient().m}, {"n", p.ambient().n}, {"terms", std::move(terms)}};
}

ColoredPoly poly_from_json(const Json& j) {
  return guarded([&] {
    const int m = int_field(j, "m", 1, kMaxVariables);
    const int n = int_field(j, "n", 2, kMaxVariables);
    const Ambient amb(m, n);
    const Json& ts = field(j, "terms");
    if (!ts.is_array()) fail("'terms' must be an array");
    std::vector<ColoredPoly::Term> terms;
    for (const Json& t : ts) {
      ColoredMonomial mono;
      const Json& exps = field(t, "exps");
      if (!exps.is_array()) fail("'exps' must be an array");
      for (const Json& e : exps) {
        if (!e.is_array() || e.size() != 3) fail("each exponent entry is [i, r, e]");
        const int i = e[0].get<int>(), r = e[1].get<int>(), x = e[2].get<int>();
        if (i < 1 || i > m || r < 0 || r >= n || x < 1) fail("exponent entry out of range");
        mono.multiply_by(amb.var_id(i, r), x);
      }
      terms.emplace_back(mono, big_integer(field(t, "coef"), "coefficient"));
    }
    return ColoredPoly::from_terms(amb, std::move(terms));
  });
}

Json rational_to_json(const mpq_class& q) { return Json::array({q.get_num().get_str(), q.get_den().get_str()}); }

Json point_to_json(const RationalPoint& p) {
  Json values = Json::array();
  for (const auto& v : p.values()) values.push_back(rational_to_json(v));
  return {{"m", p.m()}, {"n", p.n()}, {"values", std::move(values)}};
}

RationalPoint point_from_json(const Json& j) {
  return guarded([&] {
    const int m = int_field(j, "m", 1, 1 << 16);
    const int n = int_field(j, "n", 2, 1 << 16);
    const Json& vs = field(j, "values");
    if (!vs.is_array()) fail("'values' must be an array");
    std::vector<mpq_class> values;
    for (const Json& v : vs) {
      if (!v.is_array() || v.size() != 2) fail("each value is [num, den]");
      const mpz_class den = big_integer(v[1], "denominator");
      if (den == 0) fail("zero denominator");
      values.emplace_back(big_integer(v[0], "numerator"), den);
    }
    return RationalPoint(m, n, std::move(values));
  });
}

Json grid_to_json(const TropicalGrid& g) {
  Json rows = Json::array();
  for (int i = 1; i <= g.m(); ++i) {
    Json row = Json::array();
    for (int r = 0; r < g.n(); ++r) row.push_back(g.at(i, r));
    rows.push_back(std::move(row));
  }
  return {{"m", g.m()}, {"n", g.n()}, {"values", std::move(rows)}};
}

Json ssyt_to_json(const Ssyt& t) {
  Json rows = Json::array();
  const auto& shape = t.shape();
  for (int row = 1; row <= shape.rows(); ++row) {
    Json out = Json::array();
    for (int col = 1; col <= shape.outer()[row - 1]; ++col) {
      if (col <= shape.inner()[row - 1]) out.push_back(nullptr);
      else out.push_back(t.at(row, col));
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

Ssyt ssyt_from_json(const Json& j, int max_entry) {
  return guarded([&] {
    if (!j.is_array()) fail("a tableau is an array of rows");
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (const Json& row : j) {
      if (!row.is_array()) fail("tableau rows must be arrays");
      int skipped = 0;
      std::vector<int> entries;
      for (const Json& v : row) {
        if (v.is_null()) {
          if (!entries.empty()) fail("inner cells must precede the filled cells of a row");
          ++skipped;
        } else if (v.is_number_integer()) {
          entries.push_back(v.get<int>());
        } else {
          fail("tableau entries must be integers or null");
        }
      }
      outer.push_back(static_cast<int>(row.size()));
      inner.push_back(skipped);
      rows.push_back(std::move(entries));
    }
    while (!rows.empty() && outer.back() == 0) {
      outer.pop_back();
      inner.pop_back();
      rows.pop_back();
    }
    SkewShape shape{Shape(outer), Shape(inner)};
    if (!is_semistandard(shape, rows, max_entry)) fail("tableau is not semistandard");
    return Ssyt(shape, rows, max_entry);
  });
}

Json report_to_json(const IdentityReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry = {{"identity", c.identity}, {"n", c.n}, {"m", c.m}, {"status", c.passed ? "pass" : "fail"}};
    if (c.r >= 0) entry["r"] = c.r;
    if (c.k >= 0) entry["k"] = c.k;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    if (!c.passed) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return {{"checks", std::move(checks)}, {"failures", report.failures()}};
}

}  // namespace krenergy
