#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "krenergy/birational.hpp"
#include "krenergy/crystal.hpp"
#include "krenergy/identities.hpp"
#include "krenergy/json_io.hpp"
#include "krenergy/lsym.hpp"
#include "krenergy/verify.hpp"

namespace py = pybind11;
using namespace krenergy;

namespace {

using Counts = std::vector<std::int64_t>;

CrystalElement element(const Counts& c) { return CrystalElement(c); }

TensorElement tensor(const std::vector<Counts>& factors) {
  if (factors.empty()) throw InputError("a tensor needs at least one factor");
  std::vector<CrystalElement> fs(factors.begin(), factors.end());
  return TensorElement(CrystalParams{static_cast<int>(factors.front().size())}, std::move(fs));
}

std::vector<Counts> counts(const TensorElement& b) {
  std::vector<Counts> out;
  for (const auto& f : b.factors()) out.push_back(f.counts());
  return out;
}

// Points cross the boundary as rows of "num/den" strings.
RationalPoint point(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw InputError("a point needs at least one row");
  const int n = static_cast<int>(rows.front().size());
  std::vector<mpq_class> values;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InputError("point rows must all have n values");
    for (const auto& v : row) {
      mpq_class q;
      if (q.set_str(v, 10) != 0) throw InputError("bad rational '" + v + "'");
      values.push_back(q);
    }
  }
  return RationalPoint(static_cast<int>(rows.size()), n, std::move(values));
}

std::vector<std::vector<std::string>> rows_of(const RationalPoint& p) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(p.m()));
  for (int i = 1; i <= p.m(); ++i)
    for (int r = 0; r < p.n(); ++r) out[static_cast<std::size_t>(i - 1)].push_back(p.at(i, r).get_str());
  return out;
}

std::string verify_json(const std::vector<std::string>& suites, int n_min, int n_max, int m_min, int m_max, int cap,
                        int trials, std::uint64_t seed, const std::string& mode) {
  VerifyConfig cfg;
  if (!suites.empty()) {
    cfg.suites.clear();
    for (const auto& s : suites) {
      const auto parsed = parse_suite(s);
      if (!parsed) throw InputError("unknown suite '" + s + "'");
      cfg.suites.push_back(*parsed);
    }
  }
  const auto parsed_mode = parse_mode(mode);
  if (!parsed_mode) throw InputError("unknown mode '" + mode + "'");
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.m_min = m_min;
  cfg.m_max = m_max;
  cfg.capacity_cap = cap;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.mode = *parsed_mode;
  return run_verify(cfg).to_json().dump();
}

std::string identities_json(int n, int m, bool symbolic, std::uint64_t seed, int points) {
  const IdentityOptions opts{symbolic ? IdentityMode::Symbolic : IdentityMode::Randomized, seed, points, kAllFamilies};
  return report_to_json(identity_suite(n, m, opts)).dump();
}

std::string loop_schur_json(const std::vector<int>& outer, const std::vector<int>& inner, int n, int m, int r) {
  return poly_to_json(loop_schur_tableaux(Ambient(m, n), SkewShape(Shape(outer), Shape(inner)), r)).dump();
}

py::list objective(int n, int m) {
  py::list out;
  for (const auto& t : staircase_objective(n, m)) out.append(py::make_tuple(t.tableau.rows(), t.variables));
  return out;
}

}  // namespace

PYBIND11_MODULE(_krenergy, mod) {
  mod.doc() = "Energy of tensor products of single-row KR crystals";

  py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(mod, "GuardExceeded", PyExc_RuntimeError);

  mod.def("from_row", [](const std::string& w, int n) { return CrystalElement::from_row(w, n).counts(); },
          py::arg("word"), py::arg("n"));
  mod.def("to_row", [](const Counts& c) { return element(c).to_string(); }, py::arg("counts"));
  mod.def("ok", [](long long r, const Counts& a, const Counts& b) { return ok(r, element(a), element(b)); },
          py::arg("r"), py::arg("b1"), py::arg("b2"));
  mod.def(
      "r_matrix",
      [](const Counts& a, const Counts& b) {
        const auto [c1, c2] = r_matrix(element(a), element(b));
        return py::make_tuple(c1.counts(), c2.counts());
      },
      py::arg("b1"), py::arg("b2"));
  mod.def(
      "r_matrix_oracle",
      [](const Counts& a, const Counts& b) {
        const auto [c1, c2] = r_matrix_oracle(element(a), element(b));
        return py::make_tuple(c1.counts(), c2.counts());
      },
      py::arg("b1"), py::arg("b2"));
  mod.def("coenergy", [](const Counts& a, const Counts& b) { return coenergy(element(a), element(b)); },
          py::arg("b1"), py::arg("b2"));
  mod.def("apply_s", [](const std::vector<Counts>& f, int j) { return counts(apply_s(tensor(f), j)); },
          py::arg("factors"), py::arg("j"));
  mod.def("intrinsic_energy", [](const std::vector<Counts>& f) { return intrinsic_energy(tensor(f)); },
          py::arg("factors"));
  mod.def("energy_staircase", [](const std::vector<Counts>& f) { return energy_staircase(tensor(f)); },
          py::arg("factors"));
  mod.def("staircase_objective", &objective, py::arg("n"), py::arg("m"));

  mod.def("s_action", [](int j, const std::vector<std::vector<std::string>>& p) { return rows_of(s_action(j, point(p))); },
          py::arg("j"), py::arg("point"));
  mod.def("rational_energy_global",
          [](const std::vector<std::vector<std::string>>& p) { return rational_energy_global(point(p)).get_str(); },
          py::arg("point"));
  mod.def("rational_energy_product",
          [](const std::vector<std::vector<std::string>>& p) { return rational_energy_product(point(p)).get_str(); },
          py::arg("point"));

  mod.def("loop_schur_json", &loop_schur_json, py::arg("outer"), py::arg("inner"), py::arg("n"), py::arg("m"),
          py::arg("r") = 0);
  mod.def("identity_suite_json", &identities_json, py::arg("n"), py::arg("m"), py::arg("symbolic") = true,
          py::arg("seed") = 1, py::arg("points") = 50);
  mod.def("verify_json", &verify_json, py::arg("suites"), py::arg("n_min"), py::arg("n_max"), py::arg("m_min"),
          py::arg("m_max"), py::arg("capacity_cap"), py::arg("trials"), py::arg("seed"), py::arg("mode"));
}
