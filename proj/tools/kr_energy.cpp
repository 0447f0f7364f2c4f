// kr_energy: energies, R-matrices and the verification harness from the shell.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "krenergy/crystal.hpp"
#include "krenergy/json_io.hpp"
#include "krenergy/verify.hpp"

using namespace krenergy;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kBadInput = 2;

const char* kExitCodes =
    "Exit codes: 0 ok, 1 a checked property was violated, 2 malformed input or configuration.\n"
    "KR_ENERGY_GUARD overrides the tableau enumeration guard (default 10000000).";

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Json read_json(const std::string& path, int n_flag) {
  Json j = parse_json(read_input(path));
  if (n_flag > 0) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    if (!j.contains("n")) j["n"] = n_flag;
    else if (j["n"] != n_flag) throw InputError("--n disagrees with the input's n");
  }
  return j;
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError(std::string("invalid ") + what + " range '" + text + "', expected N or LO:HI");
  }
}

std::string color_label(int r, int n) { return std::to_string(r == 0 ? n : r); }

int cmd_energy(const std::string& path, int n_flag) {
  const TensorElement b = tensor_from_json(read_json(path, n_flag));
  const auto d = intrinsic_energy(b);
  const auto stair = energy_staircase(b);
  std::cout << Json{{"intrinsic", d}, {"staircase", stair}, {"equal", d == stair}}.dump() << "\n";
  if (d != stair) {
    std::cerr << "intrinsic energy and staircase minimum disagree\n";
    return kViolated;
  }
  return kOk;
}

int cmd_rmatrix(const std::string& path, int n_flag, bool oracle, bool check) {
  const auto [b1, b2] = pair_from_json(read_json(path, n_flag));
  const auto formula = r_matrix(b1, b2);
  if (check) {
    const auto searched = r_matrix_oracle(b1, b2);
    const bool agree = searched == formula;
    Json out = pair_to_json(formula.first, formula.second);
    out["oracle"] = pair_to_json(searched.first, searched.second)["factors"];
    out["agree"] = agree;
    std::cout << out.dump() << "\n";
    if (!agree) std::cerr << "formula and jeu de taquin oracle disagree\n";
    return agree ? kOk : kViolated;
  }
  const auto result = oracle ? r_matrix_oracle(b1, b2) : formula;
  std::cout << pair_to_json(result.first, result.second).dump() << "\n";
  return kOk;
}

int cmd_verify(VerifyConfig cfg, const std::string& suites, const std::string& n_range, const std::string& m_range,
               const std::string& mode, bool timings) {
  if (!suites.empty() && suites != "all") {
    cfg.suites.clear();
    std::stringstream ss(suites);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto s = parse_suite(name);
      if (!s) throw InputError("unknown suite '" + name + "'");
      cfg.suites.push_back(*s);
    }
  }
  std::tie(cfg.n_min, cfg.n_max) = parse_range(n_range, "n");
  std::tie(cfg.m_min, cfg.m_max) = parse_range(m_range, "m");
  const auto parsed_mode = parse_mode(mode);
  if (!parsed_mode) throw InputError("unknown mode '" + mode + "'");
  cfg.mode = *parsed_mode;
  cfg.validate();

  const RunReport report = run_verify(cfg);
  std::cout << report.to_json(timings).dump(2) << "\n";
  std::cerr << report.summary();
  return report.failed() == 0 ? kOk : kViolated;
}

int cmd_emit_formula(int n, int m, bool text) {
  CrystalParams{n};
  if (m < 1) throw InputError("--m must be at least 1");
  auto terms = staircase_objective(n, m);
  // List tableaux by their rows read bottom to top.
  auto key = [](const StaircaseTerm& t) {
    auto rows = t.tableau.rows();
    std::reverse(rows.begin(), rows.end());
    return rows;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

  Json out = Json::array();
  std::vector<std::string> sums;
  for (const auto& t : terms) {
    std::string sum;
    Json vars = Json::array();
    for (const auto& [i, r] : t.variables) {
      if (!sum.empty()) sum += "+";
      sum += "x_" + std::to_string(i) + "^{(" + color_label(r, n) + ")}";
      vars.push_back({i, r});
    }
    if (sum.empty()) sum = "0";
    sums.push_back(sum);
    out.push_back({{"tableau", ssyt_to_json(t.tableau)}, {"term", sum}, {"variables", std::move(vars)}});
  }
  if (text) {
    std::cout << "min(";
    for (std::size_t k = 0; k < sums.size(); ++k) std::cout << (k ? ", " : "") << sums[k];
    std::cout << ")\n";
  } else {
    std::cout << Json{{"n", n}, {"m", m}, {"count", terms.size()}, {"terms", std::move(out)}}.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy of tensor products of single-row KR crystals.", "kr_energy"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  std::string json_path = "-";
  int n_flag = 0;

  auto* energy = app.add_subcommand("energy", "Intrinsic energy and the staircase tableau minimum of a tensor.");
  energy->add_option("--json", json_path, "Tensor JSON file, '-' for stdin")->capture_default_str();
  energy->add_option("--n", n_flag, "Number of letters, when the input omits it");

  bool oracle = false, check = false;
  auto* rmatrix = app.add_subcommand("rmatrix", "Combinatorial R-matrix of a pair of factors.");
  rmatrix->add_option("--json", json_path, "Pair JSON file, '-' for stdin")->capture_default_str();
  rmatrix->add_option("--n", n_flag, "Number of letters, when the input omits it");
  rmatrix->add_flag("--oracle", oracle, "Use the jeu de taquin search instead of the formula");
  rmatrix->add_flag("--check", check, "Run both and require agreement");

  VerifyConfig cfg;
  std::string suites = "all", n_range = "2:3", m_range = "1:3", mode = "exhaustive";
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites; JSON report on stdout, summary on stderr.");
  verify->add_option("--suites", suites,
                     "Comma-separated: rmatrix, coenergy, energy-equivalence, braid, lsym-identities, birational, "
                     "section4, or all")
      ->capture_default_str();
  verify->add_option("--n", n_range, "n or LO:HI within [2, 6]")->capture_default_str();
  verify->add_option("--m", m_range, "m or LO:HI within [1, 6]")->capture_default_str();
  verify->add_option("--trials", cfg.trials, "Random tensors or points per (n, m)")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed for all random draws")->capture_default_str();
  verify->add_option("--mode", mode, "exhaustive, randomized or both")->capture_default_str();
  verify->add_option("--capacity-cap", cfg.capacity_cap, "Largest factor size")->capture_default_str();
  verify->add_flag("--timings", timings, "Include wall-clock seconds per suite in the report");

  int emit_n = 2, emit_m = 3;
  bool text = false;
  auto* emit = app.add_subcommand("emit-formula", "Print the staircase tableaux and their terms in the energy minimum.");
  emit->add_option("--n", emit_n, "Number of letters")->capture_default_str();
  emit->add_option("--m", emit_m, "Number of factors")->capture_default_str();
  emit->add_flag("--text", text, "Print the min(...) expression instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (energy->parsed()) return cmd_energy(json_path, n_flag);
    if (rmatrix->parsed()) return cmd_rmatrix(json_path, n_flag, oracle, check);
    if (verify->parsed()) return cmd_verify(cfg, suites, n_range, m_range, mode, timings);
    if (emit->parsed()) return cmd_emit_formula(emit_n, emit_m, text);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise KR_ENERGY_GUARD)\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kViolated;
  }
  return kBadInput;
}
