// Command-line front end: construct, solve, canonicalize, verify and
// exercise the sign-permutation orthogonal matrices, plus the exhaustive
// searches and the protocol simulation.
//
// Exit codes: 0 success / feasible / verified, 1 infeasible / not verified,
// 2 invalid input, 3 resource limit exceeded.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sorth/canonical.hpp"
#include "sorth/drsp.hpp"
#include "sorth/matrix_io.hpp"
#include "sorth/oracle.hpp"
#include "sorth/sign_solver.hpp"

namespace {

using namespace sorth;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalidInput = 2;
constexpr int kResourceLimit = 3;

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw MalformedMatrix("cannot write " + path);
  out << body;
}

// Witness files must verify when re-read.
void save_checked_witness(const std::string& path, const SymbolicMatrix& m) {
  save_matrix(path, m);
  if (!is_special_orthogonal(load_matrix(path)))
    throw SolutionMismatch("witness file failed re-validation: " + path);
}

Eigen::VectorXd random_unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXd v(n);
  do {
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
  } while (v.norm() < 1e-6);
  return v / v.norm();
}

nlohmann::json divisions_as_json(const DivisionTable& t) {
  nlohmann::json ops = nlohmann::json::array();
  for (const Division& d : t.rows) {
    nlohmann::json couples = nlohmann::json::array();
    for (const Couple& c : d.couples()) {
      nlohmann::json v;
      if (c.value.has_value())
        v = *c.value ? 1 : 0;
      else
        v = nullptr;
      couples.push_back(nlohmann::json::array({c.lo, c.hi, v}));
    }
    ops.push_back(std::move(couples));
  }
  return ops;
}

int run_ordered(int n, const std::string& out, const std::string& format) {
  const auto m = ordered_type(n);
  if (!out.empty()) {
    save_matrix(out, m);
    std::cout << "verdict=ordered n=" << n << " file=" << out << '\n';
  } else {
    std::cout << (format == "text" ? to_text(m) : to_json(m));
  }
  return kOk;
}

int run_solve(const std::string& in, const std::string& out,
              const std::string& dump, const std::string& legend) {
  const auto semi = strip_signs(load_matrix(in));
  if (!is_semi_orthogonal(semi))
    throw NotSemiOrthogonal("input is not semi-orthogonal");
  if (!dump.empty() || !legend.empty()) {
    const auto table = compute_divisions(semi);
    if (!dump.empty()) write_file(dump, build_equations(table).dump());
    if (!legend.empty()) write_file(legend, variable_legend(table));
  }
  const auto result = find_solution(semi);
  std::cout << "verdict=" << (result.found ? "solved" : "infeasible")
            << " n=" << semi.qubits()
            << " rank_full=" << result.elimination.rank_full
            << " rank_coeff=" << result.elimination.rank_coeff;
  if (result.found && !out.empty()) {
    save_checked_witness(out, *result.matrix);
    std::cout << " witness=" << out;
  }
  std::cout << '\n';
  return result.found ? kOk : kNegative;
}

int run_verify(const std::string& in) {
  const auto m = load_matrix(in);
  const bool ok =
      m.mode() == Mode::Semi ? is_semi_orthogonal(m) : is_special_orthogonal(m);
  std::cout << "verdict=" << (ok ? "valid" : "invalid")
            << " mode=" << (m.mode() == Mode::Semi ? "semi" : "special")
            << " n=" << m.qubits() << '\n';
  return ok ? kOk : kNegative;
}

int run_simplify(const std::string& in, const std::string& out,
                 const std::string& perms) {
  const auto semi = strip_signs(load_matrix(in));
  const auto s = simplify_to_ordered(semi);
  if (!perms.empty()) {
    nlohmann::json doc{{"row_perm", s.row}, {"col_perm", s.col}};
    write_file(perms, doc.dump(2) + "\n");
  }
  if (!out.empty()) save_matrix(out, apply_simplification(semi, s));
  std::cout << "verdict=simplified n=" << semi.qubits();
  if (!perms.empty()) std::cout << " perms=" << perms;
  if (!out.empty()) std::cout << " canonical=" << out;
  std::cout << '\n';
  return kOk;
}

int run_feasibility(int n, const std::string& witness) {
  const auto f = feasibility(n);
  std::cout << "verdict=" << (f.feasible ? "feasible" : "infeasible")
            << " n=" << n;
  if (f.elimination.has_value())
    std::cout << " rank_full=" << f.elimination->rank_full
              << " rank_coeff=" << f.elimination->rank_coeff;
  else
    std::cout << " shortcut=block-nesting anchor_order=16";
  if (f.feasible && !witness.empty()) {
    save_checked_witness(witness, *f.witness);
    std::cout << " witness=" << witness;
  }
  std::cout << '\n';
  return f.feasible ? kOk : kNegative;
}

int run_oracle(const std::string& in, int limit, const std::string& witnesses) {
  const auto semi = strip_signs(load_matrix(in));
  const auto search = brute_force_signs(semi, limit);
  std::cout << "verdict=" << (search.count > 0 ? "solvable" : "unsolvable")
            << " n=" << semi.qubits() << " count=" << search.count << '\n';
  if (!witnesses.empty()) {
    const auto table = compute_divisions(semi);
    nlohmann::json all = nlohmann::json::array();
    for (const auto& w : search.witnesses) {
      DivisionTable valued = table;
      for (int op = 0; op < static_cast<int>(valued.rows.size()); ++op) {
        std::vector<Couple> couples;
        const auto span = valued.rows[op].couples();
        for (int s = 0; s < static_cast<int>(span.size()); ++s)
          couples.push_back(
              Couple{span[s].lo, span[s].hi,
                     w[variable_index(semi.order(), op, s)] != 0});
        valued.rows[op] = Division(semi.order(), std::move(couples));
      }
      all.push_back(divisions_as_json(valued));
    }
    write_file(witnesses, all.dump(2) + "\n");
  }
  return search.count > 0 ? kOk : kNegative;
}

int run_simulate(int n, std::uint64_t seed, int trials) {
  if (trials < 1) trials = 1;
  const auto f = feasibility(n);
  if (!f.feasible)
    throw InvalidMatrix("no construction exists for n=" + std::to_string(n));
  const int N = 1 << n;
  std::mt19937_64 rng(seed);
  double worst_prob_err = 0.0, worst_fidelity = 1.0;
  for (int trial = 0; trial < trials; ++trial) {
    const ParameterVector psi(random_unit_vector(N, rng));
    const auto outcomes = simulate_drsp(*f.witness, psi);
    for (int i = 0; i < N; ++i) {
      if (trial == 0)
        std::cout << "outcome=" << i << " probability=" << outcomes[i].probability
                  << " fidelity=" << outcomes[i].fidelity << '\n';
      worst_prob_err =
          std::max(worst_prob_err, std::abs(outcomes[i].probability - 1.0 / N));
      worst_fidelity = std::min(worst_fidelity, outcomes[i].fidelity);
    }
  }
  const bool ok =
      worst_prob_err <= kNumericTol && worst_fidelity >= 1.0 - kNumericTol;
  std::cout << "verdict=" << (ok ? "deterministic" : "deviating") << " n=" << n
            << " trials=" << trials << " max_probability_error=" << worst_prob_err
            << " min_fidelity=" << worst_fidelity << '\n';
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sign-permutation orthogonal matrices for deterministic "
               "remote state preparation"};
  app.require_subcommand(1);

  int n = 1;
  std::string in, out, format = "json", dump, legend, perms, witness;
  int limit = 28;
  std::uint64_t seed = 1;
  int trials = 1;

  auto* ordered = app.add_subcommand("ordered", "emit the canonical matrix");
  ordered->add_option("--n", n, "qubit count")->required();
  ordered->add_option("-o,--output", out, "output file (.json or text)");
  ordered->add_option("--format", format, "stdout format: json|text");

  auto* solve = app.add_subcommand("solve", "assign signs to a matrix");
  solve->add_option("-i,--input", in, "matrix file")->required();
  solve->add_option("-o,--output", out, "witness file");
  solve->add_option("--dump-system", dump, "write the compiled system");
  solve->add_option("--legend", legend, "write the variable legend");

  auto* verify = app.add_subcommand("verify", "validate a matrix file");
  verify->add_option("-i,--input", in, "matrix file")->required();

  auto* simplify = app.add_subcommand("simplify", "canonicalize a matrix");
  simplify->add_option("-i,--input", in, "matrix file")->required();
  simplify->add_option("-o,--output", out, "canonical matrix file");
  simplify->add_option("--perms", perms, "row/column permutation file");

  auto* feas = app.add_subcommand("feasibility", "existence verdict for n");
  feas->add_option("--n", n, "qubit count")->required();
  feas->add_option("--witness", witness, "witness file when feasible");

  auto* oracle = app.add_subcommand("oracle", "exhaustive sign search");
  oracle->add_option("-i,--input", in, "matrix file")->required();
  oracle->add_option("--limit", limit, "variable-count limit");
  oracle->add_option("--witnesses", witness, "witness dump file");

  auto* simulate = app.add_subcommand("simulate", "run the protocol, n <= 3");
  simulate->add_option("--n", n, "qubit count")->required();
  simulate->add_option("--seed", seed, "random seed");
  simulate->add_option("--trials", trials, "number of random states");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ordered->parsed()) return run_ordered(n, out, format);
    if (solve->parsed()) return run_solve(in, out, dump, legend);
    if (verify->parsed()) return run_verify(in);
    if (simplify->parsed()) return run_simplify(in, out, perms);
    if (feas->parsed()) return run_feasibility(n, witness);
    if (oracle->parsed()) return run_oracle(in, limit, witness);
    if (simulate->parsed()) return run_simulate(n, seed, trials);
  } catch (const Error& e) {
    std::cerr << "error=" << e.kind() << " detail=\"" << e.detail() << "\"\n";
    return e.kind() == "TooLarge" ? kResourceLimit : kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error=Internal detail=\"" << e.what() << "\"\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
