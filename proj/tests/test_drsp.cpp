#include <random>

#include "doctest.h"
#include "sorth/canonical.hpp"
#include "sorth/drsp.hpp"
#include "sorth/sign_solver.hpp"
#include "test_util.hpp"

using namespace sorth;

TEST_CASE("a basis state teleports through the order-2 construction") {
  SymbolicMatrix m(1, Mode::Special);
  m.set(0, 0, SignedEntry{0, Sign::Plus});
  m.set(1, 0, SignedEntry{1, Sign::Plus});
  m.set(0, 1, SignedEntry{1, Sign::Plus});
  m.set(1, 1, SignedEntry{0, Sign::Minus});
  Eigen::VectorXd psi(2);
  psi << 1.0, 0.0;
  const auto outcomes = simulate_drsp(m, ParameterVector(psi));
  REQUIRE(outcomes.size() == 2);
  for (const auto& o : outcomes) {
    CHECK(o.probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(o.fidelity >= 1.0 - kNumericTol);
  }
}

TEST_CASE("every outcome is uniform and exactly recoverable") {
  std::mt19937_64 rng(0x5eed0601);
  for (int n : {1, 2, 3}) {
    const auto witness = *feasibility(n).witness;
    const int N = 1 << n;
    for (int trial = 0; trial < 25; ++trial) {
      const ParameterVector psi(testing::random_unit(N, rng));
      const auto outcomes = simulate_drsp(witness, psi);
      REQUIRE(static_cast<int>(outcomes.size()) == N);
      double total = 0.0;
      for (const auto& o : outcomes) {
        CHECK(std::abs(o.probability - 1.0 / N) <= kNumericTol);
        CHECK(o.fidelity >= 1.0 - kNumericTol);
        total += o.probability;
      }
      CHECK(std::abs(total - 1.0) <= kNumericTol);
    }
  }
}

TEST_CASE("permuted constructions still prepare the state exactly") {
  std::mt19937_64 rng(0x5eed0605);
  for (int n : {1, 2, 3}) {
    const auto witness = *feasibility(n).witness;
    const int N = 1 << n;
    for (int trial = 0; trial < 10; ++trial) {
      const auto shuffled = testing::scrambled(witness, rng);
      REQUIRE(is_special_orthogonal(shuffled));
      const auto outcomes =
          simulate_drsp(shuffled, ParameterVector(testing::random_unit(N, rng)));
      for (const auto& o : outcomes) {
        CHECK(std::abs(o.probability - 1.0 / N) <= kNumericTol);
        CHECK(o.fidelity >= 1.0 - kNumericTol);
      }
    }
  }
}

TEST_CASE("negated matching operators recover the target from each column") {
  std::mt19937_64 rng(0x5eed0606);
  for (int n : {1, 2, 3}) {
    const auto witness = *feasibility(n).witness;
    const int N = 1 << n;
    const ParameterVector psi(testing::random_unit(N, rng));
    const Eigen::MatrixXd g = instantiate(witness, psi);
    const auto divisions = compute_divisions(witness);
    for (int i = 1; i < N; ++i) {
      const auto rec = negate(operator_from_division(divisions.rows[i - 1]));
      const Eigen::VectorXd recovered = sorth::apply(rec, Eigen::VectorXd(g.col(i)));
      CHECK((recovered - psi.values()).cwiseAbs().maxCoeff() <= kNumericTol);
    }
  }
}

TEST_CASE("mismatched state length is rejected") {
  const auto witness = *feasibility(2).witness;
  Eigen::VectorXd psi(2);
  psi << 1.0, 0.0;
  CHECK_THROWS_AS(simulate_drsp(witness, ParameterVector(psi)),
                  DimensionMismatch);
}

TEST_CASE("an invalid basis matrix is rejected") {
  SymbolicMatrix bad(1, Mode::Special);
  bad.set(0, 0, SignedEntry{0, Sign::Plus});
  bad.set(1, 0, SignedEntry{1, Sign::Plus});
  bad.set(0, 1, SignedEntry{1, Sign::Plus});
  bad.set(1, 1, SignedEntry{0, Sign::Plus});
  Eigen::VectorXd psi(2);
  psi << 0.6, 0.8;
  CHECK_THROWS_AS(simulate_drsp(bad, ParameterVector(psi)), InvalidMatrix);
}

TEST_CASE("simulation stops at three qubits") {
  const SymbolicMatrix too_big(4, Mode::Special);
  std::mt19937_64 rng(0x5eed0604);
  const ParameterVector psi(testing::random_unit(16, rng));
  CHECK_THROWS_AS(simulate_drsp(too_big, psi), InvalidMatrix);
}

TEST_CASE("zero phases reduce to plain orthogonality") {
  const auto witness = *feasibility(2).witness;
  Eigen::VectorXd p(4);
  p << 0.5, 0.5, 0.5, 0.5;
  const std::vector<double> phases(4, 0.0);
  CHECK(phase_equivalence_check(witness, ParameterVector(p), phases));
}

TEST_CASE("random phases keep every witness unitary") {
  std::mt19937_64 rng(0x5eed0602);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  for (int n : {1, 2, 3}) {
    const auto witness = *feasibility(n).witness;
    const int N = 1 << n;
    for (int trial = 0; trial < 25; ++trial) {
      const ParameterVector p(testing::random_unit(N, rng));
      std::vector<double> phases(N);
      for (auto& v : phases) v = angle(rng);
      const auto report = phase_check(instantiate(witness, p), phases);
      CHECK(report.ok);
      CHECK(report.unitarity_residual <= kNumericTol);
      CHECK(report.factorization_residual <= kNumericTol);
    }
  }
}

TEST_CASE("phases cannot rescue a non-orthogonal base") {
  Eigen::MatrixXd base(2, 2);
  base << 1.0, 1.0, 0.0, 0.0;
  const std::vector<double> phases{0.3, -1.2};
  CHECK(!phase_check(base, phases).ok);
}

TEST_CASE("phased solvability tracks the unphased verdict") {
  std::mt19937_64 rng(0x5eed0603);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  for (int n : {1, 2, 3}) {
    const auto semi = testing::scrambled(ordered_type(n), rng);
    const auto solved = find_solution(semi);
    REQUIRE(solved.found);  // phased form exists exactly when this holds
    const int N = 1 << n;
    const ParameterVector p(testing::random_unit(N, rng));
    std::vector<double> phases(N);
    for (auto& v : phases) v = angle(rng);
    CHECK(phase_equivalence_check(*solved.matrix, p, phases));
  }
}
