#include "sorth/drsp.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "sorth/scattered.hpp"

namespace sorth {

namespace {

// The agreed, value-independent recovery for outcome i: the inverse of the
// signed permutation that produces column i from the target coefficients.
// On a matrix whose first column lists the coefficients in order this is
// exactly the negated matching operator of column i.
ScatteredMatrix recovery_for_column(const SymbolicMatrix& s, int col) {
  ScatteredMatrix op;
  op.perm.assign(s.order(), 0);
  op.signs.emplace(s.order(), 1);
  for (int r = 0; r < s.order(); ++r) {
    const SignedEntry& e = s(r, col);
    op.perm[e.index] = r;
    (*op.signs)[e.index] = e.sign == Sign::Minus ? -1 : 1;
  }
  return op;
}

}  // namespace

std::vector<Outcome> simulate_drsp(const SymbolicMatrix& special,
                                   const ParameterVector& psi) {
  const int n = special.qubits();
  const int N = special.order();
  if (n > 3)
    throw InvalidMatrix("simulation is limited to 3 qubits; no valid matrix "
                        "exists beyond that");
  if (psi.size() != N)
    throw DimensionMismatch("state has " + std::to_string(psi.size()) +
                            " amplitudes, matrix order is " + std::to_string(N));
  if (!is_special_orthogonal(special))
    throw InvalidMatrix("measurement basis requires a special orthogonal matrix");

  const Eigen::MatrixXd basis = instantiate(special, psi);
  // Basis columns must be pairwise orthonormal before they can be measured.
  const double basis_residual =
      (basis.transpose() * basis - Eigen::MatrixXd::Identity(N, N))
          .cwiseAbs()
          .maxCoeff();
  if (basis_residual > kNumericTol)
    throw InvalidMatrix("measurement basis fails orthonormality by " +
                        std::to_string(basis_residual));

  // One shared Bell pair per qubit slot: amplitude 1/sqrt(N) on every basis
  // state whose sender half (high bits) equals its receiver half (low bits).
  Eigen::VectorXcd total = Eigen::VectorXcd::Zero(Eigen::Index{1} << (2 * n));
  const double amp = 1.0 / std::sqrt(static_cast<double>(N));
  for (int x = 0; x < N; ++x) total[(x << n) | x] = amp;

  const Eigen::VectorXcd target = psi.values().cast<std::complex<double>>();

  std::vector<Outcome> outcomes(N);
  for (int i = 0; i < N; ++i) {
    // Project the sender register onto basis column i; what remains is the
    // receiver's unnormalized branch.
    Eigen::VectorXcd branch = Eigen::VectorXcd::Zero(N);
    for (int y = 0; y < N; ++y) {
      std::complex<double> acc = 0.0;
      for (int x = 0; x < N; ++x)
        acc += std::conj(std::complex<double>(basis(x, i))) *
               total[(x << n) | y];
      branch[y] = acc;
    }
    const double probability = branch.squaredNorm();
    outcomes[i].probability = probability;
    if (probability <= 0.0) continue;
    branch /= std::sqrt(probability);

    const Eigen::VectorXcd recovered =
        sorth::apply(recovery_for_column(special, i), branch);
    const std::complex<double> overlap = target.dot(recovered);
    outcomes[i].fidelity = std::norm(overlap);
  }
  return outcomes;
}

Eigen::MatrixXcd phased_columns(const Eigen::MatrixXd& base,
                                std::span<const double> phases) {
  if (static_cast<Eigen::Index>(phases.size()) != base.cols())
    throw DimensionMismatch("one phase per column required");
  Eigen::MatrixXcd out = base.cast<std::complex<double>>();
  for (Eigen::Index c = 0; c < out.cols(); ++c)
    out.col(c) *= std::exp(std::complex<double>(0.0, phases[c]));
  return out;
}

PhaseCheckReport phase_check(const Eigen::MatrixXd& base,
                             std::span<const double> phases) {
  const Eigen::MatrixXcd phased = phased_columns(base, phases);
  const Eigen::Index N = base.cols();
  PhaseCheckReport report;
  report.unitarity_residual =
      (phased.adjoint() * phased - Eigen::MatrixXcd::Identity(N, N))
          .cwiseAbs()
          .maxCoeff();
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < N; ++j) {
      const std::complex<double> lhs = phased.col(i).dot(phased.col(j));
      const std::complex<double> rhs =
          std::exp(std::complex<double>(0.0, phases[j] - phases[i])) *
          base.col(i).dot(base.col(j));
      report.factorization_residual =
          std::max(report.factorization_residual, std::abs(lhs - rhs));
    }
  }
  report.ok = report.unitarity_residual <= kNumericTol &&
              report.factorization_residual <= kNumericTol;
  return report;
}

bool phase_equivalence_check(const SymbolicMatrix& special,
                             const ParameterVector& p,
                             std::span<const double> phases) {
  if (!is_special_orthogonal(special))
    throw InvalidMatrix("phase check requires a special orthogonal matrix");
  return phase_check(instantiate(special, p), phases).ok;
}

}  // namespace sorth
