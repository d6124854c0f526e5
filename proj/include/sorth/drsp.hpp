#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "sorth/symbolic_matrix.hpp"

namespace sorth {

struct Outcome {
  double probability = 0.0;
  double fidelity = 0.0;
};

/// State-vector run of the preparation protocol over n Bell pairs, n <= 3.
/// The sender's qubits are the high-order tensor factors, the receiver's
/// the low-order ones. The measurement basis is the instantiation of
/// `special` with psi's coefficients; every branch is evaluated exactly.
/// For outcome i the receiver applies the agreed signed permutation that
/// undoes column i (the negated matching operator, when the first column
/// lists the coefficients in order); fidelity is the squared overlap.
std::vector<Outcome> simulate_drsp(const SymbolicMatrix& special,
                                   const ParameterVector& psi);

/// Column i of `base` multiplied by e^{i phases[i]}.
Eigen::MatrixXcd phased_columns(const Eigen::MatrixXd& base,
                                std::span<const double> phases);

struct PhaseCheckReport {
  double unitarity_residual = 0.0;      // max-norm of P^dagger P - I
  double factorization_residual = 0.0;  // worst pairwise mismatch of
                                        // s_i^dagger s_j versus
                                        // e^{i(phi_j - phi_i)} (b_i . b_j)
  bool ok = false;                      // both residuals within kNumericTol
};

/// Numeric core of the phase-extension check for an arbitrary base matrix.
PhaseCheckReport phase_check(const Eigen::MatrixXd& base,
                             std::span<const double> phases);

/// True iff the column-phased instantiation of `special` stays unitary and
/// the inner-product factorization holds pairwise; always true for a valid
/// special orthogonal matrix. Throws InvalidMatrix when `special` fails
/// validation.
bool phase_equivalence_check(const SymbolicMatrix& special,
                             const ParameterVector& p,
                             std::span<const double> phases);

}  // namespace sorth
