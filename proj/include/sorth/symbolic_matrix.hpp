#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "sorth/errors.hpp"

namespace sorth {

/// Tolerance for every floating-point check in the library: unit norms,
/// orthogonality residuals, probabilities and fidelities.
inline constexpr double kNumericTol = 1e-12;

enum class Sign : std::int8_t { Minus = -1, Unknown = 0, Plus = 1 };

inline Sign flip(Sign s) {
  return s == Sign::Unknown ? Sign::Unknown
                            : (s == Sign::Plus ? Sign::Minus : Sign::Plus);
}

/// One cell of a symbolic matrix: the parameter index k of a_k plus an
/// optional sign. Semi matrices carry Unknown everywhere, finished matrices
/// carry definite signs.
struct SignedEntry {
  std::int32_t index = 0;
  Sign sign = Sign::Unknown;

  friend bool operator==(const SignedEntry&, const SignedEntry&) = default;
};

enum class Mode { Semi, Special };

/// An N x N grid of parameter indices with optional signs, N = 2^n. Columns
/// are stored contiguously. Construction only checks bounds; orthogonality
/// predicates are free functions below.
class SymbolicMatrix {
 public:
  SymbolicMatrix(int qubits, Mode mode);

  int qubits() const noexcept { return qubits_; }
  int order() const noexcept { return order_; }
  Mode mode() const noexcept { return mode_; }

  const SignedEntry& operator()(int row, int col) const {
    return cells_[static_cast<std::size_t>(col) * order_ + row];
  }
  void set(int row, int col, SignedEntry e);

  std::span<const SignedEntry> column(int col) const {
    return {cells_.data() + static_cast<std::size_t>(col) * order_,
            static_cast<std::size_t>(order_)};
  }

  friend bool operator==(const SymbolicMatrix&, const SymbolicMatrix&) = default;

 private:
  int qubits_;
  int order_;
  Mode mode_;
  std::vector<SignedEntry> cells_;
};

/// Real parameter vector (a_0, ..., a_{N-1}) with unit Euclidean norm.
class ParameterVector {
 public:
  explicit ParameterVector(Eigen::VectorXd values);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  const Eigen::VectorXd& values() const noexcept { return values_; }
  double operator[](int i) const { return values_[i]; }

 private:
  Eigen::VectorXd values_;
};

/// Throws MalformedMatrix unless every column's index multiset is exactly
/// {0, ..., N-1}.
void require_permutation_columns(const SymbolicMatrix& m);

/// True iff for every column pair the rows split into 2-tuples whose
/// parameter indices are exactly swapped between the two columns. Signs are
/// ignored. Throws MalformedMatrix if some column is not a permutation.
bool is_semi_orthogonal(const SymbolicMatrix& m);

/// True iff the exchange condition holds and, within every paired row
/// 2-tuple, exactly one of the two products flips sign. Requires Special
/// mode with definite signs everywhere (MalformedMatrix otherwise).
bool is_special_orthogonal(const SymbolicMatrix& m);

/// Substitutes parameter values: result(r, c) = sign * p[index]. Requires
/// Special mode. Does not itself check orthogonality.
Eigen::MatrixXd instantiate(const SymbolicMatrix& m, const ParameterVector& p);

/// Drops all signs and returns the Semi-mode skeleton.
SymbolicMatrix strip_signs(const SymbolicMatrix& m);

}  // namespace sorth
