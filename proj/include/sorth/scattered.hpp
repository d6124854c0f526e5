#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sorth/symbolic_matrix.hpp"

namespace sorth {

/// A row-pair exchange with a negation pointer. Stored normalized with
/// lo < hi; value 0 negates the row landing at lo, value 1 the row landing
/// at hi. A reversed reading flips the value: <j,i> = <i,j> ^ 1.
struct Couple {
  std::int32_t lo = 0;
  std::int32_t hi = 0;
  std::optional<bool> value;  // nullopt while the negation side is undecided

  /// Normalizes (i, j, v): if i > j the pair is swapped and v flipped.
  static Couple make(int i, int j, std::optional<bool> v);

  int partner(int row) const { return row == lo ? hi : lo; }

  /// The value read when traversing the couple starting from `row`.
  std::optional<bool> value_from(int row) const {
    if (!value.has_value()) return std::nullopt;
    return row == lo ? *value : !*value;
  }

  friend bool operator==(const Couple&, const Couple&) = default;
};

/// N/2 disjoint couples covering the row set of one matching operation.
/// Couples are kept sorted by lo; their position in that order is the
/// serial number used when numbering equation variables.
class Division {
 public:
  Division(int order, std::vector<Couple> couples);

  int order() const noexcept { return order_; }
  std::span<const Couple> couples() const noexcept { return couples_; }

  int partner(int row) const { return couples_[slot_[row]].partner(row); }
  const Couple& couple_containing(int row) const { return couples_[slot_[row]]; }
  int serial_of(int row) const { return slot_[row]; }
  bool contains_pair(int i, int j) const;

  friend bool operator==(const Division&, const Division&) = default;

 private:
  int order_;
  std::vector<Couple> couples_;
  std::vector<std::int32_t> slot_;  // row -> index into couples_
};

/// A square matrix with exactly one nonzero per row and column, the nonzero
/// being +-1. Held as (permutation, signs): row r carries sign[r] at column
/// perm[r], so (Mv)_r = sign[r] * v[perm[r]]. Sign-free operators (plain
/// permutations) leave `signs` empty.
struct ScatteredMatrix {
  std::vector<std::int32_t> perm;
  std::optional<std::vector<std::int8_t>> signs;

  int order() const noexcept { return static_cast<int>(perm.size()); }
  int sign_at(int row) const { return signs ? (*signs)[row] : 1; }

  friend bool operator==(const ScatteredMatrix&, const ScatteredMatrix&) = default;
};

/// Realizes a division as its matching operator (signed when the couples
/// carry values, a semi-matching operator when none do).
ScatteredMatrix operator_from_division(const Division& d);

/// Inverse of operator_from_division. Requires a fixed-point-free involution.
Division division_of(const ScatteredMatrix& m);

Eigen::VectorXd apply(const ScatteredMatrix& m, const Eigen::VectorXd& v);
Eigen::VectorXcd apply(const ScatteredMatrix& m, const Eigen::VectorXcd& v);
std::vector<SignedEntry> apply(const ScatteredMatrix& m,
                               std::span<const SignedEntry> v);

/// Matrix product a * b. A sign-free factor acts as an all-plus matrix, so
/// the result is signed unless both factors are sign-free.
ScatteredMatrix compose(const ScatteredMatrix& a, const ScatteredMatrix& b);

ScatteredMatrix negate(const ScatteredMatrix& m);

/// Conjugation by a permutation pi of the row labels: rows/columns are
/// relabeled so that couples <i,j> become <pi(i), pi(j)>.
ScatteredMatrix conjugate(const ScatteredMatrix& m, std::span<const std::int32_t> pi);

/// Anti-symmetric test: signed, no fixed point, sign[perm[r]] == -sign[r].
bool is_matching_operator(const ScatteredMatrix& m);

/// Symmetric zero-diagonal test: fixed-point-free involution, no minus signs.
bool is_semi_matching_operator(const ScatteredMatrix& m);

/// Two matching operators cooperate iff their product is again one.
bool cooperates(const ScatteredMatrix& a, const ScatteredMatrix& b);
bool semi_cooperates(const ScatteredMatrix& a, const ScatteredMatrix& b);

Eigen::MatrixXd dense(const ScatteredMatrix& m);
ScatteredMatrix from_dense(const Eigen::MatrixXd& m);

}  // namespace sorth
