#include "sorth/symbolic_matrix.hpp"

#include <cmath>
#include <string>

namespace sorth {
namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Row of column `col` holding parameter index k, as a lookup table.
std::vector<std::int32_t> rows_by_index(const SymbolicMatrix& m, int col) {
  std::vector<std::int32_t> where(m.order(), -1);
  for (int r = 0; r < m.order(); ++r) where[m(r, col).index] = r;
  return where;
}

}  // namespace

SymbolicMatrix::SymbolicMatrix(int qubits, Mode mode)
    : qubits_(qubits), order_(1 << qubits), mode_(mode) {
  // The dense N x N grid rules out large n; existence questions beyond the
  // solver's reach are settled without materializing a matrix.
  if (qubits < 1 || qubits > 10)
    throw MalformedMatrix("qubit count must be in [1, 10], got " +
                          std::to_string(qubits));
  cells_.assign(static_cast<std::size_t>(order_) * order_,
                SignedEntry{0, mode == Mode::Semi ? Sign::Unknown : Sign::Plus});
}

void SymbolicMatrix::set(int row, int col, SignedEntry e) {
  if (row < 0 || row >= order_ || col < 0 || col >= order_)
    throw MalformedMatrix("cell (" + std::to_string(row) + ", " +
                          std::to_string(col) + ") out of range");
  if (e.index < 0 || e.index >= order_)
    throw MalformedMatrix("parameter index " + std::to_string(e.index) +
                          " out of range for order " + std::to_string(order_));
  if (mode_ == Mode::Semi && e.sign != Sign::Unknown)
    throw MalformedMatrix("semi matrices carry no signs");
  cells_[static_cast<std::size_t>(col) * order_ + row] = e;
}

ParameterVector::ParameterVector(Eigen::VectorXd values)
    : values_(std::move(values)) {
  if (values_.size() == 0 || !power_of_two(static_cast<int>(values_.size())))
    throw NonUnitParameters("parameter count must be a positive power of two");
  if (std::abs(values_.norm() - 1.0) > kNumericTol)
    throw NonUnitParameters("parameter vector norm deviates from 1 by " +
                            std::to_string(std::abs(values_.norm() - 1.0)));
}

void require_permutation_columns(const SymbolicMatrix& m) {
  const int n = m.order();
  std::vector<char> seen(n);
  for (int c = 0; c < n; ++c) {
    seen.assign(n, 0);
    for (int r = 0; r < n; ++r) {
      const int k = m(r, c).index;
      if (k < 0 || k >= n || seen[k])
        throw MalformedMatrix("column " + std::to_string(c) +
                              " is not a permutation of the index set");
      seen[k] = 1;
    }
  }
}

bool is_semi_orthogonal(const SymbolicMatrix& m) {
  require_permutation_columns(m);
  const int n = m.order();
  for (int j = 1; j < n; ++j) {
    const auto where_j = rows_by_index(m, j);
    for (int i = 0; i < j; ++i) {
      for (int k = 0; k < n; ++k) {
        const int l = where_j[m(k, i).index];
        if (l == k) return false;                       // same index, same row
        if (m(l, i).index != m(k, j).index) return false;  // tuple not swapped
      }
    }
  }
  return true;
}

bool is_special_orthogonal(const SymbolicMatrix& m) {
  if (m.mode() != Mode::Special)
    throw MalformedMatrix("special-orthogonality applies to Special mode only");
  require_permutation_columns(m);
  const int n = m.order();
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (m(r, c).sign == Sign::Unknown)
        throw MalformedMatrix("special matrix has an unknown sign at (" +
                              std::to_string(r) + ", " + std::to_string(c) + ")");
  for (int j = 1; j < n; ++j) {
    const auto where_j = rows_by_index(m, j);
    for (int i = 0; i < j; ++i) {
      for (int k = 0; k < n; ++k) {
        const int l = where_j[m(k, i).index];
        if (l == k) return false;
        if (m(l, i).index != m(k, j).index) return false;
        // sigma_ki ^ sigma_kj must differ from sigma_li ^ sigma_lj.
        const bool flip_k = m(k, i).sign != m(k, j).sign;
        const bool flip_l = m(l, i).sign != m(l, j).sign;
        if (flip_k == flip_l) return false;
      }
    }
  }
  return true;
}

Eigen::MatrixXd instantiate(const SymbolicMatrix& m, const ParameterVector& p) {
  if (m.mode() != Mode::Special)
    throw MalformedMatrix("only Special matrices instantiate to numbers");
  if (p.size() != m.order())
    throw MalformedMatrix("parameter count " + std::to_string(p.size()) +
                          " does not match order " + std::to_string(m.order()));
  require_permutation_columns(m);
  const int n = m.order();
  Eigen::MatrixXd out(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const SignedEntry& e = m(r, c);
      if (e.sign == Sign::Unknown)
        throw MalformedMatrix("unknown sign at (" + std::to_string(r) + ", " +
                              std::to_string(c) + ")");
      out(r, c) = (e.sign == Sign::Plus ? 1.0 : -1.0) * p[e.index];
    }
  }
  return out;
}

SymbolicMatrix strip_signs(const SymbolicMatrix& m) {
  SymbolicMatrix out(m.qubits(), Mode::Semi);
  for (int c = 0; c < m.order(); ++c)
    for (int r = 0; r < m.order(); ++r)
      out.set(r, c, SignedEntry{m(r, c).index, Sign::Unknown});
  return out;
}

}  // namespace sorth
