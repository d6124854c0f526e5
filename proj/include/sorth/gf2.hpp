#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sorth/errors.hpp"

namespace sorth {

/// An R x C Boolean augmented matrix over GF(2), the constant column last.
/// Rows are packed into 64-bit words, trailing bits zero.
class Gf2System {
 public:
  Gf2System(int rows, int cols);

  /// Builds from dense 0/1 rows whose last entry is the constant term.
  /// Throws MalformedSystem on ragged input.
  static Gf2System from_rows(const std::vector<std::vector<std::uint8_t>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }  // including the constant column
  int vars() const noexcept { return cols_ - 1; }

  bool get(int r, int c) const {
    return (word(r, c / 64) >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v);

  void swap_rows(int a, int b);
  void xor_rows(int dst, int src);  // dst ^= src

  /// True iff assignment x (one byte per variable) satisfies equation r.
  bool row_satisfied(int r, std::span<const std::uint8_t> x) const;

  /// Hamming weight of the coefficient part of row r.
  int coefficient_weight(int r) const;

  /// Rows of '0'/'1' characters with '|' before the constant column.
  std::string dump() const;

 private:
  std::uint64_t word(int r, int w) const {
    return bits_[static_cast<std::size_t>(r) * words_per_row_ + w];
  }
  std::uint64_t& word(int r, int w) {
    return bits_[static_cast<std::size_t>(r) * words_per_row_ + w];
  }

  int rows_;
  int cols_;
  int words_per_row_;
  std::vector<std::uint64_t> bits_;
};

struct Gf2Solution {
  bool consistent = false;
  int rank_full = 0;   // rank of the augmented matrix
  int rank_coeff = 0;  // rank of the coefficient part
  std::optional<std::vector<std::uint8_t>> solution;  // one byte per variable
};

/// XOR Gaussian elimination on a private copy: forward pass with first-hit
/// pivots in column order, then full back-substitution to row simplest form.
/// The special solution sets every free variable to 0. The returned solution
/// is re-checked against the original system by substitution.
Gf2Solution eliminate_and_solve(const Gf2System& sys);

}  // namespace sorth
