#pragma once

#include <cstdint>
#include <vector>

#include "sorth/gf2.hpp"
#include "sorth/symbolic_matrix.hpp"

namespace sorth {

/// Ground-truth searches, kept deliberately independent of the equation
/// compiler and the elimination path: signs are materialized per assignment
/// and every column pair is checked against the 2-tuple exchange-and-negate
/// condition directly.

struct SignSearch {
  std::uint64_t count = 0;
  /// Valid assignments, one byte per couple variable, in lexicographic bit
  /// order (variable 0 most significant).
  std::vector<std::vector<std::uint8_t>> witnesses;
};

/// Tries all 2^{N(N-1)/2} couple-sign assignments of a semi-orthogonal
/// matrix. Throws TooLarge when the variable count exceeds max_variables.
SignSearch brute_force_signs(const SymbolicMatrix& m, int max_variables = 28);

struct Gf2Search {
  bool consistent = false;
  std::vector<std::vector<std::uint8_t>> solutions;  // lexicographic order
};

/// Tries all assignments of a GF(2) system. Throws TooLarge when the
/// variable count exceeds max_variables.
Gf2Search brute_force_gf2(const Gf2System& sys, int max_variables = 20);

}  // namespace sorth
