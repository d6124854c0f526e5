#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sorth/gf2.hpp"
#include "sorth/scattered.hpp"
#include "sorth/symbolic_matrix.hpp"

namespace sorth {

/// Row m-1 holds the division pairing column m with column 0. Couple values
/// are unknown for Semi inputs and recovered from signs for Special ones.
struct DivisionTable {
  int order = 0;
  std::vector<Division> rows;
};

/// Total number of couple variables: N(N-1)/2.
int variable_count(int order);

/// Column of the variable for couple number `serial` of operator `op`
/// (0-based, operator op pairs column op+1 with column 0): op * N/2 + serial.
int variable_index(int order, int op, int serial);

/// Extracts all divisions by pairing each column against column 0, using a
/// hash of column-0 indices for O(1) row lookup. Throws NotSemiOrthogonal
/// when some index cannot be paired.
DivisionTable compute_divisions(const SymbolicMatrix& m);

/// Emits one matching equation per 4-tuple of every operator pair (a, b),
/// a < b: four 1-bits at the traversed couples' variable columns and a
/// constant of 1 XOR (reversed traversals mod 2). Shape is
/// N(N-1)(N-2)/8 x (N(N-1)/2 + 1). Throws BrokenPath when a 4-tuple fails
/// to close, which means the table is not from a semi-orthogonal matrix.
Gf2System build_equations(const DivisionTable& t);

/// Materializes the signs chosen by solution x onto m's skeleton: column 0
/// all-positive; per couple <lo,hi> with value v, row hi of column j takes
/// (-1)^v times column 0's lo entry and row lo takes (-1)^{v^1} times the
/// hi entry. The result is re-validated (SolutionMismatch on failure).
SymbolicMatrix assign_signs(const SymbolicMatrix& m, const DivisionTable& t,
                            std::span<const std::uint8_t> x);

/// Couple values of a table with known values, flattened per variable_index.
std::vector<std::uint8_t> assignment_of(const DivisionTable& t);

struct SolveResult {
  bool found = false;
  std::optional<SymbolicMatrix> matrix;
  Gf2Solution elimination;
};

/// The whole pipeline: divisions, matching equations, XOR elimination, sign
/// assignment. `found` iff the equation system is consistent.
SolveResult find_solution(const SymbolicMatrix& m);

/// One "var op lo hi" line per variable, for sidecar dumps.
std::string variable_legend(const DivisionTable& t);

}  // namespace sorth
