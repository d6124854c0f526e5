#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sorth/gf2.hpp"
#include "sorth/scattered.hpp"
#include "sorth/sign_solver.hpp"
#include "sorth/symbolic_matrix.hpp"

namespace sorth {

/// The canonical semi-orthogonal matrix of order 2^n: entry (r, c) carries
/// parameter index r XOR c.
SymbolicMatrix ordered_type(int qubits);

/// n semi-matching operators of order 2^n, pairwise semi-cooperative
/// (verified on construction; NotCooperative otherwise). Independence is
/// detected later, while ordering a mapping table.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<ScatteredMatrix> ops);

  /// XOR-by-2^{m-1} operators, the generator set of the ordered type.
  static GeneratorSet canonical(int qubits);

  int qubits() const noexcept { return static_cast<int>(ops_.size()); }
  int order() const noexcept { return ops_.front().order(); }
  std::span<const ScatteredMatrix> ops() const noexcept { return ops_; }

 private:
  std::vector<ScatteredMatrix> ops_;
};

/// A permutation of [N] laying out the generators' nested block structure:
/// t[p] is the row index at position p.
struct MappingTable {
  std::vector<std::int32_t> t;
};

/// Blockwise n-ordered predicate: for every m and every 2^m-aligned block,
/// generator m maps t[i] to t[i + 2^{m-1}] across the block's two halves.
bool is_ordered_table(const MappingTable& table, const GeneratorSet& g);

/// Orders a mapping table by pairing blocks level by level and rotating
/// sub-blocks until leftmost elements map to leftmost elements. Throws
/// NotGeneratorSet when a generator maps a block to itself or shears one,
/// both of which mean the set does not generate a full group.
MappingTable order_mapping_table(const GeneratorSet& g);

/// Row/column permutations bringing a semi-orthogonal matrix to the ordered
/// type: output cell (r, c) takes input cell (row[r], col[c]). After
/// renaming the first output column's indices to 0..N-1 in row order, the
/// output has index r XOR c everywhere.
struct Simplification {
  std::vector<std::int32_t> row;
  std::vector<std::int32_t> col;
};

Simplification simplify_to_ordered(const SymbolicMatrix& m);

/// Applies a Simplification, carrying signs and mode through.
SymbolicMatrix apply_simplification(const SymbolicMatrix& m,
                                    const Simplification& s);

struct Feasibility {
  bool feasible = false;
  std::optional<SymbolicMatrix> witness;
  std::optional<Gf2Solution> elimination;  // absent for the n > 4 shortcut
};

/// Whether an order-2^n construction exists. Solves the ordered type for
/// n <= 4; for n > 4 the verdict is infeasible because every solvable order
/// would force a solvable order-16 upper-left block, and order 16 has none.
Feasibility feasibility(int qubits);

}  // namespace sorth
