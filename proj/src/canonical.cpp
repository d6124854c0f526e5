#include "sorth/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sorth {

SymbolicMatrix ordered_type(int qubits) {
  SymbolicMatrix m(qubits, Mode::Semi);
  for (int c = 0; c < m.order(); ++c)
    for (int r = 0; r < m.order(); ++r)
      m.set(r, c, SignedEntry{r ^ c, Sign::Unknown});
  return m;
}

GeneratorSet::GeneratorSet(std::vector<ScatteredMatrix> ops)
    : ops_(std::move(ops)) {
  if (ops_.empty()) throw NotCooperative("generator set is empty");
  const int n = static_cast<int>(ops_.size());
  const int order = 1 << n;
  for (int i = 0; i < n; ++i) {
    if (ops_[i].order() != order)
      throw NotCooperative("generator " + std::to_string(i + 1) +
                           " has order " + std::to_string(ops_[i].order()) +
                           ", expected " + std::to_string(order));
    if (!is_semi_matching_operator(ops_[i]))
      throw NotCooperative("generator " + std::to_string(i + 1) +
                           " is not a semi-matching operator");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!semi_cooperates(ops_[i], ops_[j]))
        throw NotCooperative("generators " + std::to_string(i + 1) + " and " +
                             std::to_string(j + 1) + " do not semi-cooperate");
}

GeneratorSet GeneratorSet::canonical(int qubits) {
  const int order = 1 << qubits;
  std::vector<ScatteredMatrix> ops;
  ops.reserve(qubits);
  for (int m = 0; m < qubits; ++m) {
    ScatteredMatrix op;
    op.perm.resize(order);
    for (int r = 0; r < order; ++r) op.perm[r] = r ^ (1 << m);
    ops.push_back(std::move(op));
  }
  return GeneratorSet(std::move(ops));
}

bool is_ordered_table(const MappingTable& table, const GeneratorSet& g) {
  const int order = g.order();
  if (static_cast<int>(table.t.size()) != order) return false;
  std::vector<char> seen(order, 0);
  for (int v : table.t) {
    if (v < 0 || v >= order || seen[v]) return false;
    seen[v] = 1;
  }
  for (int m = 1; m <= g.qubits(); ++m) {
    const ScatteredMatrix& op = g.ops()[m - 1];
    const int half = 1 << (m - 1);
    for (int a = 0; a < order; a += 2 * half)
      for (int i = a; i < a + half; ++i)
        if (op.perm[table.t[i]] != table.t[i + half]) return false;
  }
  return true;
}

namespace {

// Swaps t[x .. x+len) with t[y .. y+len) as wholes.
void swap_ranges_at(std::vector<std::int32_t>& t, int x, int y, int len) {
  for (int i = 0; i < len; ++i) std::swap(t[x + i], t[y + i]);
}

}  // namespace

MappingTable order_mapping_table(const GeneratorSet& g) {
  const int n = g.qubits();
  const int order = g.order();
  std::vector<std::int32_t> t(order);
  std::iota(t.begin(), t.end(), 0);
  std::vector<std::int32_t> pos(order);

  auto refresh_pos = [&] {
    for (int p = 0; p < order; ++p) pos[t[p]] = p;
  };

  for (int m = 1; m <= n; ++m) {
    const ScatteredMatrix& op = g.ops()[m - 1];
    const int bs = 1 << (m - 1);
    const int nblocks = order / bs;
    refresh_pos();

    // Pair the current blocks under the generator's set action.
    std::vector<int> image(nblocks);
    for (int blk = 0; blk < nblocks; ++blk) {
      const int target = pos[op.perm[t[blk * bs]]] / bs;
      if (target == blk)
        throw NotGeneratorSet("generator " + std::to_string(m) +
                              " maps a block to itself; it is dependent on "
                              "the earlier generators");
      for (int off = 1; off < bs; ++off)
        if (pos[op.perm[t[blk * bs + off]]] / bs != target)
          throw NotGeneratorSet("generator " + std::to_string(m) +
                                " shears a block of the earlier generators");
      image[blk] = target;
    }

    // Lay paired blocks adjacent, keeping the encounter order.
    std::vector<std::int32_t> next;
    next.reserve(order);
    std::vector<char> placed(nblocks, 0);
    for (int blk = 0; blk < nblocks; ++blk) {
      if (placed[blk]) continue;
      placed[blk] = placed[image[blk]] = 1;
      next.insert(next.end(), t.begin() + blk * bs, t.begin() + (blk + 1) * bs);
      next.insert(next.end(), t.begin() + image[blk] * bs,
                  t.begin() + (image[blk] + 1) * bs);
    }
    t = std::move(next);
    refresh_pos();

    // Rotate sub-blocks of each second half until its leftmost element is
    // the image of the first half's leftmost element.
    for (int q = 0; q < order; q += 2 * bs) {
      const int j = op.perm[t[q]];
      if (t[q + bs] == j) continue;
      int k = bs;
      while (k > 1) {
        if (pos[j] >= q + bs + k / 2) {
          for (int s = q + bs; s < q + 2 * bs; s += k)
            swap_ranges_at(t, s, s + k / 2, k / 2);
          refresh_pos();
        }
        k /= 2;
      }
      if (t[q + bs] != j)
        throw NotGeneratorSet("block ordering failed to align leftmost "
                              "elements for generator " + std::to_string(m));
    }
  }
  return MappingTable{std::move(t)};
}

Simplification simplify_to_ordered(const SymbolicMatrix& m) {
  if (!is_semi_orthogonal(m))
    throw NotSemiOrthogonal("input matrix is not semi-orthogonal");
  const int order = m.order();
  const DivisionTable divisions = compute_divisions(m);

  // Column whose operator pairs row 0 with row v, for every v.
  std::vector<int> column_of(order, -1);
  std::vector<ScatteredMatrix> pairing(order);
  for (int c = 1; c < order; ++c) {
    std::vector<Couple> bare;
    bare.reserve(order / 2);
    for (const Couple& cp : divisions.rows[c - 1].couples())
      bare.push_back(Couple{cp.lo, cp.hi, std::nullopt});
    pairing[c] = operator_from_division(Division(order, std::move(bare)));
    const int v = pairing[c].perm[0];
    if (column_of[v] != -1)
      throw NotSemiOrthogonal("two columns pair row 0 with row " +
                              std::to_string(v));
    column_of[v] = c;
  }

  // Greedy independent generators: always take the operator pairing row 0
  // with the smallest row outside the current subgroup orbit of 0.
  std::vector<char> in_orbit(order, 0);
  in_orbit[0] = 1;
  std::vector<int> orbit{0};
  std::vector<ScatteredMatrix> gens;
  while (static_cast<int>(orbit.size()) < order) {
    int v = 1;
    while (in_orbit[v]) ++v;
    const ScatteredMatrix& gen = pairing[column_of[v]];
    const std::size_t had = orbit.size();
    for (std::size_t i = 0; i < had; ++i) {
      const int u = gen.perm[orbit[i]];
      if (!in_orbit[u]) {
        in_orbit[u] = 1;
        orbit.push_back(u);
      }
    }
    gens.push_back(gen);
  }

  const MappingTable table = order_mapping_table(GeneratorSet(std::move(gens)));
  if (table.t[0] != 0)
    throw std::logic_error("mapping table displaced position 0");
  std::vector<std::int32_t> pos(order);
  for (int p = 0; p < order; ++p) pos[table.t[p]] = p;

  Simplification out;
  out.row = table.t;
  out.col.assign(order, 0);
  for (int c = 1; c < order; ++c) out.col[pos[pairing[c].perm[0]]] = c;
  return out;
}

SymbolicMatrix apply_simplification(const SymbolicMatrix& m,
                                    const Simplification& s) {
  if (static_cast<int>(s.row.size()) != m.order() ||
      static_cast<int>(s.col.size()) != m.order())
    throw DimensionMismatch("simplification size vs matrix order");
  SymbolicMatrix out(m.qubits(), m.mode());
  for (int c = 0; c < m.order(); ++c)
    for (int r = 0; r < m.order(); ++r)
      out.set(r, c, m(s.row[r], s.col[c]));
  return out;
}

Feasibility feasibility(int qubits) {
  if (qubits <= 3) {
    SolveResult r = find_solution(ordered_type(qubits));
    return Feasibility{r.found, std::move(r.matrix), r.elimination};
  }
  // The order-16 verdict anchors every larger order: solvability of order N
  // forces solvability of the order-N/2 upper-left block, chaining down to
  // a block the solver rules out. Computed once.
  static const Feasibility order16 = [] {
    SolveResult r = find_solution(ordered_type(4));
    return Feasibility{r.found, std::move(r.matrix), r.elimination};
  }();
  if (order16.feasible)
    throw std::logic_error("order-16 anchor unexpectedly solvable");
  if (qubits == 4) return order16;
  return Feasibility{};
}

}  // namespace sorth
