#include "sorth/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace sorth {

namespace {

std::vector<std::uint8_t> unpack_assignment(std::uint64_t x, int vars) {
  // Variable 0 sits in the most significant bit, so ascending x is
  // lexicographic order on the unpacked vectors.
  std::vector<std::uint8_t> out(vars);
  for (int v = 0; v < vars; ++v)
    out[v] = static_cast<std::uint8_t>((x >> (vars - 1 - v)) & 1u);
  return out;
}

}  // namespace

SignSearch brute_force_signs(const SymbolicMatrix& m, int max_variables) {
  if (!is_semi_orthogonal(m))
    throw NotSemiOrthogonal("sign search needs a semi-orthogonal matrix");
  const int n = m.order();
  const int vars = n * (n - 1) / 2;
  if (vars > max_variables)
    throw TooLarge(std::to_string(vars) + " couple variables exceed the limit of " +
                   std::to_string(max_variables));
  const int bits_per_col = n / 2;

  // Row lookup per column: where_in[c][k] = row of column c holding index k.
  std::vector<std::vector<int>> where_in(n, std::vector<int>(n));
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) where_in[c][m(r, c).index] = r;

  // Couples of each column against column 0, rows ascending (lo < hi), in
  // the same serial order the equation variables use.
  std::vector<std::vector<std::pair<int, int>>> col_couples(n);
  for (int c = 1; c < n; ++c) {
    std::vector<char> done(n, 0);
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const int t = where_in[0][m(i, c).index];
      col_couples[c].push_back({i, t});
      done[i] = done[t] = 1;
    }
  }

  // Sign bitmask of a column for each packed chunk of its couple values.
  // Chunk bit (bits_per_col - 1 - serial) is the serial-th couple's value.
  const int chunk_count = 1 << bits_per_col;
  std::vector<std::vector<std::uint32_t>> sign_of_chunk(n);
  for (int c = 1; c < n; ++c) {
    sign_of_chunk[c].assign(chunk_count, 0);
    for (int chunk = 0; chunk < chunk_count; ++chunk) {
      std::uint32_t mask = 0;
      for (int s = 0; s < bits_per_col; ++s) {
        const auto [lo, hi] = col_couples[c][s];
        const bool v = (chunk >> (bits_per_col - 1 - s)) & 1;
        if (v)
          mask |= std::uint32_t{1} << hi;
        else
          mask |= std::uint32_t{1} << lo;
      }
      sign_of_chunk[c][chunk] = mask;
    }
  }
  std::vector<std::uint32_t> zero_chunk(chunk_count, 0);
  sign_of_chunk[0] = zero_chunk;

  // Per column pair, a pass/fail table keyed by both sign chunks. The table
  // itself is filled by the direct exchange-and-negate test of every row
  // 2-tuple of that pair.
  struct PairTest {
    int a, b;
    std::vector<char> ok;  // indexed by (chunk_a << bits_per_col) | chunk_b
  };
  std::vector<PairTest> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<std::pair<int, int>> tuples;  // (k, l): row k of a pairs row l
      std::vector<char> done(n, 0);
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        const int l = where_in[b][m(k, a).index];
        tuples.push_back({k, l});
        done[k] = done[l] = 1;
      }
      PairTest test{a, b, std::vector<char>(chunk_count * chunk_count, 0)};
      for (int ca = 0; ca < chunk_count; ++ca) {
        for (int cb = 0; cb < chunk_count; ++cb) {
          const std::uint32_t diff = sign_of_chunk[a][ca] ^ sign_of_chunk[b][cb];
          bool ok = true;
          for (const auto& [k, l] : tuples)
            if ((((diff >> k) ^ (diff >> l)) & 1u) == 0) {
              ok = false;
              break;
            }
          test.ok[(ca << bits_per_col) | cb] = ok;
        }
      }
      pairs.push_back(std::move(test));
    }
  }
  // Pairs against column 0 hold for every assignment by construction of the
  // sign masks; putting them last keeps the rejection loop short.
  std::stable_partition(pairs.begin(), pairs.end(),
                        [](const PairTest& p) { return p.a != 0; });

  const int col_count = n - 1;
  std::vector<int> shift(n, 0);
  for (int c = 1; c < n; ++c)
    shift[c] = vars - c * bits_per_col;  // chunk of column c in the integer
  const std::uint32_t chunk_mask = chunk_count - 1;

  SignSearch out;
  std::vector<int> chunk(n, 0);
  const std::uint64_t total = std::uint64_t{1} << vars;
  for (std::uint64_t x = 0; x < total; ++x) {
    for (int c = 1; c <= col_count; ++c)
      chunk[c] = static_cast<int>((x >> shift[c]) & chunk_mask);
    bool ok = true;
    for (const PairTest& p : pairs)
      if (!p.ok[(chunk[p.a] << bits_per_col) | chunk[p.b]]) {
        ok = false;
        break;
      }
    if (ok) {
      ++out.count;
      out.witnesses.push_back(unpack_assignment(x, vars));
    }
  }
  return out;
}

Gf2Search brute_force_gf2(const Gf2System& sys, int max_variables) {
  const int vars = sys.vars();
  if (vars > max_variables)
    throw TooLarge(std::to_string(vars) + " variables exceed the limit of " +
                   std::to_string(max_variables));
  // Row masks mirror the assignment packing (variable 0 most significant).
  std::vector<std::uint64_t> mask(sys.rows(), 0);
  std::vector<std::uint8_t> constant(sys.rows(), 0);
  for (int r = 0; r < sys.rows(); ++r) {
    for (int v = 0; v < vars; ++v)
      if (sys.get(r, v)) mask[r] |= std::uint64_t{1} << (vars - 1 - v);
    constant[r] = sys.get(r, sys.cols() - 1);
  }

  Gf2Search out;
  const std::uint64_t total = std::uint64_t{1} << vars;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (int r = 0; r < sys.rows(); ++r)
      if ((std::popcount(mask[r] & x) & 1) != constant[r]) {
        ok = false;
        break;
      }
    if (ok) out.solutions.push_back(unpack_assignment(x, vars));
  }
  out.consistent = !out.solutions.empty();
  return out;
}

}  // namespace sorth
