#include "sorth/sign_solver.hpp"

#include <sstream>

namespace sorth {

int variable_count(int order) { return order * (order - 1) / 2; }

int variable_index(int order, int op, int serial) {
  return op * (order / 2) + serial;
}

DivisionTable compute_divisions(const SymbolicMatrix& m) {
  require_permutation_columns(m);
  const int n = m.order();
  std::vector<std::int32_t> row_of_index(n);  // within column 0
  for (int r = 0; r < n; ++r) row_of_index[m(r, 0).index] = r;

  DivisionTable out;
  out.order = n;
  out.rows.reserve(n - 1);
  std::vector<char> coupled(n);
  for (int j = 1; j < n; ++j) {
    coupled.assign(n, 0);
    std::vector<Couple> couples;
    couples.reserve(n / 2);
    for (int i = 0; i < n; ++i) {
      if (coupled[i]) continue;
      const int t = row_of_index[m(i, j).index];
      if (t == i || coupled[t] || m(t, j).index != m(i, 0).index)
        throw NotSemiOrthogonal("columns 0 and " + std::to_string(j) +
                                " leave row " + std::to_string(i) + " unpaired");
      std::optional<bool> value;
      if (m.mode() == Mode::Special) {
        if (m(t, j).sign == Sign::Unknown || m(i, 0).sign == Sign::Unknown)
          throw MalformedMatrix("special matrix has unknown signs");
        value = m(t, j).sign != m(i, 0).sign;  // S[t][j] == -S[i][0]
      }
      couples.push_back(Couple{i, t, value});
      coupled[i] = coupled[t] = 1;
    }
    out.rows.emplace_back(n, std::move(couples));
  }
  return out;
}

namespace {

// Directed couple lookup: returns the partner of `from` in division d and
// flips *c when the traversal runs against the stored lo < hi orientation.
int traverse(const Division& d, int from, bool* c) {
  const Couple& couple = d.couple_containing(from);
  if (from == couple.hi) *c = !*c;
  return couple.partner(from);
}

}  // namespace

Gf2System build_equations(const DivisionTable& t) {
  const int n = t.order;
  const int rows = n * (n - 1) * (n - 2) / 8;
  const int cols = variable_count(n) + 1;
  Gf2System sys(rows, cols);

  int count = 0;
  std::vector<char> visited(n);
  for (int a = 0; a < n - 1; ++a) {
    for (int b = a + 1; b < n - 1; ++b) {
      const Division& da = t.rows[a];
      const Division& db = t.rows[b];
      visited.assign(n, 0);
      for (int i = 0; i < n; ++i) {
        if (visited[i]) continue;
        bool c = true;
        const int j = traverse(da, i, &c);
        const int k = traverse(db, j, &c);
        const int l = traverse(da, k, &c);
        const int back = traverse(db, l, &c);
        if (back != i || k == i)
          throw BrokenPath("4-tuple at row " + std::to_string(i) +
                           " of operator pair (" + std::to_string(a) + ", " +
                           std::to_string(b) + ") does not close");
        visited[i] = visited[j] = visited[k] = visited[l] = 1;
        sys.set(count, variable_index(n, a, da.serial_of(i)), true);
        sys.set(count, variable_index(n, b, db.serial_of(j)), true);
        sys.set(count, variable_index(n, a, da.serial_of(k)), true);
        sys.set(count, variable_index(n, b, db.serial_of(l)), true);
        sys.set(count, cols - 1, c);
        ++count;
      }
    }
  }
  if (count != rows)
    throw BrokenPath("expected " + std::to_string(rows) + " equations, got " +
                     std::to_string(count));
  return sys;
}

SymbolicMatrix assign_signs(const SymbolicMatrix& m, const DivisionTable& t,
                            std::span<const std::uint8_t> x) {
  const int n = m.order();
  if (t.order != n)
    throw DimensionMismatch("table order " + std::to_string(t.order) +
                            " vs matrix order " + std::to_string(n));
  if (static_cast<int>(x.size()) != variable_count(n))
    throw DimensionMismatch("solution has " + std::to_string(x.size()) +
                            " bits, expected " +
                            std::to_string(variable_count(n)));
  require_permutation_columns(m);

  SymbolicMatrix out(m.qubits(), Mode::Special);
  for (int r = 0; r < n; ++r)
    out.set(r, 0, SignedEntry{m(r, 0).index, Sign::Plus});
  for (int j = 1; j < n; ++j) {
    const Division& d = t.rows[j - 1];
    for (int s = 0; s < static_cast<int>(d.couples().size()); ++s) {
      const Couple& c = d.couples()[s];
      const bool v = x[variable_index(n, j - 1, s)] != 0;
      out.set(c.lo, j,
              SignedEntry{m(c.hi, 0).index, v ? Sign::Plus : Sign::Minus});
      out.set(c.hi, j,
              SignedEntry{m(c.lo, 0).index, v ? Sign::Minus : Sign::Plus});
    }
  }
  if (!is_special_orthogonal(out))
    throw SolutionMismatch("assignment does not solve the matching equations");
  return out;
}

std::vector<std::uint8_t> assignment_of(const DivisionTable& t) {
  std::vector<std::uint8_t> x(variable_count(t.order), 0);
  for (int op = 0; op < static_cast<int>(t.rows.size()); ++op) {
    const auto couples = t.rows[op].couples();
    for (int s = 0; s < static_cast<int>(couples.size()); ++s) {
      if (!couples[s].value.has_value())
        throw InvalidDivision("couple value undecided");
      x[variable_index(t.order, op, s)] = *couples[s].value ? 1 : 0;
    }
  }
  return x;
}

SolveResult find_solution(const SymbolicMatrix& m) {
  if (!is_semi_orthogonal(m))
    throw NotSemiOrthogonal("input matrix is not semi-orthogonal");
  const DivisionTable t = compute_divisions(m);
  SolveResult out;
  out.elimination = eliminate_and_solve(build_equations(t));
  out.found = out.elimination.consistent;
  if (out.found) out.matrix = assign_signs(m, t, *out.elimination.solution);
  return out;
}

std::string variable_legend(const DivisionTable& t) {
  std::ostringstream os;
  for (int op = 0; op < static_cast<int>(t.rows.size()); ++op) {
    const auto couples = t.rows[op].couples();
    for (int s = 0; s < static_cast<int>(couples.size()); ++s)
      os << variable_index(t.order, op, s) << ' ' << op << ' '
         << couples[s].lo << ' ' << couples[s].hi << '\n';
  }
  return os.str();
}

}  // namespace sorth
