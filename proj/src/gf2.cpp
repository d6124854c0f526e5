#include "sorth/gf2.hpp"

#include <algorithm>
#include <bit>

namespace sorth {

Gf2System::Gf2System(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 1)
    throw MalformedSystem("need rows >= 0 and cols >= 1, got " +
                          std::to_string(rows) + " x " + std::to_string(cols));
  words_per_row_ = (cols + 63) / 64;
  bits_.assign(static_cast<std::size_t>(std::max(rows, 1)) * words_per_row_, 0);
}

Gf2System Gf2System::from_rows(
    const std::vector<std::vector<std::uint8_t>>& rows) {
  if (rows.empty()) throw MalformedSystem("cannot infer width of empty system");
  const int cols = static_cast<int>(rows.front().size());
  Gf2System sys(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < sys.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw MalformedSystem("ragged row " + std::to_string(r));
    for (int c = 0; c < cols; ++c)
      if (rows[r][c]) sys.set(r, c, true);
  }
  return sys;
}

void Gf2System::set(int r, int c, bool v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw MalformedSystem("bit (" + std::to_string(r) + ", " +
                          std::to_string(c) + ") out of range");
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (v)
    word(r, c / 64) |= mask;
  else
    word(r, c / 64) &= ~mask;
}

void Gf2System::swap_rows(int a, int b) {
  if (a == b) return;
  for (int w = 0; w < words_per_row_; ++w) std::swap(word(a, w), word(b, w));
}

void Gf2System::xor_rows(int dst, int src) {
  for (int w = 0; w < words_per_row_; ++w) word(dst, w) ^= word(src, w);
}

bool Gf2System::row_satisfied(int r, std::span<const std::uint8_t> x) const {
  if (static_cast<int>(x.size()) != vars())
    throw MalformedSystem("assignment length does not match variable count");
  bool acc = false;
  for (int c = 0; c < vars(); ++c)
    if (get(r, c) && x[c]) acc = !acc;
  return acc == get(r, cols_ - 1);
}

int Gf2System::coefficient_weight(int r) const {
  int weight = 0;
  for (int c = 0; c < vars(); ++c) weight += get(r, c);
  return weight;
}

std::string Gf2System::dump() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 2));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c == cols_ - 1) out.push_back('|');
      out.push_back(get(r, c) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

Gf2Solution eliminate_and_solve(const Gf2System& sys) {
  Gf2System a = sys;
  const int rows = a.rows(), cols = a.cols();

  std::vector<int> pivot_col;
  pivot_col.reserve(std::min(rows, cols));
  int next = 0;  // next pivot row
  for (int j = 0; j < cols && next < rows; ++j) {
    int pivot = -1;
    for (int i = next; i < rows; ++i)
      if (a.get(i, j)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(pivot, next);
    for (int i = next + 1; i < rows; ++i)
      if (a.get(i, j)) a.xor_rows(i, next);
    pivot_col.push_back(j);
    ++next;
  }

  // Row simplest form: clear above every pivot.
  for (int i = next - 1; i >= 0; --i)
    for (int m = i - 1; m >= 0; --m)
      if (a.get(m, pivot_col[i])) a.xor_rows(m, i);

  Gf2Solution out;
  out.rank_full = next;
  out.rank_coeff = next;
  if (!pivot_col.empty() && pivot_col.back() == cols - 1) --out.rank_coeff;
  out.consistent = out.rank_full == out.rank_coeff;
  if (!out.consistent) return out;

  std::vector<std::uint8_t> x(static_cast<std::size_t>(a.vars()), 0);
  for (int i = 0; i < next; ++i)
    x[pivot_col[i]] = a.get(i, cols - 1) ? 1 : 0;
  for (int r = 0; r < sys.rows(); ++r)
    if (!sys.row_satisfied(r, x))
      throw MalformedSystem("eliminated solution fails substitution check");
  out.solution = std::move(x);
  return out;
}

}  // namespace sorth
