#include "sorth/scattered.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sorth {

Couple Couple::make(int i, int j, std::optional<bool> v) {
  if (i == j) throw InvalidDivision("couple must pair two distinct rows");
  if (i > j) {
    std::swap(i, j);
    if (v.has_value()) v = !*v;
  }
  return Couple{i, j, v};
}

Division::Division(int order, std::vector<Couple> couples)
    : order_(order), couples_(std::move(couples)), slot_(order, -1) {
  if (order < 2 || static_cast<int>(couples_.size()) * 2 != order)
    throw InvalidDivision("expected " + std::to_string(order / 2) +
                          " couples for order " + std::to_string(order));
  std::sort(couples_.begin(), couples_.end(),
            [](const Couple& a, const Couple& b) { return a.lo < b.lo; });
  for (std::size_t s = 0; s < couples_.size(); ++s) {
    const Couple& c = couples_[s];
    if (c.lo < 0 || c.lo >= c.hi || c.hi >= order)
      throw InvalidDivision("couple <" + std::to_string(c.lo) + "," +
                            std::to_string(c.hi) + "> out of range");
    for (int row : {c.lo, c.hi}) {
      if (slot_[row] != -1)
        throw InvalidDivision("row " + std::to_string(row) +
                              " appears in two couples");
      slot_[row] = static_cast<std::int32_t>(s);
    }
  }
}

bool Division::contains_pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  const Couple& c = couple_containing(i);
  return c.lo == i && c.hi == j;
}

ScatteredMatrix operator_from_division(const Division& d) {
  const int n = d.order();
  ScatteredMatrix m;
  m.perm.assign(n, 0);
  const bool signed_op = d.couples().front().value.has_value();
  for (const Couple& c : d.couples())
    if (c.value.has_value() != signed_op)
      throw InvalidDivision("mixed known and unknown couple values");
  if (signed_op) m.signs.emplace(n, 1);
  for (const Couple& c : d.couples()) {
    m.perm[c.lo] = c.hi;
    m.perm[c.hi] = c.lo;
    if (signed_op) {
      // S[lo][j] = (-1)^{v^1} S[hi][0] and S[hi][j] = (-1)^{v} S[lo][0].
      (*m.signs)[c.lo] = *c.value ? 1 : -1;
      (*m.signs)[c.hi] = *c.value ? -1 : 1;
    }
  }
  return m;
}

Division division_of(const ScatteredMatrix& m) {
  const int n = m.order();
  std::vector<Couple> couples;
  couples.reserve(n / 2);
  for (int r = 0; r < n; ++r) {
    const int p = m.perm[r];
    if (p == r) throw InvalidDivision("operator has a fixed point at row " +
                                      std::to_string(r));
    if (p < 0 || p >= n || m.perm[p] != r)
      throw InvalidDivision("operator is not an involution");
    if (r < p) {
      std::optional<bool> v;
      if (m.signs) v = (*m.signs)[p] < 0;  // M[hi][lo] = (-1)^v
      couples.push_back(Couple{r, p, v});
    }
  }
  return Division(n, std::move(couples));
}

namespace {

template <typename Vec>
Vec apply_numeric(const ScatteredMatrix& m, const Vec& v) {
  if (v.size() != m.order())
    throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                            " vs operator order " + std::to_string(m.order()));
  Vec out(v.size());
  for (int r = 0; r < m.order(); ++r)
    out[r] = static_cast<double>(m.sign_at(r)) * v[m.perm[r]];
  return out;
}

}  // namespace

Eigen::VectorXd apply(const ScatteredMatrix& m, const Eigen::VectorXd& v) {
  return apply_numeric(m, v);
}

Eigen::VectorXcd apply(const ScatteredMatrix& m, const Eigen::VectorXcd& v) {
  return apply_numeric(m, v);
}

std::vector<SignedEntry> apply(const ScatteredMatrix& m,
                               std::span<const SignedEntry> v) {
  if (static_cast<int>(v.size()) != m.order())
    throw DimensionMismatch("column length " + std::to_string(v.size()) +
                            " vs operator order " + std::to_string(m.order()));
  std::vector<SignedEntry> out(v.size());
  for (int r = 0; r < m.order(); ++r) {
    SignedEntry e = v[m.perm[r]];
    if (m.signs) {
      if (e.sign == Sign::Unknown)
        throw MalformedMatrix("signed operator applied to an unsigned entry");
      if ((*m.signs)[r] < 0) e.sign = flip(e.sign);
    }
    out[r] = e;
  }
  return out;
}

ScatteredMatrix compose(const ScatteredMatrix& a, const ScatteredMatrix& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
  ScatteredMatrix out;
  out.perm.resize(a.order());
  const bool signed_out = a.signs.has_value() || b.signs.has_value();
  if (signed_out) out.signs.emplace(a.order(), 1);
  for (int r = 0; r < a.order(); ++r) {
    out.perm[r] = b.perm[a.perm[r]];
    if (signed_out)
      (*out.signs)[r] =
          static_cast<std::int8_t>(a.sign_at(r) * b.sign_at(a.perm[r]));
  }
  return out;
}

ScatteredMatrix negate(const ScatteredMatrix& m) {
  ScatteredMatrix out = m;
  if (!out.signs) out.signs.emplace(out.order(), 1);
  for (auto& s : *out.signs) s = -s;
  return out;
}

ScatteredMatrix conjugate(const ScatteredMatrix& m,
                          std::span<const std::int32_t> pi) {
  if (static_cast<int>(pi.size()) != m.order())
    throw DimensionMismatch("permutation length vs operator order");
  ScatteredMatrix out;
  out.perm.resize(m.order());
  if (m.signs) out.signs.emplace(m.order(), 1);
  for (int r = 0; r < m.order(); ++r) {
    out.perm[pi[r]] = pi[m.perm[r]];
    if (m.signs) (*out.signs)[pi[r]] = (*m.signs)[r];
  }
  return out;
}

bool is_matching_operator(const ScatteredMatrix& m) {
  if (!m.signs) return false;  // a plain permutation is never anti-symmetric
  for (int r = 0; r < m.order(); ++r) {
    const int p = m.perm[r];
    if (p == r || p < 0 || p >= m.order() || m.perm[p] != r) return false;
    if ((*m.signs)[p] != -(*m.signs)[r]) return false;
  }
  return true;
}

bool is_semi_matching_operator(const ScatteredMatrix& m) {
  for (int r = 0; r < m.order(); ++r) {
    const int p = m.perm[r];
    if (p == r || p < 0 || p >= m.order() || m.perm[p] != r) return false;
    if (m.signs && (*m.signs)[r] != 1) return false;
  }
  return true;
}

bool cooperates(const ScatteredMatrix& a, const ScatteredMatrix& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
  return is_matching_operator(compose(b, a));
}

bool semi_cooperates(const ScatteredMatrix& a, const ScatteredMatrix& b) {
  if (a.order() != b.order())
    throw DimensionMismatch("orders " + std::to_string(a.order()) + " and " +
                            std::to_string(b.order()));
  return is_semi_matching_operator(compose(b, a));
}

Eigen::MatrixXd dense(const ScatteredMatrix& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.order(), m.order());
  for (int r = 0; r < m.order(); ++r) out(r, m.perm[r]) = m.sign_at(r);
  return out;
}

ScatteredMatrix from_dense(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw NotScattered("matrix is not square");
  const int n = static_cast<int>(m.rows());
  ScatteredMatrix out;
  out.perm.assign(n, -1);
  out.signs.emplace(n, 1);
  std::vector<char> col_used(n, 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double v = m(r, c);
      if (std::abs(v) <= kNumericTol) continue;
      if (std::abs(std::abs(v) - 1.0) > kNumericTol)
        throw NotScattered("entry is neither 0 nor +-1");
      if (out.perm[r] != -1 || col_used[c])
        throw NotScattered("more than one scattered point in a row or column");
      out.perm[r] = c;
      (*out.signs)[r] = v > 0 ? 1 : -1;
      col_used[c] = 1;
    }
    if (out.perm[r] == -1)
      throw NotScattered("row " + std::to_string(r) + " has no scattered point");
  }
  return out;
}

}  // namespace sorth
