#include <random>

#include "doctest.h"
#include "sorth/canonical.hpp"
#include "sorth/scattered.hpp"
#include "sorth/sign_solver.hpp"
#include "test_util.hpp"

using namespace sorth;

namespace {

ScatteredMatrix n2_rotation() {
  return operator_from_division(Division(2, {Couple::make(0, 1, true)}));
}

}  // namespace

TEST_CASE("couples normalize to lo < hi with a flipped value") {
  const Couple c = Couple::make(3, 1, false);
  CHECK(c.lo == 1);
  CHECK(c.hi == 3);
  CHECK(*c.value == true);
  CHECK(*c.value_from(3) == false);
  CHECK(*c.value_from(1) == true);
}

TEST_CASE("a division must cover every row exactly once") {
  CHECK_THROWS_AS(Division(4, {Couple::make(0, 1, true), Couple::make(1, 2, true)}),
                  InvalidDivision);
  CHECK_THROWS_AS(Division(4, {Couple::make(0, 1, true)}), InvalidDivision);
}

TEST_CASE("the order-2 rotation sends (x0, x1) to (x1, -x0)") {
  const auto m = n2_rotation();
  Eigen::VectorXd v(2);
  v << 3.0, 5.0;
  const Eigen::VectorXd w = sorth::apply(m, v);
  CHECK(w[0] == 5.0);
  CHECK(w[1] == -3.0);
  const Eigen::MatrixXd d = dense(m);
  CHECK(d(0, 1) == 1.0);
  CHECK(d(1, 0) == -1.0);
  CHECK(is_matching_operator(m));
}

TEST_CASE("an order-4 operator realizes both couples at once") {
  const auto m = operator_from_division(
      Division(4, {Couple::make(0, 1, true), Couple::make(2, 3, true)}));
  std::vector<SignedEntry> col{{0, Sign::Plus}, {1, Sign::Plus},
                               {2, Sign::Plus}, {3, Sign::Plus}};
  const auto out = sorth::apply(m, std::span<const SignedEntry>(col));
  CHECK(out[0] == SignedEntry{1, Sign::Plus});
  CHECK(out[1] == SignedEntry{0, Sign::Minus});
  CHECK(out[2] == SignedEntry{3, Sign::Plus});
  CHECK(out[3] == SignedEntry{2, Sign::Minus});

  // Same answer through the dense view.
  Eigen::VectorXd v(4);
  v << 1.0, 2.0, 3.0, 4.0;
  CHECK((dense(m) * v - sorth::apply(m, v)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("applying twice negates") {
  std::mt19937_64 rng(0x5eed0201);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = operator_from_division(testing::random_signed_division(8, rng));
    const Eigen::VectorXd v = testing::random_unit(8, rng);
    CHECK((sorth::apply(m, sorth::apply(m, v)) + v).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("division round-trips through its operator") {
  std::mt19937_64 rng(0x5eed0202);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = testing::random_signed_division(8, rng);
    CHECK(division_of(operator_from_division(d)) == d);
  }
}

TEST_CASE("self-composition gives minus identity") {
  std::mt19937_64 rng(0x5eed0203);
  const auto m = operator_from_division(testing::random_signed_division(16, rng));
  const auto mm = compose(m, m);
  CHECK((dense(mm) + Eigen::MatrixXd::Identity(16, 16)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("applying across orders is a dimension error") {
  Eigen::VectorXd v(3);
  v << 1.0, 2.0, 3.0;
  CHECK_THROWS_AS(sorth::apply(n2_rotation(), v), DimensionMismatch);
}

TEST_CASE("the identity is scattered but not a matching operator") {
  const auto id = from_dense(Eigen::MatrixXd::Identity(4, 4));
  CHECK(!is_matching_operator(id));
  CHECK(!is_semi_matching_operator(id));
}

TEST_CASE("dense views reject non-scattered grids") {
  Eigen::MatrixXd two = Eigen::MatrixXd::Zero(2, 2);
  two(0, 0) = 1.0;
  two(0, 1) = 1.0;
  two(1, 0) = 1.0;
  CHECK_THROWS_AS(from_dense(two), NotScattered);
  CHECK_THROWS_AS(from_dense(2.0 * Eigen::MatrixXd::Identity(2, 2)),
                  NotScattered);
}

TEST_CASE("matching operators satisfy the anti-symmetry laws") {
  std::mt19937_64 rng(0x5eed0204);
  for (int order : {4, 8, 16}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto m =
          operator_from_division(testing::random_signed_division(order, rng));
      REQUIRE(is_matching_operator(m));
      const Eigen::MatrixXd d = dense(m);
      CHECK((d * d + Eigen::MatrixXd::Identity(order, order))
                .cwiseAbs()
                .maxCoeff() == 0.0);
      CHECK((d.transpose() + d).cwiseAbs().maxCoeff() == 0.0);
      CHECK(d.diagonal().cwiseAbs().maxCoeff() == 0.0);
      CHECK(is_matching_operator(negate(m)));
    }
  }
}

TEST_CASE("cooperation holds for the quaternion solution operators") {
  // Signed operators of columns 1 and 2 of the order-4 solution.
  const auto a = operator_from_division(
      Division(4, {Couple::make(0, 1, true), Couple::make(2, 3, true)}));
  const auto b = operator_from_division(
      Division(4, {Couple::make(0, 2, true), Couple::make(1, 3, false)}));
  CHECK(cooperates(a, b));
  CHECK(cooperates(b, a));
  CHECK(is_matching_operator(compose(a, b)));
  CHECK(!cooperates(a, a));
}

TEST_CASE("sharing a couple rules out cooperation") {
  const auto a = operator_from_division(
      Division(4, {Couple::make(0, 1, true), Couple::make(2, 3, true)}));
  const auto b = operator_from_division(
      Division(4, {Couple::make(0, 1, false), Couple::make(2, 3, false)}));
  CHECK(!cooperates(a, b));
}

TEST_CASE("cooperation is symmetric for random operator pairs") {
  std::mt19937_64 rng(0x5eed0205);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = operator_from_division(testing::random_signed_division(8, rng));
    const auto b = operator_from_division(testing::random_signed_division(8, rng));
    CHECK(cooperates(a, b) == cooperates(b, a));
  }
}

TEST_CASE("column operators of the ordered type form an abelian group") {
  for (int n : {1, 2, 3, 4}) {
    const int order = 1 << n;
    const auto divisions = compute_divisions(ordered_type(n));
    std::vector<ScatteredMatrix> ops(order);
    ops[0].perm.resize(order);
    std::iota(ops[0].perm.begin(), ops[0].perm.end(), 0);
    for (int c = 1; c < order; ++c)
      ops[c] = operator_from_division(divisions.rows[c - 1]);
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        const auto ab = compose(ops[a], ops[b]);
        const auto ba = compose(ops[b], ops[a]);
        CHECK(ab.perm == ops[a ^ b].perm);  // closure under the xor law
        CHECK(ab.perm == ba.perm);          // commutativity
      }
      CHECK(compose(ops[a], ops[a]).perm == ops[0].perm);  // self-inverse
    }
  }
}

TEST_CASE("divisions of one semi-orthogonal matrix never share a couple") {
  std::mt19937_64 rng(0x5eed0206);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = testing::scrambled(ordered_type(3), rng);
    const auto t = compute_divisions(m);
    for (std::size_t a = 0; a < t.rows.size(); ++a)
      for (std::size_t b = a + 1; b < t.rows.size(); ++b)
        for (const Couple& c : t.rows[a].couples())
          CHECK(!t.rows[b].contains_pair(c.lo, c.hi));
  }
}

TEST_CASE("conjugation relabels couples") {
  std::mt19937_64 rng(0x5eed0207);
  const auto m = operator_from_division(testing::random_signed_division(8, rng));
  const auto pi = testing::random_permutation(8, rng);
  const auto c = conjugate(m, pi);
  for (int r = 0; r < 8; ++r) CHECK(c.perm[pi[r]] == pi[m.perm[r]]);
}
