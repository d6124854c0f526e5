#include <random>

#include "doctest.h"
#include "sorth/canonical.hpp"
#include "sorth/oracle.hpp"
#include "sorth/sign_solver.hpp"
#include "test_util.hpp"

using namespace sorth;

namespace {

SymbolicMatrix n2_special(bool negate_a0) {
  SymbolicMatrix m(1, Mode::Special);
  m.set(0, 0, SignedEntry{0, Sign::Plus});
  m.set(1, 0, SignedEntry{1, Sign::Plus});
  m.set(0, 1, SignedEntry{1, Sign::Plus});
  m.set(1, 1, SignedEntry{0, negate_a0 ? Sign::Minus : Sign::Plus});
  return m;
}

std::vector<int> row_support(const Gf2System& sys, int r) {
  std::vector<int> vars;
  for (int c = 0; c < sys.vars(); ++c)
    if (sys.get(r, c)) vars.push_back(c);
  return vars;
}

}  // namespace

TEST_CASE("divisions of the order-4 ordered type") {
  const auto t = compute_divisions(ordered_type(2));
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0] == Division(4, {Couple{0, 1, std::nullopt},
                                  Couple{2, 3, std::nullopt}}));
  CHECK(t.rows[1] == Division(4, {Couple{0, 2, std::nullopt},
                                  Couple{1, 3, std::nullopt}}));
  CHECK(t.rows[2] == Division(4, {Couple{0, 3, std::nullopt},
                                  Couple{1, 2, std::nullopt}}));
}

TEST_CASE("divisions recover couple values from a signed matrix") {
  const auto t = compute_divisions(n2_special(true));
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0] == Division(2, {Couple{0, 1, true}}));

  const auto semi = compute_divisions(strip_signs(n2_special(true)));
  CHECK(semi.rows[0] == Division(2, {Couple{0, 1, std::nullopt}}));
}

TEST_CASE("unpairable indices are rejected") {
  SymbolicMatrix m(2, Mode::Semi);
  // Columns 0 and 1 pair cleanly; column 2 maps index 0 onto row 0 itself.
  const int idx[4][4] = {{0, 1, 0, 3}, {1, 0, 2, 2}, {2, 3, 1, 1}, {3, 2, 3, 0}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.set(r, c, SignedEntry{idx[r][c], Sign::Unknown});
  CHECK_THROWS_AS(compute_divisions(m), NotSemiOrthogonal);
}

TEST_CASE("the order-2 table compiles to an empty system") {
  const auto sys = build_equations(compute_divisions(ordered_type(1)));
  CHECK(sys.rows() == 0);
  CHECK(sys.cols() == 2);
}

TEST_CASE("order-4 matching equations, traced by hand") {
  const auto sys = build_equations(compute_divisions(ordered_type(2)));
  REQUIRE(sys.rows() == 3);
  REQUIRE(sys.cols() == 7);
  // Pair (op1, op2): x<0,1> + x<1,3> + x<2,3> + x<0,2>, two reversed lookups.
  CHECK(row_support(sys, 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(sys.get(0, 6) == true);
  CHECK(row_support(sys, 1) == std::vector<int>{0, 1, 4, 5});
  CHECK(sys.get(1, 6) == false);
  CHECK(row_support(sys, 2) == std::vector<int>{2, 3, 4, 5});
  CHECK(sys.get(2, 6) == true);
}

TEST_CASE("system shape follows the closed form") {
  for (int n : {2, 3, 4}) {
    const int order = 1 << n;
    const auto sys = build_equations(compute_divisions(ordered_type(n)));
    CHECK(sys.rows() == order * (order - 1) * (order - 2) / 8);
    CHECK(sys.cols() == order * (order - 1) / 2 + 1);
    for (int r = 0; r < sys.rows(); ++r) CHECK(sys.coefficient_weight(r) == 4);
  }
}

TEST_CASE("each 4-tuple owns one equation regardless of the start row") {
  std::mt19937_64 rng(0x5eed0301);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = compute_divisions(testing::scrambled(ordered_type(3), rng));
    for (int a = 0; a < 7; ++a) {
      for (int b = a + 1; b < 7; ++b) {
        std::vector<char> visited(8, 0);
        for (int i = 0; i < 8; ++i) {
          if (visited[i]) continue;
          const auto expected = testing::trace_equation(t, a, b, i);
          int row = i;
          for (int step = 0; step < 4; ++step) {
            visited[row] = 1;
            row = (step % 2 == 0 ? t.rows[a] : t.rows[b]).partner(row);
          }
          for (int start : {i, t.rows[a].partner(i),
                            t.rows[b].partner(t.rows[a].partner(i)),
                            t.rows[b].partner(i)})
            CHECK(testing::trace_equation(t, a, b, start) == expected);
        }
      }
    }
  }
}

TEST_CASE("a degenerate table fails to close its paths") {
  // Operators 1 and 3 share both couples, so pair (0, 2) collapses.
  DivisionTable t;
  t.order = 4;
  t.rows = {Division(4, {Couple{0, 1, std::nullopt}, Couple{2, 3, std::nullopt}}),
            Division(4, {Couple{0, 2, std::nullopt}, Couple{1, 3, std::nullopt}}),
            Division(4, {Couple{0, 1, std::nullopt}, Couple{2, 3, std::nullopt}})};
  CHECK_THROWS_AS(build_equations(t), BrokenPath);
}

TEST_CASE("sign assignment materializes the couple pointers") {
  const auto semi = ordered_type(1);
  const auto t = compute_divisions(semi);
  const std::uint8_t zero[] = {0};
  const std::uint8_t one[] = {1};
  // value 0 negates the entry landing at the low row: (a0, -a1; a1, a0)
  const auto low = assign_signs(semi, t, zero);
  CHECK(low(0, 0) == SignedEntry{0, Sign::Plus});
  CHECK(low(1, 0) == SignedEntry{1, Sign::Plus});
  CHECK(low(0, 1) == SignedEntry{1, Sign::Minus});
  CHECK(low(1, 1) == SignedEntry{0, Sign::Plus});
  // value 1 negates the entry landing at the high row instead
  const auto high = assign_signs(semi, t, one);
  CHECK(high(0, 1) == SignedEntry{1, Sign::Plus});
  CHECK(high(1, 1) == SignedEntry{0, Sign::Minus});
  CHECK(high == n2_special(true));
}

TEST_CASE("a non-solution is rejected during assignment") {
  const auto semi = ordered_type(2);
  const auto t = compute_divisions(semi);
  const std::vector<std::uint8_t> zeros(6, 0);
  CHECK_THROWS_AS(assign_signs(semi, t, zeros), SolutionMismatch);
}

TEST_CASE("find_solution settles the ordered types") {
  const auto n2 = find_solution(ordered_type(1));
  REQUIRE(n2.found);
  CHECK(is_special_orthogonal(*n2.matrix));

  const auto n4 = find_solution(ordered_type(2));
  REQUIRE(n4.found);
  CHECK(is_special_orthogonal(*n4.matrix));

  const auto n8 = find_solution(ordered_type(3));
  REQUIRE(n8.found);
  CHECK(is_special_orthogonal(*n8.matrix));

  const auto n16 = find_solution(ordered_type(4));
  CHECK(!n16.found);
  CHECK(n16.elimination.rank_full == n16.elimination.rank_coeff + 1);
}

TEST_CASE("recovered couple values solve the compiled equations") {
  std::mt19937_64 rng(0x5eed0302);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto semi = testing::scrambled(ordered_type(n), rng);
      const auto solved = find_solution(semi);
      REQUIRE(solved.found);
      const auto recovered = compute_divisions(*solved.matrix);
      const auto sys = build_equations(compute_divisions(semi));
      const auto x = assignment_of(recovered);
      for (int r = 0; r < sys.rows(); ++r) CHECK(sys.row_satisfied(r, x));
    }
  }
}

TEST_CASE("rejects non-semi-orthogonal input") {
  SymbolicMatrix m(1, Mode::Semi);
  m.set(0, 0, SignedEntry{0, Sign::Unknown});
  m.set(1, 0, SignedEntry{1, Sign::Unknown});
  m.set(0, 1, SignedEntry{0, Sign::Unknown});
  m.set(1, 1, SignedEntry{1, Sign::Unknown});
  CHECK_THROWS_AS(find_solution(m), NotSemiOrthogonal);
}

TEST_CASE("variable legend lists operator and rows per variable") {
  const auto t = compute_divisions(ordered_type(1));
  CHECK(variable_legend(t) == "0 0 0 1\n");
}
