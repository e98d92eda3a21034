#include "support.hpp"

#include "hfg/error.hpp"
#include "hfg/invariants.hpp"
#include "hfg/verify.hpp"

using namespace hfg;
using namespace hfg::testing;

TEST_CASE("vanishing orders") {
  CHECK(vanishing_order(x(1) * x(2), Point(1, 0, 0)) == 2);
  CHECK(vanishing_order(x(0) + x(1) + x(2), Point(1, 1, 1)) == 0);
  CHECK(vanishing_order(x(0) - x(1), Point(1, 1, 1)) == 1);
  CHECK(vanishing_order((x(0) - x(1)).pow(3) * (x(1) - x(2)), Point(1, 1, 1)) == 4);
  CHECK(vanishing_order(x(0).pow(3), Point(0, 0, 1)) == 3);
  CHECK(vanishing_order(Polynomial(plane_block()), Point(1, 2, 3)) == kInfiniteOrder);
  CHECK_THROWS_AS(vanishing_order(x(0) + c(1), Point(1, 2, 3)), DomainError);
}

TEST_CASE("example generators vanish to the grid multiplicities") {
  const FatGrid g = abstract_grid({2, 3, 3}, {2, 3, 4, 4});
  for (const auto& p : generator_patterns(g)) {
    const Polynomial f = expand_pattern(g, p);
    for (std::size_t i = 0; i < g.r(); ++i)
      for (std::size_t j = 0; j < g.s(); ++j) CHECK(vanishing_order(f, g.point(i, j)) >= g.multiplicity(i, j));
  }
}

TEST_CASE("Hilbert function oracle") {
  FatPoint simple{{1, 2, 3}, 1};
  CHECK(hilbert_function_oracle(std::span(&simple, 1), 1) == 2);
  FatPoint dbl{{1, 2, 3}, 2};
  CHECK(hilbert_function_oracle(std::span(&dbl, 1), 1) == 0);
  CHECK(hilbert_function_oracle(std::span(&dbl, 1), 2) == 3);

  const FatGrid g = abstract_grid({1, 2}, {1, 2});
  const auto r = resolution(g);
  for (unsigned d = 0; d <= 8; ++d) CHECK(hilbert_function_oracle(g, d) == hilbert_from_resolution(r, d));

  VerifyBudget tiny;
  tiny.max_matrix_dim = 10;
  CHECK_THROWS_AS(hilbert_function_oracle(g, 4, tiny), BudgetExceeded);
}

TEST_CASE("example Hilbert function around the initial degree") {
  const FatGrid g = abstract_grid({2, 3, 3}, {2, 3, 4, 4});
  std::uint64_t work = 0;
  CHECK(hilbert_function_oracle(g, 15, {}, &work) == 0);
  CHECK(hilbert_function_oracle(g, 16, {}, &work) == 2);
  CHECK(work > 0);
}

TEST_CASE("power products off the coordinate lines") {
  const auto r = check_point_power_product(Point(1, 2, 3), Point(2, 1, 1), 2, 2);
  CHECK(r.passed());
  REQUIRE(r.instances().size() == 1);
  CHECK(r.instances()[0].input.find("I(1:1:3/2)^3") != std::string::npos);
}

TEST_CASE("power products on coordinate lines") {
  SUBCASE("two points on different coordinate lines") {
    const auto r = check_point_power_product(Point(1, 0, 1), Point(1, 1, 0), 2, 3);
    CHECK(r.passed());
    CHECK(r.instances().size() == 4);
    CHECK(r.instances().back().computed == "<x2^3, x1^2>");
  }
  SUBCASE("a coordinate point with m = 1 and m > 1") {
    const auto one = check_point_power_product(Point(1, 2, 3), Point(1, 0, 0), 1, 3);
    CHECK(one.passed());
    CHECK_FALSE(one.instances()[0].flagged);
    const auto two = check_point_power_product(Point(1, 2, 3), Point(1, 0, 0), 2, 2);
    CHECK(two.passed());
    CHECK(two.instances()[0].flagged);
  }
  SUBCASE("argument order does not matter") {
    CHECK(check_point_power_product(Point(1, 1, 0), Point(1, 2, 3), 2, 1).passed());
  }
  SUBCASE("same coordinate line") {
    CHECK(check_point_power_product(Point(1, 2, 0), Point(3, 1, 0), 2, 2).passed());
  }
  CHECK_THROWS_AS(check_point_power_product(Point(1, 0, 0), Point(0, 1, 0), 1, 1), DomainError);
  CHECK_THROWS_AS(check_point_power_product(Point(1, 2, 3), Point(1, 1, 1), 0, 1), DomainError);
}

TEST_CASE("point ideal star powers of the irrelevant ideal") {
  CHECK(check_lemma_gpnew(Point(1, 2, 3), 3).passed());
  const auto line = check_lemma_gpnew(Point(0, 1, 2), 2);
  CHECK(line.passed());
  CHECK(line.instances()[1].computed == "<x1^2, x1*x2, x2^2, x0>");
  const auto corner = check_lemma_gpnew(Point(0, 0, 1), 2);
  CHECK(corner.passed());
  CHECK(corner.instances()[1].computed == "<x2^2, x0, x1>");
  CHECK_THROWS_AS(check_lemma_gpnew(Point(1, 1, 1), 0), DomainError);
}

TEST_CASE("join with the irrelevant ideal gives powers") {
  CHECK(check_join_symbolic(Point(1, 1, 1), 1).passed());
  CHECK(check_join_symbolic(Point(1, 1, 1), 2).passed());
  CHECK(check_join_symbolic(Point(1, 2, 3), 3).passed());
}

TEST_CASE("end-to-end grid checks") {
  for (const auto& [m, n] : std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>>{
           {{1}, {1}}, {{1, 1}, {1, 1}}, {{1, 2}, {1, 2}}}) {
    const auto report = check_grid_end_to_end(abstract_grid(m, n));
    CAPTURE(show(m));
    CAPTURE(show(n));
    CHECK(report.passed());
    CHECK(report.instances().back().input == "minimal degree");
    CHECK(report.budget_used() > 0);
  }
}

TEST_CASE("reports") {
  VerificationReport a("a"), b("b");
  a.add({"x", "1", "1", true, false});
  b.add({"y", "1", "2", false, false});
  b.add_work(5);
  CHECK(a.passed());
  a.append(b);
  CHECK_FALSE(a.passed());
  CHECK(a.instances().size() == 2);
  CHECK(a.budget_used() == 5);
  CHECK(VerificationReport("empty").passed());
}
