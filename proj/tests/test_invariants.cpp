#include "support.hpp"

#include "hfg/error.hpp"
#include "hfg/invariants.hpp"

using namespace hfg;
using namespace hfg::testing;

namespace {

FatGrid example_grid() { return abstract_grid({2, 3, 3}, {2, 3, 4, 4}); }

std::vector<Corner> corners(std::initializer_list<Corner> list) { return list; }

// Minimal degree by brute force over the explicit patterns.
unsigned min_pattern_degree(const FatGrid& g) {
  unsigned best = ~0u;
  for (const auto& p : generator_patterns(g)) best = std::min(best, p.degree());
  return best;
}

} // namespace

TEST_CASE("example alpha tuple and corner sets") {
  const FatGrid g = example_grid();
  const AlphaTuple a = alpha_tuple(g);
  CHECK(a.entries == std::vector<unsigned>{21, 21, 17, 17, 17, 13, 13, 13, 9, 9, 9, 5, 5, 5, 2, 2, 2});
  const CornerSets cs = corner_sets(a);
  CHECK(cs.C == corners({{0, 21}, {2, 17}, {5, 13}, {8, 9}, {11, 5}, {14, 2}, {17, 0}}));
  CHECK(cs.V == corners({{2, 21}, {5, 17}, {8, 13}, {11, 9}, {14, 5}, {17, 2}}));
  const ResolutionShifts r = resolution(g);
  CHECK(r.generator_twists == std::vector<unsigned>{16, 16, 17, 17, 18, 19, 21});
  CHECK(r.syzygy_twists == std::vector<unsigned>{19, 19, 20, 21, 22, 23});
}

TEST_CASE("example generator patterns") {
  const auto patterns = generator_patterns(example_grid());
  REQUIRE(patterns.size() == 7);
  // H-exponents (6,6,5) shrink by k, V-exponents (0,0,-1,-2) grow by k.
  const std::vector<std::vector<unsigned>> h{{6, 6, 5}, {5, 5, 4}, {4, 4, 3}, {3, 3, 2}, {2, 2, 1}, {1, 1, 0}, {0, 0, 0}};
  const std::vector<std::vector<unsigned>> v{{0, 0, 0, 0}, {1, 1, 0, 0}, {2, 2, 1, 0}, {3, 3, 2, 1},
                                             {4, 4, 3, 2}, {5, 5, 4, 3}, {6, 6, 5, 4}};
  std::vector<unsigned> degrees;
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(patterns[k].k == k);
    CHECK(patterns[k].h_exponents == h[k]);
    CHECK(patterns[k].v_exponents == v[k]);
    degrees.push_back(patterns[k].degree());
  }
  CHECK(degrees == std::vector<unsigned>{17, 16, 16, 17, 18, 19, 21});
}

TEST_CASE("example degrees") {
  const FatGrid g = example_grid();
  CHECK(alpha_degree(g) == 16);
  CHECK(alpha_degree(g) == min_pattern_degree(g));
  CHECK(beta_degree(g) == 21);
  CHECK(waldschmidt(g) == 16);
}

TEST_CASE("Hilbert function from the resolution") {
  const ResolutionShifts r = resolution(example_grid());
  CHECK(hilbert_from_resolution(r, 15) == 0);
  CHECK(hilbert_from_resolution(r, 16) == 2);
  // Beyond the regularity the ideal has codimension 180 = sum binom(m_ij + 1, 2).
  for (unsigned d = 22; d < 30; ++d) CHECK(hilbert_from_resolution(r, d) == binom(d + 2, 2) - 180);

  const ResolutionShifts single = resolution(abstract_grid({1}, {1}));
  CHECK(single.generator_twists == std::vector<unsigned>{1, 1});
  CHECK(single.syzygy_twists == std::vector<unsigned>{2});
  CHECK(hilbert_from_resolution(single, 0) == 0);
  CHECK(hilbert_from_resolution(single, 1) == 2);
  CHECK(hilbert_from_resolution(single, 4) == 14);
}

TEST_CASE("corner sets of hand-made tuples") {
  const CornerSets cs = corner_sets(AlphaTuple{{3, 3, 1}});
  CHECK(cs.C == corners({{0, 3}, {2, 1}, {3, 0}}));
  CHECK(cs.V == corners({{2, 3}, {3, 1}}));
  const CornerSets flat = corner_sets(AlphaTuple{{2, 2}});
  CHECK(flat.C == corners({{0, 2}, {2, 0}}));
  CHECK(flat.V == corners({{2, 2}}));
  CHECK_THROWS_AS(corner_sets(AlphaTuple{}), DomainError);
  CHECK_THROWS_AS(corner_sets(AlphaTuple{{1, 2}}), DomainError);
}

TEST_CASE("multiplicity tuples and the chain property") {
  const auto single = s_tuples(abstract_grid({1}, {1}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == IntTuple{1});
  CHECK(is_totally_ordered(single));

  const auto example = s_tuples(example_grid());
  CHECK(example.size() == 17);
  CHECK(is_totally_ordered(example));

  const MultiplicityMatrix antidiagonal{{1, 3}, {3, 1}};
  CHECK_FALSE(is_totally_ordered(s_tuples(antidiagonal)));
}

TEST_CASE("resurgence certificate") {
  const FatGrid g = example_grid();
  const ResurgenceCertificate cert = resurgence_certificate(g, 3);
  CHECK(cert.passed);
  CHECK(cert.resurgence == 1);
  REQUIRE(cert.steps.size() == 3);
  for (const auto& step : cert.steps) {
    CHECK(step.matches_scaled_formula);
    CHECK(step.products_in_symbolic);
    CHECK(step.symbolic_patterns.size() == step.t * 6 + 1);
    for (const auto& f : step.factorizations) CHECK(f.size() == step.t);
  }
  CHECK_THROWS_AS(resurgence_certificate(g, 0), DomainError);
}
