// Acceptance run: one PASS/FAIL line per criterion with its time limit.
#include "properties.hpp"

#include "hfg/error.hpp"
#include "hfg/ideal.hpp"
#include "hfg/invariants.hpp"
#include "hfg/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hfg;
using namespace hfg::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Grids = std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>>;

// r, s <= 2 with multiplicities <= 2, plus every 1x1 grid up to multiplicity 3.
Grids small_family() {
  const std::vector<std::vector<unsigned>> sets{{1}, {2}, {1, 1}, {1, 2}, {2, 2}};
  Grids out;
  for (const auto& m : sets)
    for (const auto& n : sets) out.push_back({m, n});
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = 1; n <= 3; ++n)
      if (m == 3 || n == 3) out.push_back({{m}, {n}});
  return out;
}

std::string label(const std::vector<unsigned>& m, const std::vector<unsigned>& n) {
  return "M=" + show(m) + " N=" + show(n);
}

Outcome ac1() {
  Outcome o;
  const FatGrid g = abstract_grid({2, 3, 3}, {2, 3, 4, 4});
  o.require(alpha_tuple(g).entries ==
                std::vector<unsigned>{21, 21, 17, 17, 17, 13, 13, 13, 9, 9, 9, 5, 5, 5, 2, 2, 2},
            "alpha tuple");
  const CornerSets cs = corner_sets(alpha_tuple(g));
  o.require(cs.C == std::vector<Corner>{{0, 21}, {2, 17}, {5, 13}, {8, 9}, {11, 5}, {14, 2}, {17, 0}}, "C");
  o.require(cs.V == std::vector<Corner>{{2, 21}, {5, 17}, {8, 13}, {11, 9}, {14, 5}, {17, 2}}, "V");
  const ResolutionShifts r = resolution(g);
  o.require(r.generator_twists == std::vector<unsigned>{16, 16, 17, 17, 18, 19, 21}, "generator twists");
  o.require(r.syzygy_twists == std::vector<unsigned>{19, 19, 20, 21, 22, 23}, "syzygy twists");
  // H1^6 H2^6 H3^5, H1^5 H2^5 H3^4 V1 V2, ..., V1^6 V2^6 V3^5 V4^4.
  const auto patterns = generator_patterns(g);
  o.require(patterns.size() == 7, "seven generators");
  for (unsigned k = 0; k < patterns.size() && k < 7; ++k) {
    const std::vector<unsigned> h{6 > k ? 6 - k : 0, 6 > k ? 6 - k : 0, 5 > k ? 5 - k : 0};
    const std::vector<unsigned> v{k, k, k >= 1 ? k - 1 : 0, k >= 2 ? k - 2 : 0};
    o.require(patterns[k].h_exponents == h && patterns[k].v_exponents == v, "pattern k=" + std::to_string(k));
  }
  o.require(alpha_degree(g) == 16, "alpha");
  return o;
}

Outcome ac2() {
  Outcome o;
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; m + n <= 5; ++n) {
      const auto report = check_point_power_product(Point(1, 2, 3), Point(2, 1, 1), m, n);
      o.require(report.passed(), "m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  return o;
}

Outcome ac3() {
  Outcome o;
  const Polynomial x1 = x(1), x2 = x(2);
  const Point p(1, 0, 1), q(1, 1, 0), r(1, 0, 0);
  for (const auto& [m, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}, {2, 3}}) {
    const std::string tag = "(b) m=" + std::to_string(m) + " n=" + std::to_string(n);
    const auto result = hadamard_ideals(ideal_power(point_ideal(p), m), ideal_power(point_ideal(q), n));
    const IdealPresentation expected(plane_block(), {x1.pow(m), x2.pow(n)});
    o.require(ideal_equal(result, expected), tag + " generators");
    const auto low = ideal_power(point_ideal(r), m + n - 1), high = ideal_power(point_ideal(r), std::min(m, n));
    o.require(result.contains(low) && high.contains(result), tag + " chain");
    const bool strict = !(m == 1 && n == 1);
    o.require(ideal_equal(result, low) != strict && ideal_equal(result, high) != strict, tag + " strictness");
    o.require(check_point_power_product(p, q, m, n).passed(), tag + " checker");
  }
  const Point generic(1, 2, 3), corner(1, 0, 0);
  for (unsigned m = 1; m <= 2; ++m)
    for (unsigned n = 1; n <= 3; ++n) {
      const std::string tag = "(a) m=" + std::to_string(m) + " n=" + std::to_string(n);
      const auto result = hadamard_ideals(ideal_power(point_ideal(generic), m), ideal_power(point_ideal(corner), n));
      o.require(ideal_equal(result, ideal_power(point_ideal(corner), n)), tag);
    }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (unsigned m = 1; m <= 5; ++m)
    for (unsigned n = 1; m + n <= 6; ++n)
      o.require(ideal_equal(join_ideals(irrelevant_power(m), irrelevant_power(n)), irrelevant_power(m + n - 1)),
                "join m=" + std::to_string(m) + " n=" + std::to_string(n));

  Rng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    auto random_power = [&] { return ideal_power(point_ideal(random_point_off_lines(rng)), uniform(rng, 1, 2)); };
    const auto I = random_power(), J = random_power(), K = random_power();
    const auto lhs = hadamard_ideals(I, ideal_intersection(J, K));
    const auto rhs = ideal_intersection(hadamard_ideals(I, J), hadamard_ideals(I, K));
    o.require(ideal_equal(lhs, rhs), "distributivity trial " + std::to_string(trial));
  }

  // Two pairs of points whose Hadamard products share a component.
  auto ideal = [](std::vector<Polynomial> gens) { return IdealPresentation(plane_block(), std::move(gens)); };
  const Rational fifth(1, 5);
  const auto I = ideal({5 * x(0) - x(1) - x(2), 6 * x(1).pow(2) - 13 * x(1) * x(2) + 6 * x(2).pow(2)});
  const auto J = ideal({5 * x(0) - 4 * x(1) - 3 * x(2), 16 * x(1).pow(2) - 26 * x(1) * x(2) + 9 * x(2).pow(2)});
  const auto I1 = ideal({3 * x(1) - 2 * x(2), x(0) - fifth * x(1) - fifth * x(2)});
  const auto I2 = ideal({2 * x(1) - 3 * x(2), x(0) - fifth * x(1) - fifth * x(2)});
  const auto J1 = ideal({2 * x(1) - x(2), x(0) - Rational(4, 5) * x(1) - Rational(3, 5) * x(2)});
  const auto J2 = ideal({8 * x(1) - 9 * x(2), x(0) - Rational(4, 5) * x(1) - Rational(3, 5) * x(2)});
  o.require(ideal_equal(I, ideal_intersection(I1, I2)), "I = I1 cap I2");
  o.require(ideal_equal(J, ideal_intersection(J1, J2)), "J = J1 cap J2");
  const IdealPresentation parts[] = {ideal({16 * x(1) - 27 * x(2), 4 * x(0) - 3 * x(2)}),
                                     ideal({4 * x(1) - 3 * x(2), 2 * x(0) - x(2)}),
                                     ideal({3 * x(1) - x(2), 3 * x(0) - x(2)})};
  o.require(ideal_equal(hadamard_ideals(I, J), intersect_all(parts)), "three components");
  o.require(ideal_equal(hadamard_ideals(I2, J1), hadamard_ideals(I1, J2)), "I2*J1 = I1*J2");
  return o;
}

Outcome ac5() {
  Outcome o;
  for (const auto& [m, n] : small_family()) {
    const FatGrid g = abstract_grid(m, n);
    const auto patterns = generator_patterns(g);
    o.require(ideal_equal(pattern_ideal(g, patterns), grid_ideal_intersection(g)), label(m, n));
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  auto compare = [&](const FatGrid& g, const std::string& tag) {
    const ResolutionShifts r = resolution(g);
    const auto points = grid_fat_points(g);
    for (unsigned d = 0; d <= r.syzygy_twists.back(); ++d)
      o.require(hilbert_from_resolution(r, d) == hilbert_function_oracle(points, d), tag + " d=" + std::to_string(d));
  };
  for (const auto& [m, n] : small_family()) compare(abstract_grid(m, n), label(m, n));
  const FatGrid example = abstract_grid({2, 3, 3}, {2, 3, 4, 4});
  compare(example, "example");
  o.require(hilbert_function_oracle(example, 15) == 0, "dim I_15 = 0");
  o.require(hilbert_function_oracle(example, 16) == 2, "dim I_16 = 2");
  return o;
}

Outcome ac7() {
  Outcome o;
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const FatGrid g = abstract_grid(random_multiplicities(rng, uniform(rng, 1, 4), 5),
                                    random_multiplicities(rng, uniform(rng, 1, 4), 5));
    for (unsigned t = 1; t <= 5; ++t)
      o.require(alpha_degree(symbolic_grid(g, t)) == t * alpha_degree(g), grid_label(g) + " t=" + std::to_string(t));
    o.require(waldschmidt(g) == alpha_degree(g), grid_label(g) + " waldschmidt");
  }
  const FatGrid dbl = abstract_grid({1}, {2});
  const unsigned alpha = alpha_degree(dbl);
  for (unsigned t = 1; t <= 3; ++t) {
    const auto points = grid_fat_points(symbolic_grid(dbl, t));
    unsigned first = 0;
    while (hilbert_function_oracle(points, first) == 0) ++first;
    o.require(first == t * alpha, "oracle minimal degree t=" + std::to_string(t));
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  const ResurgenceCertificate cert = resurgence_certificate(abstract_grid({2, 3, 3}, {2, 3, 4, 4}), 3);
  o.require(cert.passed && cert.resurgence == 1, "example certificate");
  const FatGrid g = abstract_grid({1, 2}, {1, 2});
  const ResurgenceCertificate small = resurgence_certificate(g, 2);
  o.require(small.passed && small.resurgence == 1, "2x2 certificate");
  const auto patterns = generator_patterns(g);
  const IdealPresentation ordinary = pattern_ideal(g, patterns);
  for (unsigned t = 1; t <= 2; ++t)
    o.require(ideal_equal(ideal_power(ordinary, t), grid_ideal_intersection(symbolic_grid(g, t))),
              "2x2 symbolic = ordinary t=" + std::to_string(t));
  return o;
}

Outcome ac9() {
  Outcome o;
  std::uint64_t seed = 9001;
  for (const auto& p : all_properties()) {
    Rng rng(seed++);
    for (int i = 0; i < 200; ++i) {
      const std::string failure = p.check(rng);
      o.require(failure.empty(), std::string(p.name) + ": " + failure);
    }
  }
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "example invariants reproduced", 1, ac1},
      {"AC2", "two points off the coordinate lines", 300, ac2},
      {"AC3", "points on coordinate lines", 60, ac3},
      {"AC4", "joins, distributivity and shared components", 300, ac4},
      {"AC5", "generator patterns match the intersection oracle", 600, ac5},
      {"AC6", "resolution matches the rank oracle", 600, ac6},
      {"AC7", "symbolic scaling of the initial degree", 120, ac7},
      {"AC8", "resurgence certificate", 600, ac8},
      {"AC9", "property suites", 300, ac9},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    all = all && pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << seconds << "s, limit "
         << static_cast<long>(c.limit_seconds) << "s)";
    if (!outcome.pass) line << "  first failure: " << outcome.detail;
    if (!in_time) line << "  over time limit";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
