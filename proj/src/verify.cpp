#include "hfg/verify.hpp"

#include "hfg/error.hpp"
#include "hfg/invariants.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace hfg {

unsigned vanishing_order(const Polynomial& f, const Point& p) {
  if (!same_block(f.block(), plane_block())) throw DomainError("vanishing_order: polynomial is not over x0, x1, x2");
  if (f.is_zero()) return kInfiniteOrder;
  if (!f.is_homogeneous()) throw DomainError("vanishing_order: polynomial is not homogeneous");

  std::size_t k = 2;
  while (sgn(p[k]) == 0) --k;
  const BlockPtr& block = f.block();

  // Dehomogenize at x_k and move P to the origin: x_j -> x_j + p_j / p_k.
  std::array<std::vector<Polynomial>, 3> powers;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == k) continue;
    powers[j].push_back(Polynomial::constant(block, 1));
    powers[j].push_back(Polynomial::variable(block, j) + Polynomial::constant(block, p[j] / p[k]));
  }
  auto power = [&](std::size_t j, unsigned e) -> const Polynomial& {
    while (powers[j].size() <= e) powers[j].push_back(powers[j].back() * powers[j][1]);
    return powers[j][e];
  };

  std::map<std::array<unsigned, 3>, Rational> shifted;
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(block, t.coeff);
    for (std::size_t j = 0; j < 3; ++j)
      if (j != k) prod *= power(j, t.monomial[j]);
    for (const Term& s : prod.terms()) shifted[{s.monomial[0], s.monomial[1], s.monomial[2]}] += s.coeff;
  }
  unsigned order = kInfiniteOrder;
  for (const auto& [e, c] : shifted)
    if (sgn(c) != 0) order = std::min(order, e[0] + e[1] + e[2]);
  return order;
}

std::vector<FatPoint> grid_fat_points(const FatGrid& grid) {
  std::vector<FatPoint> out;
  for (std::size_t i = 0; i < grid.r(); ++i)
    for (std::size_t j = 0; j < grid.s(); ++j)
      out.push_back({grid.point(i, j).primitive_integer_coords(), grid.multiplicity(i, j)});
  return out;
}

std::int64_t hilbert_function_oracle(std::span<const FatPoint> points, unsigned d, const VerifyBudget& budget,
                                     std::uint64_t* work) {
  const std::size_t rows = condition_rows(points, d);
  const std::size_t cols = std::size_t(d + 1) * (d + 2) / 2;
  if (rows > budget.max_matrix_dim || cols > budget.max_matrix_dim) {
    std::ostringstream msg;
    msg << "condition matrix " << rows << "x" << cols << " exceeds the limit " << budget.max_matrix_dim;
    throw BudgetExceeded(msg.str());
  }
  if (work) *work += rows * cols;
  return static_cast<std::int64_t>(cols) - static_cast<std::int64_t>(exact_rank(condition_matrix(points, d)));
}

std::int64_t hilbert_function_oracle(const FatGrid& grid, unsigned d, const VerifyBudget& budget,
                                     std::uint64_t* work) {
  const auto points = grid_fat_points(grid);
  return hilbert_function_oracle(points, d, budget, work);
}

bool VerificationReport::passed() const {
  return std::all_of(instances_.begin(), instances_.end(), [](const VerificationInstance& i) { return i.pass; });
}

void VerificationReport::append(const VerificationReport& other) {
  instances_.insert(instances_.end(), other.instances_.begin(), other.instances_.end());
  budget_used_ += other.budget_used_;
}

std::string describe(const IdealPresentation& ideal) {
  std::string out = "<";
  const auto& basis = ideal.groebner_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) out += ", ";
    out += basis[i].to_string();
  }
  return out + ">";
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

Polynomial x(std::size_t i) { return Polynomial::variable(plane_block(), i); }

IdealPresentation generated_by(std::vector<Polynomial> gens) { return IdealPresentation(plane_block(), std::move(gens)); }

// Ideal of all monomials of degree t in the given variables.
IdealPresentation variable_power(std::vector<std::size_t> vars, unsigned t) {
  std::vector<Polynomial> base;
  for (std::size_t v : vars) base.push_back(x(v));
  return ideal_power(generated_by(std::move(base)), t);
}

void add_equality(VerificationReport& report, const std::string& input, const IdealPresentation& expected,
                  const IdealPresentation& computed, bool flagged = false) {
  report.add({input, describe(expected), describe(computed), ideal_equal(expected, computed), flagged});
}

void add_inequality(VerificationReport& report, const std::string& input, const IdealPresentation& other,
                    const IdealPresentation& computed) {
  report.add({input, "not " + describe(other), describe(computed), !ideal_equal(other, computed), false});
}

// Records "small is contained in big".
void add_containment(VerificationReport& report, const std::string& input, const IdealPresentation& small,
                     const IdealPresentation& big) {
  report.add({input, "true", yes_no(big.contains(small)), big.contains(small), false});
}

std::string power_label(const Point& p, unsigned e) { return "I(" + p.to_string() + ")^" + std::to_string(e); }

std::size_t zero_coordinate(const Point& p) {
  for (std::size_t i = 0; i < 3; ++i)
    if (sgn(p[i]) == 0) return i;
  return 3;
}

std::size_t nonzero_coordinate(const Point& p) {
  for (std::size_t i = 0; i < 3; ++i)
    if (sgn(p[i]) != 0) return i;
  return 3;
}

} // namespace

VerificationReport check_point_power_product(const Point& p_in, const Point& q_in, unsigned m_in, unsigned n_in,
                                             const VerifyBudget& budget) {
  if (m_in == 0 || n_in == 0) throw DomainError("check_point_power_product: powers must be at least 1");
  const std::optional<Point> r = hadamard_point(p_in, q_in);
  if (!r) throw DomainError("check_point_power_product: " + p_in.to_string() + " * " + q_in.to_string() +
                            " is undefined");

  // The product is commutative; keep the point with fewer zeros first.
  Point p = p_in, q = q_in;
  unsigned m = m_in, n = n_in;
  if (delta_index(q) > delta_index(p)) {
    std::swap(p, q);
    std::swap(m, n);
  }
  const int dp = delta_index(p), dq = delta_index(q);

  VerificationReport report("point_power_product");
  const IdealPresentation computed =
      hadamard_ideals(ideal_power(point_ideal(p), m), ideal_power(point_ideal(q), n), budget.groebner);
  report.add_work(1);

  const std::string product = power_label(p, m) + " * " + power_label(q, n);
  const IdealPresentation full = ideal_power(point_ideal(*r), m + n - 1);
  const std::string full_label = power_label(*r, m + n - 1);

  if (dp == 2 && dq == 2) {
    add_equality(report, product + " = " + full_label, full, computed);
  } else if (dp == 2 && dq == 0) {
    add_equality(report, product + " = " + power_label(q, n), ideal_power(point_ideal(q), n), computed, m > 1);
  } else if (dp == 2 && dq == 1) {
    if (m == 1) {
      add_equality(report, product + " = " + power_label(*r, n), ideal_power(point_ideal(*r), n), computed);
    } else {
      add_inequality(report, product + " != " + full_label, full, computed);
      add_containment(report, full_label + " in " + product, full, computed);
    }
  } else if (dp == 1 && dq == 1) {
    const unsigned low = std::min(m, n);
    if (m == 1 && n == 1)
      add_equality(report, product + " = " + full_label, full, computed);
    else
      add_inequality(report, product + " != " + full_label, full, computed);
    add_containment(report, full_label + " in " + product, full, computed);
    add_containment(report, product + " in " + power_label(*r, low), computed, ideal_power(point_ideal(*r), low));
    const std::size_t zp = zero_coordinate(p), zq = zero_coordinate(q);
    if (zp != zq) {
      const IdealPresentation expected = generated_by({x(zp).pow(m), x(zq).pow(n)});
      add_equality(report, product + " = <x" + std::to_string(zp) + "^" + std::to_string(m) + ", x" +
                               std::to_string(zq) + "^" + std::to_string(n) + ">",
                   expected, computed);
    }
  } else {
    add_containment(report, full_label + " in " + product, full, computed);
  }
  return report;
}

VerificationReport check_lemma_gpnew(const Point& p, unsigned t, const VerifyBudget& budget) {
  if (t == 0) throw DomainError("check_lemma_gpnew: t must be at least 1");
  VerificationReport report("lemma_gpnew");
  const IdealPresentation mt = irrelevant_power(t);
  const IdealPresentation computed = hadamard_ideals(point_ideal(p), mt, budget.groebner);
  report.add_work(1);
  const std::string product = "I(" + p.to_string() + ") * m^" + std::to_string(t);
  const std::string mt_label = "m^" + std::to_string(t);

  add_containment(report, mt_label + " in " + product, mt, computed);
  switch (delta_index(p)) {
  case 2:
    add_equality(report, product + " = " + mt_label, mt, computed);
    break;
  case 1: {
    const std::size_t z = zero_coordinate(p);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != z) others.push_back(i);
    const IdealPresentation expected = ideal_sum(generated_by({x(z)}), variable_power(others, t));
    add_equality(report, product + " = <x" + std::to_string(z) + "> + <x" + std::to_string(others[0]) + ", x" +
                             std::to_string(others[1]) + ">^" + std::to_string(t),
                 expected, computed);
    break;
  }
  default: {
    const std::size_t k = nonzero_coordinate(p);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != k) gens.push_back(x(i));
    gens.push_back(x(k).pow(t));
    add_equality(report, product + " = <other coordinates> + <x" + std::to_string(k) + "^" + std::to_string(t) + ">",
                 generated_by(std::move(gens)), computed);
    break;
  }
  }
  return report;
}

VerificationReport check_join_symbolic(const Point& p, unsigned t, const VerifyBudget& budget) {
  if (t == 0) throw DomainError("check_join_symbolic: t must be at least 1");
  VerificationReport report("join_symbolic");
  const IdealPresentation computed = join_ideals(point_ideal(p), irrelevant_power(t), budget.groebner);
  report.add_work(1);
  add_equality(report, "I(" + p.to_string() + ") # m^" + std::to_string(t) + " = " + power_label(p, t),
               ideal_power(point_ideal(p), t), computed);
  return report;
}

VerificationReport check_grid_end_to_end(const FatGrid& grid, const VerifyBudget& budget) {
  VerificationReport report("grid_end_to_end");
  const auto patterns = generator_patterns(grid);

  // Every generator vanishes to the required order at every grid point.
  std::vector<VerificationInstance> membership(patterns.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
    const Polynomial f = expand_pattern(grid, patterns[idx]);
    std::string failure;
    for (std::size_t i = 0; i < grid.r() && failure.empty(); ++i) {
      for (std::size_t j = 0; j < grid.s() && failure.empty(); ++j) {
        const unsigned order = vanishing_order(f, grid.point(i, j));
        if (order < grid.multiplicity(i, j))
          failure = "order " + std::to_string(order) + " at " + grid.point(i, j).to_string();
      }
    }
    membership[idx] = {"pattern k=" + std::to_string(patterns[idx].k) + " vanishing orders",
                       "at least the grid multiplicities", failure.empty() ? "at least the grid multiplicities" : failure,
                       failure.empty(), false};
  }
  for (auto& inst : membership) report.add(std::move(inst));

  const IdealPresentation generated = pattern_ideal(grid, patterns);
  const IdealPresentation oracle = grid_ideal_intersection(grid, budget.oracle);
  report.add_work(1 + grid.r() * grid.s());
  report.add({"pattern ideal = intersection of point powers", "equal", ideal_equal(generated, oracle) ? "equal" : "different",
              ideal_equal(generated, oracle), false});

  const ResolutionShifts shifts = resolution(grid);
  const unsigned top = shifts.syzygy_twists.empty() ? shifts.generator_twists.back() : shifts.syzygy_twists.back();
  const auto points = grid_fat_points(grid);
  std::vector<std::int64_t> by_rank(top + 1);
  std::vector<std::uint64_t> work(top + 1, 0);
  std::vector<std::string> errors(top + 1);
#pragma omp parallel for schedule(dynamic)
  for (unsigned d = 0; d <= top; ++d) {
    try {
      by_rank[d] = hilbert_function_oracle(points, d, budget, &work[d]);
    } catch (const BudgetExceeded& e) {
      errors[d] = e.what();
    }
  }
  for (unsigned d = 0; d <= top; ++d) {
    if (!errors[d].empty()) throw BudgetExceeded(errors[d]);
    report.add_work(work[d]);
    const std::int64_t predicted = hilbert_from_resolution(shifts, d);
    report.add({"dim I_" + std::to_string(d), std::to_string(predicted), std::to_string(by_rank[d]),
                predicted == by_rank[d], false});
  }

  unsigned first_nonzero = top + 1;
  for (unsigned d = 0; d <= top; ++d) {
    if (by_rank[d] > 0) {
      first_nonzero = d;
      break;
    }
  }
  const unsigned alpha = alpha_degree(grid);
  report.add({"minimal degree", std::to_string(alpha), std::to_string(first_nonzero), alpha == first_nonzero, false});
  return report;
}

} // namespace hfg
