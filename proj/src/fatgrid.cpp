#include "hfg/fatgrid.hpp"

#include "hfg/error.hpp"

#include <algorithm>
#include <numeric>

namespace hfg {

WeightedPointSet WeightedPointSet::make(std::vector<Point> points, std::vector<unsigned> multiplicities,
                                        std::optional<Line> line) {
  if (points.empty()) throw InvalidGrid("point set is empty");
  if (points.size() != multiplicities.size())
    throw InvalidGrid("point set has " + std::to_string(points.size()) + " points but " +
                      std::to_string(multiplicities.size()) + " multiplicities");
  for (unsigned m : multiplicities)
    if (m == 0) throw InvalidGrid("multiplicities must be positive");
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (!off_coordinate_lines(points[a]))
      throw InvalidGrid("point " + points[a].to_string() + " lies on a coordinate line");
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (points[a] == points[b]) throw InvalidGrid("point " + points[a].to_string() + " is repeated");
  }
  if (points.size() >= 2) {
    if (!is_collinear(points)) throw InvalidGrid("points are not collinear");
    const Line through = line_through(points[0], points[1]);
    if (line && !(*line == through)) throw InvalidGrid("points do not lie on the given line");
    line = through;
  } else if (line && !line->contains(points[0])) {
    throw InvalidGrid("point does not lie on the given line");
  }

  std::vector<std::size_t> perm(points.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return multiplicities[a] < multiplicities[b]; });
  WeightedPointSet out;
  for (std::size_t k : perm) {
    out.points.push_back(points[k]);
    out.multiplicities.push_back(multiplicities[k]);
  }
  out.line = line;
  return out;
}

unsigned GeneratorPattern::degree() const {
  return std::accumulate(h_exponents.begin(), h_exponents.end(), 0u) +
         std::accumulate(v_exponents.begin(), v_exponents.end(), 0u);
}

std::vector<std::vector<unsigned>> FatGrid::multiplicity_matrix() const {
  std::vector<std::vector<unsigned>> out(r(), std::vector<unsigned>(s()));
  for (std::size_t i = 0; i < r(); ++i)
    for (std::size_t j = 0; j < s(); ++j) out[i][j] = multiplicity(i, j);
  return out;
}

unsigned FatGrid::total_multiplicity() const {
  unsigned sum = 0;
  for (std::size_t i = 0; i < r(); ++i)
    for (std::size_t j = 0; j < s(); ++j) sum += multiplicity(i, j);
  return sum;
}

namespace {

struct Lines {
  std::vector<Line> h, v;
};

Lines grid_lines(const WeightedPointSet& rows, const WeightedPointSet& cols) {
  Lines out;
  const std::size_t r = rows.size(), s = cols.size();
  for (std::size_t k = 0; k < r; ++k) out.h.push_back(hadamard_line_point(*cols.line, rows.points[r - 1 - k]));
  for (std::size_t k = 0; k < s; ++k) out.v.push_back(hadamard_line_point(*rows.line, cols.points[s - 1 - k]));
  return out;
}

// Empty string when the incidence structure is an (r, s) complete-intersection grid.
std::string structure_problem(const std::vector<Point>& pts, std::size_t s, const Lines& lines) {
  std::vector<Line> all = lines.h;
  all.insert(all.end(), lines.v.begin(), lines.v.end());
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (all[a] == all[b]) return "grid lines " + all[a].to_string() + " coincide";
  const std::size_t r = pts.size() / s;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const Point& p = pts[i * s + j];
      std::size_t on_h = 0, on_v = 0;
      for (const auto& l : lines.h) on_h += l.contains(p);
      for (const auto& l : lines.v) on_v += l.contains(p);
      if (on_h != 1 || on_v != 1 || !lines.h[r - 1 - i].contains(p) || !lines.v[s - 1 - j].contains(p))
        return "grid point " + p.to_string() + " is not on exactly one horizontal and one vertical line";
    }
  }
  return {};
}

std::vector<Line> candidate_lines(const Point& p) {
  std::vector<Line> out;
  for (std::size_t k = 0; k < 3; ++k) {
    std::array<Rational, 3> e{0, 0, 0};
    e[k] = 1;
    out.push_back(line_through(p, Point(e)));
  }
  out.push_back(line_through(p, Point(1, 2, 3)));
  out.push_back(line_through(p, Point(3, 1, 2)));
  return out;
}

} // namespace

FatGrid build_grid(WeightedPointSet row_set, WeightedPointSet col_set) {
  FatGrid g;
  if (row_set.size() > col_set.size()) {
    std::swap(row_set, col_set);
    g.swapped_ = true;
  }
  const std::size_t r = row_set.size(), s = col_set.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      auto p = hadamard_point(row_set.points[i], col_set.points[j]);
      if (!p) throw InvalidGrid("Hadamard product of grid inputs is undefined");
      g.points_.push_back(*p);
    }
  }
  for (std::size_t a = 0; a < g.points_.size(); ++a)
    for (std::size_t b = a + 1; b < g.points_.size(); ++b)
      if (g.points_[a] == g.points_[b])
        throw InvalidGrid("duplicate grid point " + g.points_[a].to_string());

  // Singleton sets have no determined line; pick the first candidate that
  // yields a valid grid.
  std::vector<Line> row_candidates = row_set.line ? std::vector<Line>{*row_set.line} : candidate_lines(row_set.points[0]);
  std::vector<Line> col_candidates = col_set.line ? std::vector<Line>{*col_set.line} : candidate_lines(col_set.points[0]);
  std::string problem = "no admissible supporting lines";
  for (const auto& lp : row_candidates) {
    for (const auto& lq : col_candidates) {
      row_set.line = lp;
      col_set.line = lq;
      Lines lines = grid_lines(row_set, col_set);
      problem = structure_problem(g.points_, s, lines);
      if (problem.empty()) {
        g.h_lines_ = std::move(lines.h);
        g.v_lines_ = std::move(lines.v);
        g.rows_ = std::move(row_set);
        g.cols_ = std::move(col_set);
        return g;
      }
    }
  }
  throw InvalidGrid(problem);
}

FatGrid abstract_grid(std::vector<unsigned> m, std::vector<unsigned> n) {
  std::sort(m.begin(), m.end());
  std::sort(n.begin(), n.end());
  std::vector<Point> ps, qs;
  for (std::size_t i = 1; i <= m.size(); ++i) ps.emplace_back(1, 1, static_cast<long>(i) + 1);
  for (std::size_t j = 1; j <= n.size(); ++j) qs.emplace_back(1, static_cast<long>(j) + 1, 1);
  auto rows = WeightedPointSet::make(std::move(ps), std::move(m), Line(1, -1, 0));
  auto cols = WeightedPointSet::make(std::move(qs), std::move(n), Line(1, 0, -1));
  return build_grid(std::move(rows), std::move(cols));
}

FatGrid symbolic_grid(const FatGrid& grid, unsigned t) {
  if (t == 0) throw DomainError("symbolic_grid: t must be at least 1");
  FatGrid out = grid;
  for (auto& m : out.rows_.multiplicities) m = t * m - (t - 1);
  for (auto& n : out.cols_.multiplicities) n = t * n;
  return out;
}

Polynomial expand_pattern(const FatGrid& grid, const GeneratorPattern& pattern) {
  if (pattern.h_exponents.size() != grid.r() || pattern.v_exponents.size() != grid.s())
    throw DomainError("generator pattern does not match the grid shape");
  if (pattern.degree() == 0) throw DomainError("generator pattern has no factors");
  Polynomial p = Polynomial::constant(plane_block(), 1);
  for (std::size_t i = 0; i < grid.r(); ++i)
    if (pattern.h_exponents[i]) p *= grid.h_lines()[i].form().pow(pattern.h_exponents[i]);
  for (std::size_t j = 0; j < grid.s(); ++j)
    if (pattern.v_exponents[j]) p *= grid.v_lines()[j].form().pow(pattern.v_exponents[j]);
  return p;
}

IdealPresentation pattern_ideal(const FatGrid& grid, std::span<const GeneratorPattern> patterns) {
  std::vector<Polynomial> gens;
  for (const auto& pat : patterns) gens.push_back(expand_pattern(grid, pat));
  return IdealPresentation(plane_block(), std::move(gens));
}

IdealPresentation grid_ideal_intersection(const FatGrid& grid, const OracleBudget& budget,
                                          std::span<const std::size_t> fold_order) {
  if (grid.total_multiplicity() > budget.max_total_multiplicity)
    throw BudgetExceeded("grid oracle: total multiplicity " + std::to_string(grid.total_multiplicity()) +
                         " exceeds the budget of " + std::to_string(budget.max_total_multiplicity));
  const std::size_t count = grid.r() * grid.s();
  std::vector<std::size_t> order(fold_order.begin(), fold_order.end());
  if (order.empty()) {
    order.resize(count);
    std::iota(order.begin(), order.end(), 0);
  }
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  for (std::size_t k = 0; k < check.size(); ++k)
    if (check.size() != count || check[k] != k) throw DomainError("fold order is not a permutation of the grid points");

  std::vector<std::optional<IdealPresentation>> powers(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t i = k / grid.s(), j = k % grid.s();
    IdealPresentation p = ideal_power(point_ideal(grid.point(i, j)), grid.multiplicity(i, j));
    p.groebner_basis();
    powers[k] = std::move(p);
  }
  IdealPresentation acc = *powers[order[0]];
  for (std::size_t k = 1; k < count; ++k) acc = ideal_intersection(acc, *powers[order[k]]);
  return acc;
}

} // namespace hfg
