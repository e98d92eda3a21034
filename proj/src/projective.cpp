#include "hfg/projective.hpp"

#include "hfg/error.hpp"

#include <numeric>
#include <sstream>

namespace hfg {

namespace {

std::array<Rational, 3> normalize_triple(std::array<Rational, 3> v, const char* what) {
  std::size_t k = 0;
  while (k < 3 && v[k] == 0) ++k;
  if (k == 3) throw DomainError(std::string(what) + ": all coordinates are zero");
  const Rational inv = 1 / v[k];
  for (auto& c : v) c *= inv;
  return v;
}

std::string triple_string(const std::array<Rational, 3>& v) {
  return to_compact_string(v[0]) + ":" + to_compact_string(v[1]) + ":" + to_compact_string(v[2]);
}

} // namespace

Point::Point(Rational p0, Rational p1, Rational p2)
    : coords_(normalize_triple({std::move(p0), std::move(p1), std::move(p2)}, "point")) {}

std::array<Integer, 3> Point::primitive_integer_coords() const {
  Integer l = 1;
  for (const auto& c : coords_) l = lcm(l, c.get_den());
  std::array<Integer, 3> out;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = coords_[i].get_num() * (l / coords_[i].get_den());
    g = gcd(g, out[i]);
  }
  for (auto& v : out) v /= g;
  return out;
}

std::string Point::to_string() const { return triple_string(coords_); }

Line::Line(Rational c0, Rational c1, Rational c2)
    : coeffs_(normalize_triple({std::move(c0), std::move(c1), std::move(c2)}, "line")) {}

bool Line::contains(const Point& p) const {
  return coeffs_[0] * p[0] + coeffs_[1] * p[1] + coeffs_[2] * p[2] == 0;
}

Polynomial Line::form() const { return Polynomial::linear_form(plane_block(), coeffs_); }

std::string Line::to_string() const { return form().to_string(); }

std::optional<Point> hadamard_point(const Point& p, const Point& q) {
  std::array<Rational, 3> v{p[0] * q[0], p[1] * q[1], p[2] * q[2]};
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) return std::nullopt;
  return Point(v);
}

int delta_index(const Point& p) {
  int nonzero = 0;
  for (const auto& c : p.coords())
    if (c != 0) ++nonzero;
  return nonzero - 1;
}

Point reciprocal(const Point& p) {
  for (const auto& c : p.coords())
    if (c == 0) throw DomainError("reciprocal: point " + p.to_string() + " has a zero coordinate");
  return Point(1 / p[0], 1 / p[1], 1 / p[2]);
}

IdealPresentation point_ideal(const Point& p) {
  const BlockPtr& block = plane_block();
  std::size_t k = 0;
  while (p[k] == 0) ++k; // p[k] == 1 after normalization
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == k) continue;
    std::array<Rational, 3> c{0, 0, 0};
    c[j] = 1;
    c[k] = -p[j];
    gens.push_back(Polynomial::linear_form(block, c));
  }
  return IdealPresentation(block, std::move(gens));
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw DomainError("line_through: the points coincide");
  return Line(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]);
}

bool is_collinear(std::span<const Point> points) {
  std::size_t second = 1;
  while (second < points.size() && points[second] == points[0]) ++second;
  if (second >= points.size()) return true;
  const Line l = line_through(points[0], points[second]);
  for (const auto& p : points)
    if (!l.contains(p)) return false;
  return true;
}

Line hadamard_line_point(const Line& line, const Point& p) {
  if (!off_coordinate_lines(p))
    throw DomainError("hadamard_line_point: point " + p.to_string() + " lies on a coordinate line");
  const Polynomial t = hadamard_transform(line.form(), p.span());
  std::array<Rational, 3> c;
  for (std::size_t i = 0; i < 3; ++i) {
    Monomial m(3);
    m.set(i, 1);
    c[i] = t.coefficient(m);
  }
  return Line(c);
}

Point parse_point(std::string_view text) {
  std::array<Rational, 3> v;
  std::size_t i = 0;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    if (i == 3) throw ParseError("point '" + std::string(text) + "' has more than three coordinates");
    v[i++] = parse_rational(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (i != 3) throw ParseError("point '" + std::string(text) + "' needs three coordinates p0:p1:p2");
  try {
    return Point(v);
  } catch (const DomainError& e) {
    throw ParseError(std::string("point '") + std::string(text) + "': " + e.what());
  }
}

} // namespace hfg
