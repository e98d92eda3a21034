#ifndef HFG_PROJECTIVE_HPP
#define HFG_PROJECTIVE_HPP

#include "hfg/ideal.hpp"
#include "hfg/polynomial.hpp"
#include "hfg/rational.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hfg {

/// Point of the projective plane with exact coordinates, normalized so that
/// the first nonzero coordinate is 1. Equal points have identical triples.
class Point {
public:
  Point(Rational p0, Rational p1, Rational p2);
  explicit Point(const std::array<Rational, 3>& coords) : Point(coords[0], coords[1], coords[2]) {}

  const std::array<Rational, 3>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> span() const { return coords_; }

  /// Proportional integer coordinates with gcd 1 and the same sign pattern.
  std::array<Integer, 3> primitive_integer_coords() const;

  std::string to_string() const;
  bool operator==(const Point&) const = default;

private:
  std::array<Rational, 3> coords_;
};

/// Line {c0 x0 + c1 x1 + c2 x2 = 0}, coefficients normalized as for Point.
class Line {
public:
  Line(Rational c0, Rational c1, Rational c2);
  explicit Line(const std::array<Rational, 3>& coeffs) : Line(coeffs[0], coeffs[1], coeffs[2]) {}

  const std::array<Rational, 3>& coeffs() const { return coeffs_; }
  bool contains(const Point& p) const;
  /// The defining linear form over the plane block.
  Polynomial form() const;

  std::string to_string() const;
  bool operator==(const Line&) const = default;

private:
  std::array<Rational, 3> coeffs_;
};

/// Coordinate-wise product; std::nullopt when every product vanishes.
std::optional<Point> hadamard_point(const Point& p, const Point& q);

/// (number of nonzero coordinates) - 1, so P lies in Delta_i iff the result <= i.
int delta_index(const Point& p);
inline bool off_coordinate_lines(const Point& p) { return delta_index(p) == 2; }

/// Coordinate-wise inverse. Throws DomainError on a zero coordinate.
Point reciprocal(const Point& p);

/// Two linear forms cutting out P: x_j - p_j x_k for the first nonzero
/// coordinate k and j != k.
IdealPresentation point_ideal(const Point& p);

/// Throws DomainError if p == q.
Line line_through(const Point& p, const Point& q);
bool is_collinear(std::span<const Point> points);

/// The line whose form is the Hadamard transform of L's form by P; it contains
/// Q*P for every Q on L. Throws DomainError when P has a zero coordinate.
Line hadamard_line_point(const Line& line, const Point& p);

Point parse_point(std::string_view text);

} // namespace hfg

#endif
