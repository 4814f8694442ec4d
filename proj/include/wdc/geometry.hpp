#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "wdc/scalar.hpp"

namespace wdc {

enum class GeometryErrc {
  CoincidentPoints,
  ParallelLines,
  CollinearPoints,
  NotIncident,
  IdenticalCircles,
  DegenerateInput,
};

const char* to_string(GeometryErrc code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrc code, const std::string& what);
  GeometryErrc code() const noexcept { return code_; }

 private:
  GeometryErrc code_;
};

/// A point of the rational plane. It doubles as the complex number x + iy,
/// which is how direct similarities are expressed.
struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar px, Scalar py) : x(std::move(px)), y(std::move(py)) {}

  friend bool operator==(const Point&, const Point&) = default;

  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator-(const Point& p) { return {-p.x, -p.y}; }
  friend Point operator*(const Scalar& k, const Point& p) { return {k * p.x, k * p.y}; }
  friend Point operator*(const Point& p, const Scalar& k) { return k * p; }

  // Complex product and quotient.
  friend Point operator*(const Point& p, const Point& q) {
    return {p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x};
  }
  friend Point operator/(const Point& p, const Point& q);
};

Scalar dot(const Point& p, const Point& q);
Scalar cross(const Point& p, const Point& q);
/// |p|^2, also the squared modulus of p read as a complex number.
Scalar norm2(const Point& p);
Scalar distance2(const Point& p, const Point& q);
Point midpoint(const Point& p, const Point& q);
/// Quarter turn counter-clockwise, i.e. multiplication by i.
Point rot90(const Point& p);

std::string to_string(const Point& p);

/// The locus l*x + m*y + n = 0, held in normal form: coprime integer
/// coefficients whose first nonzero entry is positive. Two Line values compare
/// equal exactly when they describe the same line.
class Line {
 public:
  /// Throws GeometryError(DegenerateInput) when l = m = 0.
  static Line from_coefficients(const Scalar& l, const Scalar& m, const Scalar& n);

  const Scalar& l() const { return l_; }
  const Scalar& m() const { return m_; }
  const Scalar& n() const { return n_; }

  /// l*x + m*y + n; zero exactly on the line.
  Scalar evaluate(const Point& p) const;
  Point normal() const { return {l_, m_}; }
  Point direction() const { return {-m_, l_}; }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line(Scalar l, Scalar m, Scalar n) : l_(std::move(l)), m_(std::move(m)), n_(std::move(n)) {}
  Scalar l_;
  Scalar m_;
  Scalar n_;
};

/// "l*x + m*y + n = 0" with integer coefficients, e.g. "1x - 3y + 11 = 0".
std::string to_string(const Line& line);

class Circle {
 public:
  /// Throws GeometryError(DegenerateInput) unless radius_squared > 0.
  Circle(Point center, Scalar radius_squared);

  const Point& center() const { return center_; }
  const Scalar& radius_squared() const { return radius_squared_; }

  /// |p - center|^2 - r^2.
  Scalar power(const Point& p) const;

  friend bool operator==(const Circle&, const Circle&) = default;

 private:
  Point center_;
  Scalar radius_squared_;
};

std::string to_string(const Circle& circle);

/// Direct similarity z -> alpha*z + beta of the complex plane.
class Similarity {
 public:
  /// Throws GeometryError(DegenerateInput) when alpha = 0.
  Similarity(Point alpha, Point beta);

  const Point& alpha() const { return alpha_; }
  const Point& beta() const { return beta_; }

  Point apply(const Point& z) const { return alpha_ * z + beta_; }
  Scalar ratio_squared() const { return norm2(alpha_); }
  bool is_congruence() const { return ratio_squared() == 1; }
  /// beta / (1 - alpha); absent for pure translations and the identity.
  std::optional<Point> fixed_point() const;

  Similarity inverse() const;
  /// (*this) after (first): z -> this(first(z)).
  Similarity after(const Similarity& first) const;

  friend bool operator==(const Similarity&, const Similarity&) = default;

 private:
  Point alpha_;
  Point beta_;
};

/// Tangent-half-angle parameter for the unit circle; the infinite parameter
/// names (-1, 0), the one point the rational sweep misses.
class CircleParameter {
 public:
  CircleParameter(Scalar t) : value_(std::move(t)) {}  // NOLINT(google-explicit-constructor)
  static CircleParameter infinity() { return CircleParameter(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: !is_infinite().
  const Scalar& value() const { return *value_; }

  friend bool operator==(const CircleParameter&, const CircleParameter&) = default;

 private:
  CircleParameter() = default;
  std::optional<Scalar> value_;
};

std::string to_string(const CircleParameter& t);

Point point_on_unit_circle(const CircleParameter& t);

Line line_through(const Point& p, const Point& q);
Point meet(const Line& first, const Line& second);
Line perpendicular_bisector(const Point& p, const Point& q);
Line perpendicular_at(const Point& p, const Line& line);
Line parallel_through(const Point& p, const Line& line);

Point circumcenter(const Point& p, const Point& q, const Point& r);
Circle circle_through(const Point& p, const Point& q, const Point& r);

struct SecondIntersection {
  Point point;
  /// The carriers touch at the known point, which is then returned as point.
  bool tangent = false;
};

/// Other common point of a circle and a line through a known common point.
/// One root of the quadratic is known, so the other is rational.
SecondIntersection second_intersection(const Circle& circle, const Line& line, const Point& known);

/// Throws IdenticalCircles for c1 == c2, NotIncident if known misses either
/// circle.
Line radical_axis(const Circle& c1, const Circle& c2);
SecondIntersection second_intersection(const Circle& c1, const Circle& c2, const Point& known);

Point antipode(const Circle& circle, const Point& p);
Line tangent_at(const Circle& circle, const Point& p);

Point orthocentre(const Point& p, const Point& q, const Point& r);

/// The orientation determinant (q - p) x (r - p).
Scalar orientation(const Point& p, const Point& q, const Point& r);
bool is_collinear(const Point& p, const Point& q, const Point& r);

enum class Concyclicity { Concyclic, NotConcyclic, Collinear };

/// det of the rows (x, y, x^2 + y^2, 1); zero iff the four points share a
/// circle or a line.
Scalar concyclic_determinant(const Point& p, const Point& q, const Point& r, const Point& s);
/// A quadruple lying on one line is reported as Collinear, never Concyclic.
Concyclicity classify_concyclic(const Point& p, const Point& q, const Point& r, const Point& s);
bool is_concyclic(const Point& p, const Point& q, const Point& r, const Point& s);

bool incident(const Line& line, const Point& p);
bool incident(const Circle& circle, const Point& p);

/// The direct similarity sending source[k] to target[k] for every k, if one
/// exists. Throws DegenerateInput on size mismatch, fewer than two points, or
/// source[0] == source[1].
std::optional<Similarity> similarity_between(std::span<const Point> source,
                                             std::span<const Point> target);

}  // namespace wdc
