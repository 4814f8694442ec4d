#include "wdc/geometry.hpp"

#include <array>
#include <cstdlib>

namespace wdc {

const char* to_string(GeometryErrc code) {
  switch (code) {
    case GeometryErrc::CoincidentPoints: return "coincident-points";
    case GeometryErrc::ParallelLines: return "parallel-lines";
    case GeometryErrc::CollinearPoints: return "collinear-points";
    case GeometryErrc::NotIncident: return "not-incident";
    case GeometryErrc::IdenticalCircles: return "identical-circles";
    case GeometryErrc::DegenerateInput: return "degenerate-input";
  }
  return "unknown";
}

GeometryError::GeometryError(GeometryErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Point operator/(const Point& p, const Point& q) {
  const Scalar denom = norm2(q);
  if (denom == 0) throw GeometryError(GeometryErrc::DegenerateInput, "complex division by zero");
  return {(p.x * q.x + p.y * q.y) / denom, (p.y * q.x - p.x * q.y) / denom};
}

Scalar dot(const Point& p, const Point& q) { return p.x * q.x + p.y * q.y; }
Scalar cross(const Point& p, const Point& q) { return p.x * q.y - p.y * q.x; }
Scalar norm2(const Point& p) { return dot(p, p); }
Scalar distance2(const Point& p, const Point& q) { return norm2(p - q); }

Point midpoint(const Point& p, const Point& q) {
  const Scalar half(1, 2);
  return half * (p + q);
}

Point rot90(const Point& p) { return {-p.y, p.x}; }

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

// ---------------------------------------------------------------------------
// Line

Line Line::from_coefficients(const Scalar& l, const Scalar& m, const Scalar& n) {
  if (l == 0 && m == 0) {
    throw GeometryError(GeometryErrc::DegenerateInput, "line with zero normal");
  }
  mpz_class denom_lcm = 1;
  for (const Scalar* c : {&l, &m, &n}) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c->get_den_mpz_t());

  std::array<mpz_class, 3> ints;
  const std::array<const Scalar*, 3> coeffs{&l, &m, &n};
  mpz_class common = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    ints[i] = coeffs[i]->get_num() * (denom_lcm / coeffs[i]->get_den());
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), ints[i].get_mpz_t());
  }
  int leading = 0;
  for (const auto& v : ints) {
    if (v != 0) {
      leading = sgn(v);
      break;
    }
  }
  if (leading < 0) common = -common;
  return Line(Scalar(ints[0] / common), Scalar(ints[1] / common), Scalar(ints[2] / common));
}

Scalar Line::evaluate(const Point& p) const { return l_ * p.x + m_ * p.y + n_; }

std::string to_string(const Line& line) {
  std::string out;
  auto term = [&out](const Scalar& c, const char* var) {
    if (c == 0) return;
    const bool negative = c < 0;
    const mpz_class mag = abs(c.get_num());
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (*var == '\0' || mag != 1) out += mag.get_str();
    out += var;
  };
  term(line.l(), "x");
  term(line.m(), "y");
  term(line.n(), "");
  return out + " = 0";
}

// ---------------------------------------------------------------------------
// Circle

Circle::Circle(Point center, Scalar radius_squared)
    : center_(std::move(center)), radius_squared_(std::move(radius_squared)) {
  if (radius_squared_ <= 0) {
    throw GeometryError(GeometryErrc::DegenerateInput, "circle radius squared must be positive");
  }
}

Scalar Circle::power(const Point& p) const { return distance2(p, center_) - radius_squared_; }

std::string to_string(const Circle& circle) {
  return "center " + to_string(circle.center()) + ", r^2 = " + to_string(circle.radius_squared());
}

// ---------------------------------------------------------------------------
// Similarity

Similarity::Similarity(Point alpha, Point beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.x == 0 && alpha_.y == 0) {
    throw GeometryError(GeometryErrc::DegenerateInput, "similarity with zero multiplier");
  }
}

std::optional<Point> Similarity::fixed_point() const {
  const Point one(Scalar(1), Scalar(0));
  if (alpha_ == one) return std::nullopt;
  return beta_ / (one - alpha_);
}

Similarity Similarity::inverse() const {
  const Point one(Scalar(1), Scalar(0));
  const Point inv = one / alpha_;
  return Similarity(inv, -(inv * beta_));
}

Similarity Similarity::after(const Similarity& first) const {
  return Similarity(alpha_ * first.alpha_, alpha_ * first.beta_ + beta_);
}

// ---------------------------------------------------------------------------
// Constructions

std::string to_string(const CircleParameter& t) { return t.is_infinite() ? "inf" : to_string(t.value()); }

Point point_on_unit_circle(const CircleParameter& t) {
  if (t.is_infinite()) return {Scalar(-1), Scalar(0)};
  const Scalar& v = t.value();
  const Scalar t2 = v * v;
  const Scalar denom = 1 + t2;
  return {(1 - t2) / denom, 2 * v / denom};
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw GeometryError(GeometryErrc::CoincidentPoints, "line through " + to_string(p) + " twice");
  const Point d = q - p;
  // Normal (d.y, -d.x); n makes p incident.
  return Line::from_coefficients(d.y, -d.x, cross(d, p));
}

Point meet(const Line& first, const Line& second) {
  const Scalar det = first.l() * second.m() - first.m() * second.l();
  if (det == 0) {
    throw GeometryError(GeometryErrc::ParallelLines, to_string(first) + " and " + to_string(second));
  }
  return {(first.m() * second.n() - first.n() * second.m()) / det,
          (first.n() * second.l() - first.l() * second.n()) / det};
}

Line perpendicular_bisector(const Point& p, const Point& q) {
  if (p == q) throw GeometryError(GeometryErrc::CoincidentPoints, "bisector of " + to_string(p) + " with itself");
  const Point d = q - p;
  const Point mid = midpoint(p, q);
  return Line::from_coefficients(d.x, d.y, -dot(d, mid));
}

Line perpendicular_at(const Point& p, const Line& line) {
  const Point d = line.direction();
  return Line::from_coefficients(d.x, d.y, -dot(d, p));
}

Line parallel_through(const Point& p, const Line& line) {
  return Line::from_coefficients(line.l(), line.m(), -(line.l() * p.x + line.m() * p.y));
}

Point circumcenter(const Point& p, const Point& q, const Point& r) {
  if (orientation(p, q, r) == 0) {
    throw GeometryError(GeometryErrc::CollinearPoints,
                        to_string(p) + ", " + to_string(q) + ", " + to_string(r) + " have no circumcircle");
  }
  return meet(perpendicular_bisector(p, q), perpendicular_bisector(p, r));
}

Circle circle_through(const Point& p, const Point& q, const Point& r) {
  Point center = circumcenter(p, q, r);
  Scalar r2 = distance2(center, p);
  return Circle(std::move(center), std::move(r2));
}

SecondIntersection second_intersection(const Circle& circle, const Line& line, const Point& known) {
  if (!incident(circle, known) || !incident(line, known)) {
    throw GeometryError(GeometryErrc::NotIncident, to_string(known) + " is not a common point");
  }
  // known + t*d solves |known + t*d - c|^2 = r^2; t = 0 is the known root.
  const Point d = line.direction();
  const Scalar t = -2 * dot(d, known - circle.center()) / norm2(d);
  if (t == 0) return {known, true};
  return {known + t * d, false};
}

Line radical_axis(const Circle& c1, const Circle& c2) {
  if (c1 == c2) throw GeometryError(GeometryErrc::IdenticalCircles, to_string(c1));
  if (c1.center() == c2.center()) {
    throw GeometryError(GeometryErrc::NotIncident, "concentric circles have no radical axis");
  }
  const Point& a = c1.center();
  const Point& b = c2.center();
  // Difference of x^2 + y^2 - 2c.p + |c|^2 - r^2 = 0 for both circles.
  return Line::from_coefficients(2 * (b.x - a.x), 2 * (b.y - a.y),
                                 norm2(a) - c1.radius_squared() - norm2(b) + c2.radius_squared());
}

SecondIntersection second_intersection(const Circle& c1, const Circle& c2, const Point& known) {
  if (c1 == c2) throw GeometryError(GeometryErrc::IdenticalCircles, to_string(c1));
  if (!incident(c1, known) || !incident(c2, known)) {
    throw GeometryError(GeometryErrc::NotIncident, to_string(known) + " is not on both circles");
  }
  return second_intersection(c1, radical_axis(c1, c2), known);
}

Point antipode(const Circle& circle, const Point& p) {
  if (!incident(circle, p)) throw GeometryError(GeometryErrc::NotIncident, to_string(p) + " is off the circle");
  return 2 * circle.center() - p;
}

Line tangent_at(const Circle& circle, const Point& p) {
  if (!incident(circle, p)) throw GeometryError(GeometryErrc::NotIncident, to_string(p) + " is off the circle");
  const Point radius = p - circle.center();
  return Line::from_coefficients(radius.x, radius.y, -dot(radius, p));
}

Point orthocentre(const Point& p, const Point& q, const Point& r) {
  const Point center = circumcenter(p, q, r);
  Point h = meet(perpendicular_at(p, line_through(q, r)), perpendicular_at(q, line_through(p, r)));
  if (h != p + q + r - 2 * center) {
    throw std::logic_error("orthocentre cross-check failed for " + to_string(p) + ", " + to_string(q) + ", " +
                           to_string(r));
  }
  return h;
}

Scalar orientation(const Point& p, const Point& q, const Point& r) { return cross(q - p, r - p); }

bool is_collinear(const Point& p, const Point& q, const Point& r) { return orientation(p, q, r) == 0; }

Scalar concyclic_determinant(const Point& p, const Point& q, const Point& r, const Point& s) {
  // Subtracting row p from the others leaves (dx, dy, dw, 0); expanding along
  // the constant column gives det4 = -det3.
  const Scalar wp = norm2(p);
  std::array<std::array<Scalar, 3>, 3> m;
  const std::array<const Point*, 3> rows{&q, &r, &s};
  for (std::size_t i = 0; i < 3; ++i) {
    m[i] = {rows[i]->x - p.x, rows[i]->y - p.y, norm2(*rows[i]) - wp};
  }
  const Scalar det3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return -det3;
}

Concyclicity classify_concyclic(const Point& p, const Point& q, const Point& r, const Point& s) {
  if (concyclic_determinant(p, q, r, s) != 0) return Concyclicity::NotConcyclic;
  const bool on_one_line =
      is_collinear(p, q, r) && is_collinear(p, q, s) && is_collinear(p, r, s) && is_collinear(q, r, s);
  return on_one_line ? Concyclicity::Collinear : Concyclicity::Concyclic;
}

bool is_concyclic(const Point& p, const Point& q, const Point& r, const Point& s) {
  return classify_concyclic(p, q, r, s) == Concyclicity::Concyclic;
}

bool incident(const Line& line, const Point& p) { return line.evaluate(p) == 0; }
bool incident(const Circle& circle, const Point& p) { return circle.power(p) == 0; }

std::optional<Similarity> similarity_between(std::span<const Point> source, std::span<const Point> target) {
  if (source.size() != target.size() || source.size() < 2) {
    throw GeometryError(GeometryErrc::DegenerateInput, "similarity needs two equal-length lists of >= 2 points");
  }
  if (source[0] == source[1]) {
    throw GeometryError(GeometryErrc::DegenerateInput, "first two source points coincide");
  }
  const Point alpha = (target[1] - target[0]) / (source[1] - source[0]);
  if (alpha.x == 0 && alpha.y == 0) return std::nullopt;
  Similarity map(alpha, target[0] - alpha * source[0]);
  for (std::size_t k = 2; k < source.size(); ++k) {
    if (map.apply(source[k]) != target[k]) return std::nullopt;
  }
  return map;
}

}  // namespace wdc
