#include <doctest.h>

#include <vector>

#include "wdc/geometry.hpp"

using namespace wdc;

namespace {

Point pt(long x, long y) { return {Scalar(x), Scalar(y)}; }
Point pt(Scalar x, Scalar y) { return {std::move(x), std::move(y)}; }

}  // namespace

TEST_CASE("line normal form") {
  const Line l = Line::from_coefficients(Scalar(2, 3), Scalar(-2), Scalar(22, 3));
  CHECK(l.l() == 1);
  CHECK(l.m() == -3);
  CHECK(l.n() == 11);
  CHECK(to_string(l) == "x - 3y + 11 = 0");
  CHECK(Line::from_coefficients(-2, 6, -22) == l);
  CHECK(Line::from_coefficients(0, -4, 2) == Line::from_coefficients(0, 2, -1));
  CHECK_THROWS_AS(Line::from_coefficients(0, 0, 1), GeometryError);
}

TEST_CASE("line through and meet") {
  const Line l = line_through(pt(0, 0), pt(2, 2));
  const Line m = line_through(pt(0, 2), pt(2, 0));
  CHECK(meet(l, m) == pt(1, 1));
  CHECK(incident(l, pt(-5, -5)));
  CHECK_THROWS_AS(line_through(pt(1, 1), pt(1, 1)), GeometryError);
  try {
    meet(l, parallel_through(pt(0, 1), l));
    FAIL("expected ParallelLines");
  } catch (const GeometryError& e) {
    CHECK(e.code() == GeometryErrc::ParallelLines);
  }
}

TEST_CASE("perpendiculars") {
  const Line b = perpendicular_bisector(pt(0, 0), pt(4, 0));
  CHECK(incident(b, pt(2, 7)));
  const Line l = line_through(pt(0, 0), pt(1, 2));
  const Line p = perpendicular_at(pt(1, 2), l);
  CHECK(incident(p, pt(1, 2)));
  CHECK(dot(p.direction(), l.direction()) == 0);
}

TEST_CASE("circumcenter and circle through three points") {
  CHECK(circumcenter(pt(1, 0), pt(0, 1), pt(-1, 0)) == pt(0, 0));
  const Circle c = circle_through(pt(0, 3), pt(4, 3), pt(0, -1));
  CHECK(c.center() == pt(2, 1));
  CHECK(c.radius_squared() == 8);
  CHECK(c.power(pt(4, -1)) == 0);
  CHECK_THROWS_AS(circle_through(pt(0, 0), pt(1, 1), pt(2, 2)), GeometryError);
  CHECK_THROWS_AS(Circle(pt(0, 0), Scalar(0)), GeometryError);
}

TEST_CASE("second intersection with a line") {
  const Circle unit(pt(0, 0), Scalar(1));
  const auto hit = second_intersection(unit, line_through(pt(1, 0), pt(0, 1)), pt(1, 0));
  CHECK_FALSE(hit.tangent);
  CHECK(hit.point == pt(0, 1));
  const auto touch = second_intersection(unit, line_through(pt(1, 0), pt(1, 5)), pt(1, 0));
  CHECK(touch.tangent);
  CHECK(touch.point == pt(1, 0));
}

TEST_CASE("second intersection of two circles") {
  const Circle c1(pt(0, 0), Scalar(1));
  const Circle c2(pt(1, 1), Scalar(1));
  const auto hit = second_intersection(c1, c2, pt(1, 0));
  CHECK(hit.point == pt(0, 1));
  CHECK(radical_axis(c1, c2) == line_through(pt(1, 0), pt(0, 1)));
  const Circle c3(pt(2, 0), Scalar(1));
  CHECK(second_intersection(c1, c3, pt(1, 0)).tangent);
  CHECK_THROWS_AS(second_intersection(c1, c1, pt(1, 0)), GeometryError);
  CHECK_THROWS_AS(second_intersection(c1, c2, pt(0, 0)), GeometryError);
}

TEST_CASE("antipode and tangent") {
  const Circle c(pt(1, 1), Scalar(5));
  CHECK(antipode(c, pt(3, 2)) == pt(-1, 0));
  const Line t = tangent_at(c, pt(3, 2));
  CHECK(incident(t, pt(3, 2)));
  CHECK(dot(t.direction(), pt(2, 1)) == 0);
}

TEST_CASE("orthocentre") {
  CHECK(orthocentre(pt(0, 0), pt(4, 0), pt(0, 3)) == pt(0, 0));
  CHECK(orthocentre(pt(0, -1), pt(Scalar(-3, 5), Scalar(4, 5)), pt(Scalar(-4, 5), Scalar(3, 5))) ==
        pt(Scalar(-7, 5), Scalar(2, 5)));
  CHECK_THROWS_AS(orthocentre(pt(0, 0), pt(1, 1), pt(3, 3)), GeometryError);
}

TEST_CASE("collinearity and concyclicity") {
  CHECK(is_collinear(pt(0, 0), pt(1, 2), pt(3, 6)));
  CHECK_FALSE(is_collinear(pt(0, 0), pt(1, 2), pt(3, 7)));
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(classify_concyclic(pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)) == Concyclicity::Concyclic);
  CHECK(classify_concyclic(pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, 2)) == Concyclicity::NotConcyclic);
  CHECK(classify_concyclic(pt(0, 0), pt(1, 1), pt(2, 2), pt(5, 5)) == Concyclicity::Collinear);
  CHECK(concyclic_determinant(pt(0, 0), pt(1, 1), pt(2, 2), pt(5, 5)) == 0);
  CHECK_FALSE(is_concyclic(pt(0, 0), pt(1, 1), pt(2, 2), pt(5, 5)));
}

TEST_CASE("unit circle parametrization") {
  CHECK(point_on_unit_circle(Scalar(0)) == pt(1, 0));
  CHECK(point_on_unit_circle(Scalar(1)) == pt(0, 1));
  CHECK(point_on_unit_circle(Scalar(2)) == pt(Scalar(-3, 5), Scalar(4, 5)));
  CHECK(point_on_unit_circle(CircleParameter::infinity()) == pt(-1, 0));
  CHECK(to_string(CircleParameter::infinity()) == "inf");
}

TEST_CASE("complex arithmetic and similarities") {
  CHECK(pt(1, 2) * pt(3, -1) == pt(5, 5));
  CHECK(pt(5, 5) / pt(3, -1) == pt(1, 2));
  const Similarity s(pt(0, 1), pt(1, 0));
  CHECK(s.apply(pt(1, 0)) == pt(1, 1));
  CHECK(*s.fixed_point() == pt(Scalar(1, 2), Scalar(1, 2)));
  CHECK(s.inverse().after(s).apply(pt(7, -3)) == pt(7, -3));
  CHECK(s.is_congruence());
  CHECK_FALSE(Similarity(pt(1, 0), pt(2, 0)).fixed_point().has_value());
  CHECK_THROWS_AS(Similarity(pt(0, 0), pt(1, 0)), GeometryError);
}

TEST_CASE("similarity_between") {
  const std::vector<Point> src{pt(0, 0), pt(1, 0), pt(0, 1)};
  const std::vector<Point> rotated{pt(1, 1), pt(1, 2), pt(0, 1)};
  const auto sim = similarity_between(src, rotated);
  REQUIRE(sim.has_value());
  CHECK(sim->alpha() == pt(0, 1));
  const std::vector<Point> reflected{pt(0, 0), pt(1, 0), pt(0, -1)};
  CHECK_FALSE(similarity_between(src, reflected).has_value());
  const std::vector<Point> collapsed{pt(2, 2), pt(2, 2), pt(2, 2)};
  CHECK_FALSE(similarity_between(src, collapsed).has_value());
  const std::vector<Point> short_src{pt(0, 0)};
  CHECK_THROWS_AS(similarity_between(short_src, short_src), GeometryError);
}
