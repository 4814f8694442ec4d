#include <doctest.h>

#include <set>

#include "oracle/reference_oracle.hpp"
#include "wdc/configuration.hpp"

using namespace wdc;

namespace {

Point pt(const char* x, const char* y) { return {*parse_scalar(x), *parse_scalar(y)}; }
Point from_oracle(const oracle::P& p) { return {p.first, p.second}; }

SeedDefect defect_of(const ConfigurationSeed& seed) {
  try {
    build_configuration(seed);
  } catch (const DegenerateSeed& e) {
    return e.defect();
  }
  FAIL("seed was accepted");
  return SeedDefect::DuplicateParameter;
}

}  // namespace

TEST_CASE("label helpers") {
  CHECK(to_string(PointLabel::P2) == "2");
  CHECK(*parse_point_label("3") == PointLabel::P3);
  CHECK(*parse_circle_label("Bb31") == CircleLabel::Bb31);
  CHECK_FALSE(parse_circle_label("Bb13").has_value());
  CHECK(center_of(CircleLabel::Cc12) == CenterLabel::N);
  for (PointLabel p : kAllPoints) {
    const auto through = circles_through(p);
    CHECK(on_circle(p, through[0]));
    CHECK(on_circle(p, through[1]));
    CHECK(other_circle(p, through[0]) == through[1]);
  }
  for (CircleLabel c : kAllCircles) CHECK(quadrangle(c).size() == 4);
}

TEST_CASE("perspective table structure") {
  const auto& table = perspective_table();
  std::set<PointLabel> vertices;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& rec = table[r];
    vertices.insert(rec.vertex);
    CHECK(row_of_vertex(rec.vertex) == r);
    // The two triangles sit on the two circles through the vertex, and the
    // vertex itself is in neither.
    const auto through = circles_through(rec.vertex);
    const CircleLabel c1 = circle_of(rec.triangle1);
    const CircleLabel c2 = circle_of(rec.triangle2);
    CHECK(c1 != c2);
    CHECK((c1 == through[0] || c1 == through[1]));
    CHECK((c2 == through[0] || c2 == through[1]));
    std::set<PointLabel> used(rec.triangle1.begin(), rec.triangle1.end());
    used.insert(rec.triangle2.begin(), rec.triangle2.end());
    used.insert(rec.perspectrix.begin(), rec.perspectrix.end());
    used.insert(rec.vertex);
    CHECK(used.size() == 10);
  }
  CHECK(vertices.size() == 10);
  CHECK(triangle_name(table[0].triangle1) == "ABC");
  CHECK(table[0].vertex == PointLabel::K);
  CHECK(triangle_name(table[0].perspectrix) == "123");
}

TEST_CASE("reference fixture matches the frozen values") {
  const auto config = build_configuration(reference_seed());
  using enum PointLabel;
  CHECK(config.j == pt("1", "0"));
  CHECK(config.point(K) == pt("0", "1"));
  CHECK(config.point(A) == pt("0", "-1"));
  CHECK(config.point(B) == pt("-3/5", "4/5"));
  CHECK(config.point(C) == pt("-4/5", "3/5"));
  CHECK(config.point(a) == pt("0", "3"));
  CHECK(config.point(b) == pt("21/5", "12/5"));
  CHECK(config.point(c) == pt("4", "3"));
  CHECK(config.point(P1) == pt("17/5", "24/5"));
  CHECK(config.point(P2) == pt("-2", "3"));
  CHECK(config.point(P3) == pt("-7/5", "16/5"));
  CHECK(config.center(CenterLabel::U) == pt("0", "0"));
  CHECK(config.center(CenterLabel::V) == pt("2", "2"));
  CHECK(config.center(CenterLabel::L) == pt("-1", "1"));
  CHECK(config.center(CenterLabel::M) == pt("7/5", "14/5"));
  CHECK(config.center(CenterLabel::N) == pt("1", "3"));
  CHECK(config.circle(CircleLabel::ABCK).radius_squared() == 1);
  CHECK(config.circle(CircleLabel::abcK).radius_squared() == 5);
  CHECK(config.circle(CircleLabel::Aa23).radius_squared() == 5);
  CHECK(config.circle(CircleLabel::Bb31).radius_squared() == 8);
  CHECK(config.circle(CircleLabel::Cc12).radius_squared() == 9);
}

TEST_CASE("reference fixture matches the independent oracle") {
  const auto config = build_configuration(reference_seed());
  const oracle::Reference ref = oracle::reference();
  CHECK(config.j == from_oracle(ref.j));
  for (PointLabel p : kAllPoints) {
    CAPTURE(to_string(p));
    CHECK(config.point(p) == from_oracle(ref.points.at(std::string(to_string(p)))));
  }
  for (CircleLabel c : kAllCircles) {
    const std::string centre(to_string(center_of(c)));
    CHECK(config.center(c) == from_oracle(ref.centres.at(centre)));
    CHECK(config.circle(c).radius_squared() == ref.radius2.at(centre));
  }
}

TEST_CASE("derived figures at the reference seed") {
  const auto config = build_configuration(reference_seed());
  const DerivedFigures d = derive_figures(config);
  const oracle::Reference ref = oracle::reference();
  REQUIRE(d.complete());
  using enum PointLabel;
  const auto& o = *d.orthocentres;
  CHECK(o.h(CircleLabel::ABCK, K) == pt("-7/5", "2/5"));
  CHECK(o.f(CircleLabel::ABCK, K) == pt("21/5", "22/5"));
  CHECK(o.h(CircleLabel::ABCK, K) == from_oracle(ref.h_k));
  CHECK(o.f(CircleLabel::ABCK, K) == from_oracle(ref.f_k));
  CHECK(o.h(CircleLabel::ABCK, A) == pt("-7/5", "12/5"));
  CHECK(o.h(CircleLabel::ABCK, B) == pt("-4/5", "3/5"));
  CHECK(o.h(CircleLabel::ABCK, C) == pt("-3/5", "4/5"));
  CHECK(o.f(CircleLabel::ABCK, A) == pt("-7/5", "36/5"));
  CHECK(o.f(CircleLabel::ABCK, B) == pt("17/5", "24/5"));
  CHECK(o.f(CircleLabel::ABCK, C) == pt("17/5", "24/5"));

  const auto& hk = d.hagge.at(K);
  REQUIRE(hk.has_value());
  CHECK(hk->centre == pt("2/5", "19/5"));
  CHECK(hk->centre == from_oracle(ref.hagge_k));
  CHECK(hk->circle->radius_squared() == Scalar(74, 5));
  CHECK(hk->circle->radius_squared() == ref.hagge_k_radius2);
  CHECK(incident(Line::from_coefficients(1, -3, 11), hk->centre));
  CHECK(hk->centre == orthocentre(config.center(CenterLabel::L), config.center(CenterLabel::M),
                                  config.center(CenterLabel::N)));

  const auto& pent = *d.pentagon;
  CHECK(pent.circle.center() == pt("1/2", "3/2"));
  CHECK(pent.circle.radius_squared() == Scalar(5, 2));
  CHECK(pent.centres_concyclic);
  CHECK(pent.z() == pt("-4/5", "3/5"));
  CHECK(pent.w() == pt("0", "3"));
  CHECK(pent.x == pt("4/5", "-3/5"));
  CHECK(pent.y == pt("9/5", "12/5"));
  CHECK(pent.z() == from_oracle(ref.z));
  CHECK(pent.w() == from_oracle(ref.w));
  CHECK(pent.x == from_oracle(ref.x));
  CHECK(pent.y == from_oracle(ref.y));
}

TEST_CASE("similarity multipliers at the reference seed") {
  const auto config = build_configuration(reference_seed());
  const oracle::Reference ref = oracle::reference();
  using enum PointLabel;
  auto alpha = [&](std::vector<Point> src, std::vector<Point> dst) {
    const auto sim = similarity_between(src, dst);
    REQUIRE(sim.has_value());
    return sim->alpha();
  };
  const Point abc = alpha({config.point(A), config.point(B), config.point(C)},
                          {config.point(a), config.point(b), config.point(c)});
  CHECK(abc == pt("-1", "-2"));
  CHECK(abc == from_oracle(ref.alpha_abc));
  const Point lmn = alpha({config.point(A), config.point(B), config.point(C)},
                          {config.center(CenterLabel::L), config.center(CenterLabel::M), config.center(CenterLabel::N)});
  CHECK(lmn == pt("1/2", "-3/2"));
  CHECK(lmn == from_oracle(ref.alpha_lmn));
  const Point uvln = alpha({config.point(B), config.point(b), config.point(P3), config.point(P1)},
                           {config.center(CenterLabel::U), config.center(CenterLabel::V), config.center(CenterLabel::L),
                            config.center(CenterLabel::N)});
  CHECK(uvln == pt("1/2", "1/4"));
  CHECK(uvln == from_oracle(ref.alpha_uvln));
}

TEST_CASE("degenerate seeds are rejected with a reason") {
  ConfigurationSeed seed = reference_seed();
  seed.tK = Scalar(0);
  CHECK(defect_of(seed) == SeedDefect::DuplicateParameter);
  CHECK(std::string(reason_code(SeedDefect::DuplicateParameter)) == "duplicate-parameter");

  seed = reference_seed();
  seed.s = Scalar(1, 2);  // second circle centred at the origin
  CHECK(defect_of(seed) == SeedDefect::IdenticalCircles);

  // Choose s so the second circle touches line KA at K.
  seed = reference_seed();
  const Point j = point_on_unit_circle(seed.tJ);
  const Point k = point_on_unit_circle(seed.tK);
  const Point a = point_on_unit_circle(seed.tA);
  const Point along = a - k;
  seed.s = dot(along, k - midpoint(j, k)) / dot(along, rot90(k - j));
  CHECK(defect_of(seed) == SeedDefect::TangentAtK);
}

TEST_CASE("infinite parameter names (-1, 0)") {
  ConfigurationSeed seed = reference_seed();
  seed.tC = CircleParameter::infinity();
  const auto config = build_configuration(seed);
  CHECK(config.point(PointLabel::C) == pt("-1", "0"));
}
