#include <doctest.h>

#include <set>

#include "support/fixtures.hpp"
#include "wdc/verifier.hpp"

using namespace wdc;

namespace {

Point pt(const char* x, const char* y) { return {*parse_scalar(x), *parse_scalar(y)}; }

const WoodDesarguesConfiguration& reference() {
  static const WoodDesarguesConfiguration config = build_configuration(reference_seed());
  return config;
}

}  // namespace

TEST_CASE("registered checks are unique and cover the ten perspectives") {
  const auto& names = registered_checks();
  CHECK(names.size() == 28);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK(names.front() == "perspective.K");
  CHECK(names.back() == "lemma2");
}

TEST_CASE("reference seed verifies with exactly one degenerate pass") {
  const VerificationReport report = verify_all(reference());
  REQUIRE(report.results.size() == registered_checks().size());
  for (std::size_t i = 0; i < report.results.size(); ++i) CHECK(report.results[i].name == registered_checks()[i]);
  const ReportSummary s = report.summary();
  CHECK(s.fail == 0);
  CHECK(s.degenerate_pass == 1);
  CHECK(s.pass == 27);
  const CheckResult* pp = report.find("pentagon_perspectives");
  REQUIRE(pp != nullptr);
  CHECK(pp->status == CheckStatus::DegeneratePass);
  CHECK(pp->notes.find("C, N, Z") != std::string::npos);
  CHECK(report.ok());
}

TEST_CASE("verify_all is deterministic") {
  const VerificationReport r1 = verify_all(reference());
  const VerificationReport r2 = verify_all(reference());
  REQUIRE(r1.results.size() == r2.results.size());
  for (std::size_t i = 0; i < r1.results.size(); ++i) {
    CHECK(r1.results[i].status == r2.results[i].status);
    CHECK(r1.results[i].witnesses == r2.results[i].witnesses);
    CHECK(r1.results[i].notes == r2.results[i].notes);
  }
}

TEST_CASE("every check fails under its documented mutation") {
  const auto table = fixtures::mutation_table();
  CHECK(table.size() == registered_checks().size());
  for (const auto& m : table) {
    CAPTURE(m.check);
    CAPTURE(m.describe());
    const VerificationReport report = verify_all(m.apply(reference()));
    const CheckResult* r = report.find(m.check);
    REQUIRE(r != nullptr);
    CHECK(r->status == CheckStatus::Fail);
    CHECK(fixtures::has_nonzero_witness(*r));
  }
}

TEST_CASE("moving C to the origin fails and names checks") {
  WoodDesarguesConfiguration config = reference();
  config.point(PointLabel::C) = pt("0", "0");
  const VerificationReport report = verify_all(config);
  CHECK_FALSE(report.ok());
  CHECK(report.find("five_circles")->status == CheckStatus::Fail);
}

TEST_CASE("check_five_circles flags a fifth point off the circle") {
  WoodDesarguesConfiguration config = reference();
  config.point(PointLabel::K) = pt("0", "2");
  const CheckResult r = check_five_circles(config, derive_figures(config));
  CHECK(r.status == CheckStatus::Fail);
  CHECK(fixtures::has_nonzero_witness(r));
}

TEST_CASE("lemma 1 on a concrete quadruple") {
  // Unit circle with S = (1, 0); the antipode is (-1, 0).
  const Point p = point_on_unit_circle(Scalar(1));
  const Point q = point_on_unit_circle(Scalar(2));
  const Point r = point_on_unit_circle(Scalar(-3));
  const Point s = point_on_unit_circle(Scalar(0));
  CHECK(check_lemma1(p, q, r, s).status == CheckStatus::Pass);
  CHECK(perpendiculars_concurrent(p, q, r, s));
  CHECK_FALSE(perpendiculars_concurrent(p, q, r, pt("2", "0")));
  CHECK(check_lemma1(p, q, r, pt("2", "0")).status == CheckStatus::Fail);
  CHECK(check_lemma1(p, q, r, p).status == CheckStatus::DegeneratePass);
  CHECK_THROWS_AS(check_lemma1(pt("0", "0"), pt("1", "1"), pt("2", "2"), s), GeometryError);
}

TEST_CASE("lemma 2 worked instance") {
  const Point j = pt("1", "0");
  const Point o = pt("0", "1");
  const Point l = pt("3/5", "-4/5");
  const Lemma2Points pts = lemma2_points(j, o, l);
  CHECK_FALSE(pts.degeneracy.has_value());
  CHECK(pts.a == pt("-1/5", "-2/5"));
  CHECK(pts.b == pt("-7/25", "-24/25"));
  CHECK(pts.d == pt("-1", "0"));
  CHECK(is_collinear(o, pts.a, pts.b));
  CHECK(is_collinear(l, pts.a, pts.d));
  CHECK(orientation(l, pts.b, pts.d) == Scalar(-24, 25));
  const CheckResult r = check_lemma2(j, o, l);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.notes.find("L, B, D collinear: false") != std::string::npos);
  CHECK_THROWS_AS(lemma2_points(j, pt("2", "0"), pt("3", "0")), GeometryError);
}

TEST_CASE("lemma instances bridge to the configuration") {
  const DerivedFigures d = derive_figures(reference());
  CHECK(check_lemma1_instance(reference(), d).status == CheckStatus::Pass);
  CHECK(check_lemma2_instance(reference(), d).status == CheckStatus::Pass);
}

TEST_CASE("fuzzed lemma 1 quadruples") {
  fixtures::RationalSource src(7);
  for (int i = 0; i < 25; ++i) {
    const auto on = fixtures::lemma1_instance(src, false);
    CHECK(check_lemma1(on.p, on.q, on.r, on.s).status == CheckStatus::Pass);
    const auto off = fixtures::lemma1_instance(src, true);
    CHECK_FALSE(perpendiculars_concurrent(off.p, off.q, off.r, off.s));
  }
}
