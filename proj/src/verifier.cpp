#include "wdc/verifier.hpp"

#include <algorithm>
#include <functional>

namespace wdc {

namespace {

std::string name_of(PointLabel p) { return std::string(to_string(p)); }
std::string name_of(CenterLabel c) { return std::string(to_string(c)); }
std::string name_of(CircleLabel c) { return std::string(to_string(c)); }

// Accumulates the claims of one check.
class Evidence {
 public:
  explicit Evidence(std::string name) { result_.name = std::move(name); }

  void info(std::string label, std::string value) { result_.witnesses.push_back({std::move(label), std::move(value)}); }

  void fail(std::string label, std::string value) {
    failed_ = true;
    info(std::move(label), std::move(value));
  }

  void note(const std::string& text) {
    if (!result_.notes.empty()) result_.notes += "; ";
    result_.notes += text;
  }

  void degenerate(const std::string& text) {
    degenerate_ = true;
    note("degenerate: " + text);
  }

  void require_zero(std::string label, const Scalar& residual) {
    if (residual != 0) fail(std::move(label), to_string(residual));
  }

  void same_point(std::string label, const Point& got, const Point& want) {
    if (got != want) fail(std::move(label), to_string(got - want));
  }

  void collinear(std::string label, const Point& p, const Point& q, const Point& r) {
    require_zero(std::move(label), orientation(p, q, r));
  }

  // Collinearity claim that is vacuous when two of the points coincide.
  void collinear_or_vacuous(const std::array<std::string, 3>& names, const std::array<const Point*, 3>& pts) {
    const std::string label = names[0] + ", " + names[1] + ", " + names[2];
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = i + 1; k < 3; ++k) {
        if (*pts[i] == *pts[k]) {
          degenerate("line " + label + " is vacuous since " + names[i] + " = " + names[k]);
          return;
        }
      }
    }
    collinear("collinear " + label, *pts[0], *pts[1], *pts[2]);
  }

  void on_line(std::string label, const Line& line, const Point& p) { require_zero(std::move(label), line.evaluate(p)); }

  void on_circle(std::string label, const Circle& circle, const Point& p) {
    require_zero(std::move(label), circle.power(p));
  }

  void concyclic(std::string label, const Point& p, const Point& q, const Point& r, const Point& s) {
    const Scalar det = concyclic_determinant(p, q, r, s);
    if (det != 0) {
      fail(std::move(label), to_string(det));
    } else if (classify_concyclic(p, q, r, s) == Concyclicity::Collinear) {
      fail(std::move(label), "collinear quadruple");
    }
  }

  // Direct similarity source -> target. On failure the witness is the
  // displacement of the first pair the two-point map gets wrong.
  std::optional<Similarity> similar(std::string label, std::span<const Point> source, std::span<const Point> target) {
    auto map = similarity_between(source, target);
    if (map) return map;
    const Point alpha = (target[1] - target[0]) / (source[1] - source[0]);
    if (alpha == Point()) {
      fail(std::move(label), "collapsed: " + to_string(source[1] - source[0]));
      return std::nullopt;
    }
    const Similarity two_point(alpha, target[0] - alpha * source[0]);
    for (std::size_t k = 2; k < source.size(); ++k) {
      const Point miss = two_point.apply(source[k]) - target[k];
      if (miss != Point()) {
        fail(label + " (pair " + std::to_string(k + 1) + ")", to_string(miss));
        break;
      }
    }
    return std::nullopt;
  }

  CheckResult finish() {
    result_.status = failed_ ? CheckStatus::Fail : degenerate_ ? CheckStatus::DegeneratePass : CheckStatus::Pass;
    return std::move(result_);
  }

 private:
  CheckResult result_;
  bool failed_ = false;
  bool degenerate_ = false;
};

CheckResult underivable(std::string name, const DerivedFigures& derived, std::string_view what) {
  Evidence ev(std::move(name));
  std::string issues;
  for (const auto& issue : derived.issues) issues += (issues.empty() ? "" : "; ") + issue;
  for (const auto& issue : derived.hagge.issues) issues += (issues.empty() ? "" : "; ") + issue;
  ev.fail(std::string(what) + " not derivable", issues.empty() ? "missing" : issues);
  return ev.finish();
}

std::vector<Point> points_of(const WoodDesarguesConfiguration& config, std::span<const PointLabel> labels) {
  std::vector<Point> out;
  out.reserve(labels.size());
  for (PointLabel p : labels) out.push_back(config.point(p));
  return out;
}

// The three centres whose circles avoid v.
std::array<CenterLabel, 3> centres_avoiding(PointLabel v) {
  std::array<CenterLabel, 3> out{};
  std::size_t n = 0;
  for (CircleLabel c : kAllCircles) {
    if (!on_circle(v, c)) out[n++] = center_of(c);
  }
  return out;
}

std::optional<Lemma2Points> lemma2_claims(Evidence& ev, const Point& j, const Point& o, const Point& l) {
  Lemma2Points pts = lemma2_points(j, o, l);
  if (pts.degeneracy) {
    ev.degenerate("lemma 2 input: " + *pts.degeneracy);
    return std::nullopt;
  }
  ev.info("A", to_string(pts.a));
  ev.info("B", to_string(pts.b));
  ev.info("D", to_string(pts.d));
  ev.collinear("collinear O, A, B", o, pts.a, pts.b);
  ev.collinear("collinear L, A, D", l, pts.a, pts.d);
  ev.note(std::string("printed triple L, B, D collinear: ") + (is_collinear(l, pts.b, pts.d) ? "true" : "false"));
  return pts;
}

void lemma1_claims(Evidence& ev, const Point& p, const Point& q, const Point& r, const Point& s,
                   std::optional<Point>* antipode_out) {
  if (is_collinear(p, q, r)) throw GeometryError(GeometryErrc::CollinearPoints, "lemma 1 needs a triangle PQR");
  for (const auto& [name, vertex] : {std::pair{"P", &p}, std::pair{"Q", &q}, std::pair{"R", &r}}) {
    if (s == *vertex) {
      ev.degenerate(std::string("lemma 1 input: S coincides with ") + name);
      return;
    }
  }
  const Circle circle = circle_through(p, q, r);
  ev.on_circle("S on circle PQR", circle, s);
  const Point t = 2 * circle.center() - s;
  ev.info("T", to_string(t));
  const Line pp = perpendicular_at(p, line_through(s, p));
  const Line qq = perpendicular_at(q, line_through(s, q));
  const Line rr = perpendicular_at(r, line_through(s, r));
  ev.on_line("p' through T", pp, t);
  ev.on_line("q' through T", qq, t);
  ev.on_line("r' through T", rr, t);
  if (antipode_out != nullptr) *antipode_out = t;
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::DegeneratePass: return "degenerate-pass";
  }
  return "unknown";
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::Pass: ++s.pass; break;
      case CheckStatus::Fail: ++s.fail; break;
      case CheckStatus::DegeneratePass: ++s.degenerate_pass; break;
    }
  }
  return s;
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  const auto it = std::find_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.name == name; });
  return it == results.end() ? nullptr : &*it;
}

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& rec : perspective_table()) out.push_back("perspective." + name_of(rec.vertex));
    out.emplace_back("five_circles");
    out.emplace_back("core_similarity");
    for (CircleLabel c : kAllCircles) out.push_back("orthocentre_quadrangle." + name_of(c));
    for (CircleLabel c : kAllCircles) out.push_back("steiner_line." + name_of(c));
    out.emplace_back("pentagon_perspectives");
    out.emplace_back("pentagon_quadrangles");
    out.emplace_back("tangent_concurrency");
    out.emplace_back("hagge");
    out.emplace_back("lemma1");
    out.emplace_back("lemma2");
    return out;
  }();
  return names;
}

// ---------------------------------------------------------------------------

CheckResult check_perspective(const WoodDesarguesConfiguration& config, const PerspectiveRecord& record) {
  Evidence ev("perspective." + name_of(record.vertex));
  ev.info("row", triangle_name(record.triangle1) + " ~ " + triangle_name(record.triangle2) + " from " +
                     name_of(record.vertex) + " over " + triangle_name(record.perspectrix));
  const Point& v = config.point(record.vertex);
  for (std::size_t k = 0; k < 3; ++k) {
    ev.collinear("join " + name_of(record.triangle1[k]) + name_of(record.triangle2[k]) + " through " +
                     name_of(record.vertex),
                 config.point(record.triangle1[k]), config.point(record.triangle2[k]), v);
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t i = (k + 1) % 3;
    const std::size_t m = (k + 2) % 3;
    const std::string label = "sides " + name_of(record.triangle1[i]) + name_of(record.triangle1[m]) + ", " +
                              name_of(record.triangle2[i]) + name_of(record.triangle2[m]) + " meet at " +
                              name_of(record.perspectrix[k]);
    try {
      const Point hit = meet(line_through(config.point(record.triangle1[i]), config.point(record.triangle1[m])),
                             line_through(config.point(record.triangle2[i]), config.point(record.triangle2[m])));
      ev.same_point(label, hit, config.point(record.perspectrix[k]));
    } catch (const GeometryError& e) {
      ev.fail(label, e.what());
    }
  }
  const Point& p0 = config.point(record.perspectrix[0]);
  const Point& p1 = config.point(record.perspectrix[1]);
  const Point& p2 = config.point(record.perspectrix[2]);
  ev.collinear("perspectrix " + triangle_name(record.perspectrix) + " collinear", p0, p1, p2);
  if (p0 != p1) ev.info("perspectrix", to_string(line_through(p0, p1)));
  return ev.finish();
}

CheckResult check_five_circles(const WoodDesarguesConfiguration& config, const DerivedFigures& derived) {
  Evidence ev("five_circles");
  for (CircleLabel c : kAllCircles) {
    const auto q = quadrangle(c);
    const std::string name = name_of(c);
    ev.concyclic("quadrangle " + name + " concyclic", config.point(q[0]), config.point(q[1]), config.point(q[2]),
                 config.point(q[3]));
    for (PointLabel p : q) ev.on_circle(name_of(p) + " on circle " + name, config.circle(c), config.point(p));
    ev.on_circle("J on circle " + name, config.circle(c), config.j);
    ev.same_point("centre " + name_of(center_of(c)) + " of circle " + name, config.center(c),
                  config.circle(c).center());
  }
  if (!derived.pentagon) {
    ev.fail("pentagon circle not derivable",
            derived.issues.empty() ? std::string("missing") : derived.issues.back());
    return ev.finish();
  }
  const Circle& pentagon = derived.pentagon->circle;
  ev.info("pentagon circle", to_string(pentagon));
  for (CenterLabel m : kAllCenters) {
    ev.on_circle(name_of(m) + " on pentagon circle", pentagon, config.center(m));
  }
  ev.on_circle("J on pentagon circle", pentagon, config.j);
  return ev.finish();
}

CheckResult check_core_similarity(const WoodDesarguesConfiguration& config) {
  using enum PointLabel;
  Evidence ev("core_similarity");
  const std::array<PointLabel, 3> src{A, B, C};
  const std::array<PointLabel, 3> dst{a, b, c};
  const auto map = ev.similar("ABC -> abc", points_of(config, src), points_of(config, dst));
  if (map) {
    ev.info("alpha", to_string(map->alpha()));
    ev.info("ratio^2", to_string(map->ratio_squared()));
    const auto fixed = map->fixed_point();
    if (!fixed) {
      ev.fail("fixed point", "map has no fixed point");
    } else {
      ev.same_point("fixed point is J", *fixed, config.j);
    }
    const Scalar radius_ratio =
        config.circle(CircleLabel::abcK).radius_squared() / config.circle(CircleLabel::ABCK).radius_squared();
    ev.require_zero("ratio^2 - r^2(abcK)/r^2(ABCK)", map->ratio_squared() - radius_ratio);
  }
  return ev.finish();
}

CheckResult check_orthocentre_quadrangle(const WoodDesarguesConfiguration& config, const DerivedFigures& derived,
                                         CircleLabel circle) {
  const std::string name = "orthocentre_quadrangle." + name_of(circle);
  if (!derived.orthocentres) return underivable(name, derived, "orthocentres");
  Evidence ev(name);
  const auto q = quadrangle(circle);
  std::vector<Point> hs;
  for (PointLabel v : q) {
    hs.push_back(derived.orthocentres->h(circle, v));
    ev.info("H(" + name_of(v) + ")", to_string(hs.back()));
  }
  const auto src = points_of(config, q);
  const auto map = ev.similar("quadrangle -> H-quadrangle", src, hs);
  if (map) {
    ev.info("alpha", to_string(map->alpha()));
    ev.same_point("alpha is -1", map->alpha(), Point(Scalar(-1), Scalar(0)));
    if (const auto fixed = map->fixed_point()) {
      const Scalar half(1, 2);
      const Point centre = half * (src[0] + src[1] + src[2] + src[3]) - config.center(circle);
      ev.same_point("half-turn centre", *fixed, centre);
    }
  }
  return ev.finish();
}

CheckResult check_steiner_line(const WoodDesarguesConfiguration& config, const DerivedFigures& derived,
                               CircleLabel circle) {
  (void)config;
  const std::string name = "steiner_line." + name_of(circle);
  if (!derived.orthocentres) return underivable(name, derived, "orthocentres");
  Evidence ev(name);
  std::vector<Point> distinct;
  for (PointLabel v : quadrangle(circle)) {
    const Point& f = derived.orthocentres->f(circle, v);
    ev.info("F(" + name_of(v) + ")", to_string(f));
    if (std::find(distinct.begin(), distinct.end(), f) == distinct.end()) distinct.push_back(f);
  }
  if (distinct.size() >= 2) {
    const Line line = line_through(distinct[0], distinct[1]);
    ev.info("line", to_string(line));
    for (std::size_t k = 2; k < distinct.size(); ++k) ev.on_line("F point " + std::to_string(k + 1) + " on line", line, distinct[k]);
  }
  return ev.finish();
}

CheckResult check_pentagon_perspectives(const WoodDesarguesConfiguration& config, const DerivedFigures& derived) {
  using enum PointLabel;
  if (!derived.pentagon) return underivable("pentagon_perspectives", derived, "pentagon");
  Evidence ev("pentagon_perspectives");
  const PentagonFigure& pent = *derived.pentagon;
  const auto& zmeet = pent.meets[index(CircleLabel::ABCK)];
  const auto& wmeet = pent.meets[index(CircleLabel::Aa23)];
  ev.info("Z", to_string(zmeet.point));
  ev.info("W", to_string(wmeet.point));

  const Point& pa = config.point(A);
  const Point& pb = config.point(B);
  const Point& pc = config.point(C);
  const Point& pl = config.center(CenterLabel::L);
  const Point& pm = config.center(CenterLabel::M);
  const Point& pn = config.center(CenterLabel::N);
  const Point& pu = config.center(CenterLabel::U);

  if (zmeet.tangent) {
    ev.degenerate("pentagon circle touches ABCK at J, Z undefined");
  } else {
    const Point& z = zmeet.point;
    ev.collinear_or_vacuous({"A", "L", "Z"}, {&pa, &pl, &z});
    ev.collinear_or_vacuous({"B", "M", "Z"}, {&pb, &pm, &z});
    ev.collinear_or_vacuous({"C", "N", "Z"}, {&pc, &pn, &z});
    const Point hit = meet(line_through(pa, pl), line_through(pb, pm));
    ev.same_point("AL and BM meet at Z", hit, z);
    ev.on_line("CN through Z", line_through(pc, pn), z);
  }
  if (wmeet.tangent) {
    ev.degenerate("pentagon circle touches Aa23 at J, W undefined");
  } else {
    ev.collinear_or_vacuous({"A", "U", "W"}, {&pa, &pu, &wmeet.point});
  }

  const std::array<Point, 3> src{pa, pb, pc};
  const std::array<Point, 3> dst{pl, pm, pn};
  if (const auto map = ev.similar("ABC -> LMN", src, dst)) {
    ev.info("alpha", to_string(map->alpha()));
    const auto fixed = map->fixed_point();
    if (!fixed) {
      ev.fail("fixed point", "map has no fixed point");
    } else {
      ev.same_point("fixed point is J", *fixed, config.j);
    }
  }
  ev.note("vertex of perspective of ABC and LMN taken as Z");
  return ev.finish();
}

CheckResult check_pentagon_quadrangles(const WoodDesarguesConfiguration& config, const DerivedFigures& derived) {
  (void)derived;
  Evidence ev("pentagon_quadrangles");
  for (CircleLabel c : kAllCircles) {
    const auto q = quadrangle(c);
    std::vector<Point> centres;
    std::string order;
    for (PointLabel v : q) {
      const CenterLabel m = center_of(other_circle(v, c));
      centres.push_back(config.center(m));
      order += name_of(m);
    }
    if (const auto map = ev.similar(name_of(c) + " -> " + order, points_of(config, q), centres)) {
      ev.info("alpha[" + name_of(c) + " -> " + order + "]", to_string(map->alpha()));
    }
  }
  return ev.finish();
}

CheckResult check_tangent_concurrency(const WoodDesarguesConfiguration& config, const DerivedFigures& derived) {
  using enum PointLabel;
  if (!derived.pentagon) return underivable("tangent_concurrency", derived, "pentagon");
  Evidence ev("tangent_concurrency");
  const PentagonFigure& pent = *derived.pentagon;

  const Line ta = tangent_at(config.circle(CircleLabel::Aa23), config.point(A));
  const Line tb = tangent_at(config.circle(CircleLabel::Bb31), config.point(B));
  const Line tc = tangent_at(config.circle(CircleLabel::Cc12), config.point(C));
  const Point x = meet(ta, tb);
  ev.info("X", to_string(x));
  ev.on_line("tangent at C through X", tc, x);
  ev.on_circle("X on circle ABCK", config.circle(CircleLabel::ABCK), x);

  const Line pl = parallel_through(config.center(CenterLabel::L), ta);
  const Line pm = parallel_through(config.center(CenterLabel::M), tb);
  const Line pn = parallel_through(config.center(CenterLabel::N), tc);
  const Point y = meet(pl, pm);
  ev.info("Y", to_string(y));
  ev.on_line("parallel through N passes Y", pn, y);
  ev.on_circle("Y on pentagon circle", pent.circle, y);

  if (pent.meets[index(CircleLabel::ABCK)].tangent) {
    ev.degenerate("Z undefined, antipode claims skipped");
  } else {
    ev.same_point("X is the antipode of Z on ABCK", x, pent.x);
    ev.same_point("Y is the antipode of Z on the pentagon circle", y, pent.y);
    ev.same_point("midpoint of YZ is the pentagon centre", midpoint(y, pent.z()), pent.circle.center());
  }
  return ev.finish();
}

CheckResult check_hagge(const WoodDesarguesConfiguration& config, const DerivedFigures& derived) {
  if (!derived.orthocentres) return underivable("hagge", derived, "orthocentres");
  if (!derived.pentagon) return underivable("hagge", derived, "pentagon");
  Evidence ev("hagge");

  for (const auto& rec : perspective_table()) {
    const std::string h_name = "h(" + name_of(rec.vertex) + ")";
    const auto& hagge = derived.hagge.at(rec.vertex);
    if (!hagge) {
      ev.fail(h_name, "not derivable");
      continue;
    }
    const Point& h = hagge->centre;
    ev.info(h_name, to_string(h));
    const Line perspectrix = line_through(config.point(rec.perspectrix[0]), config.point(rec.perspectrix[1]));
    ev.on_line(h_name + " on perspectrix " + triangle_name(rec.perspectrix), perspectrix, h);
    if (hagge->circle) {
      ev.same_point(h_name + " is the centre of circle JHF", hagge->circle->center(), h);
    } else {
      ev.degenerate("J, H, F collinear for row " + name_of(rec.vertex));
    }
    const auto avoid = centres_avoiding(rec.vertex);
    ev.same_point(h_name + " = orthocentre(" + name_of(avoid[0]) + name_of(avoid[1]) + name_of(avoid[2]) + ")", h,
                  orthocentre(config.center(avoid[0]), config.center(avoid[1]), config.center(avoid[2])));
  }

  const Scalar& pentagon_r2 = derived.pentagon->circle.radius_squared();
  for (CircleLabel c : kAllCircles) {
    const auto q = quadrangle(c);
    std::vector<Point> hq;
    for (PointLabel v : q) {
      if (!derived.hagge.at(v)) break;
      hq.push_back(derived.hagge.at(v)->centre);
    }
    if (hq.size() != q.size()) continue;
    const std::string name = name_of(c);
    ev.similar("h-quadrangle of " + name + " ~ " + name, points_of(config, q), hq);
    const Circle hc = circle_through(hq[0], hq[1], hq[2]);
    ev.on_circle("h(" + name_of(q[3]) + ") on h-circle of " + name, hc, hq[3]);
    ev.info("r^2[h-" + name + "]", to_string(hc.radius_squared()));
    ev.require_zero("r^2[h-" + name + "] - r^2[pentagon]", hc.radius_squared() - pentagon_r2);
  }

  for (PointLabel v : kAllPoints) {
    const auto count = std::count_if(kAllCircles.begin(), kAllCircles.end(), [v](CircleLabel c) { return on_circle(v, c); });
    if (count != 2) ev.fail("h(" + name_of(v) + ") quadrangle count", std::to_string(count));
  }
  return ev.finish();
}

// ---------------------------------------------------------------------------

CheckResult check_lemma1(const Point& p, const Point& q, const Point& r, const Point& s) {
  Evidence ev("lemma1");
  lemma1_claims(ev, p, q, r, s, nullptr);
  return ev.finish();
}

bool perpendiculars_concurrent(const Point& p, const Point& q, const Point& r, const Point& s) {
  const Line pp = perpendicular_at(p, line_through(s, p));
  const Line qq = perpendicular_at(q, line_through(s, q));
  const Line rr = perpendicular_at(r, line_through(s, r));
  try {
    return incident(rr, meet(pp, qq));
  } catch (const GeometryError&) {
    return pp == qq && qq == rr;
  }
}

Lemma2Points lemma2_points(const Point& j, const Point& o, const Point& l) {
  const Circle s1 = circle_through(j, o, l);
  const Circle s2(l, distance2(j, l));
  const Circle s3(o, distance2(j, o));
  Lemma2Points out{s1, s2, s3, j, j, j, std::nullopt};
  if (radical_axis(s1, s2) == radical_axis(s1, s3)) {
    out.degeneracy = "coaxial circles";
    return out;
  }
  const SecondIntersection a = second_intersection(s2, s3, j);
  const SecondIntersection b = second_intersection(s1, s2, j);
  const SecondIntersection d = second_intersection(s3, s1, j);
  out.a = a.point;
  out.b = b.point;
  out.d = d.point;
  if (a.tangent || b.tangent || d.tangent) out.degeneracy = "two circles touch at J";
  return out;
}

CheckResult check_lemma2(const Point& j, const Point& o, const Point& l) {
  Evidence ev("lemma2");
  lemma2_claims(ev, j, o, l);
  return ev.finish();
}

CheckResult check_lemma1_instance(const WoodDesarguesConfiguration& config, const DerivedFigures& derived) {
  if (!derived.pentagon) return underivable("lemma1", derived, "pentagon");
  Evidence ev("lemma1");
  ev.note("instance P, Q, R = L, M, N; S = Z");
  if (derived.pentagon->meets[index(CircleLabel::ABCK)].tangent) {
    ev.degenerate("Z undefined");
    return ev.finish();
  }
  std::optional<Point> t;
  lemma1_claims(ev, config.center(CenterLabel::L), config.center(CenterLabel::M), config.center(CenterLabel::N),
                derived.pentagon->z(), &t);
  if (t) ev.same_point("T is Y", *t, derived.pentagon->y);
  return ev.finish();
}

CheckResult check_lemma2_instance(const WoodDesarguesConfiguration& config, const DerivedFigures& derived) {
  if (!derived.pentagon) return underivable("lemma2", derived, "pentagon");
  Evidence ev("lemma2");
  ev.note("instance J, O, L = J, U, L");
  const auto pts = lemma2_claims(ev, config.j, config.center(CenterLabel::U), config.center(CenterLabel::L));
  if (pts) {
    ev.same_point("lemma A is configuration A", pts->a, config.point(PointLabel::A));
    ev.same_point("lemma B is W", pts->b, derived.pentagon->w());
    ev.same_point("lemma D is Z", pts->d, derived.pentagon->z());
  }
  return ev.finish();
}

VerificationReport verify_all(const WoodDesarguesConfiguration& config) {
  return verify_all(config, derive_figures(config));
}

VerificationReport verify_all(const WoodDesarguesConfiguration& config, const DerivedFigures& derived) {
  VerificationReport report;
  report.seed = config.seed;
  const auto& names = registered_checks();
  std::size_t next = 0;
  auto run = [&](const std::function<CheckResult()>& check) {
    const std::string& name = names[next++];
    try {
      report.results.push_back(check());
    } catch (const GeometryError& e) {
      Evidence ev(name);
      ev.fail("geometry error", e.what());
      report.results.push_back(ev.finish());
    }
  };

  for (const auto& rec : perspective_table()) run([&] { return check_perspective(config, rec); });
  run([&] { return check_five_circles(config, derived); });
  run([&] { return check_core_similarity(config); });
  for (CircleLabel c : kAllCircles) run([&] { return check_orthocentre_quadrangle(config, derived, c); });
  for (CircleLabel c : kAllCircles) run([&] { return check_steiner_line(config, derived, c); });
  run([&] { return check_pentagon_perspectives(config, derived); });
  run([&] { return check_pentagon_quadrangles(config, derived); });
  run([&] { return check_tangent_concurrency(config, derived); });
  run([&] { return check_hagge(config, derived); });
  run([&] { return check_lemma1_instance(config, derived); });
  run([&] { return check_lemma2_instance(config, derived); });
  return report;
}

}  // namespace wdc
