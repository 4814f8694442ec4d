#include "wdc/configuration.hpp"

#include <algorithm>

namespace wdc {

namespace {

constexpr std::array<std::string_view, kPointCount> kPointNames{"A", "B", "C", "K", "a", "b", "c", "1", "2", "3"};
constexpr std::array<std::string_view, kCircleCount> kCircleNames{"ABCK", "abcK", "Aa23", "Bb31", "Cc12"};
constexpr std::array<std::string_view, kCircleCount> kCenterNames{"U", "V", "L", "M", "N"};

using enum PointLabel;

constexpr std::array<std::array<PointLabel, 4>, kCircleCount> kQuadrangles{{
    {A, B, C, K},
    {a, b, c, K},
    {A, a, P2, P3},
    {B, b, P3, P1},
    {C, c, P1, P2},
}};

const std::array<PerspectiveRecord, kPointCount> kTable{{
    {{A, B, C}, {a, b, c}, K, {P1, P2, P3}},
    {{K, B, C}, {a, P3, P2}, A, {P1, c, b}},
    {{A, K, C}, {P3, b, P1}, B, {c, P2, a}},
    {{A, B, K}, {P2, P1, c}, C, {b, a, P3}},
    {{C, c, P2}, {B, b, P3}, P1, {a, A, K}},
    {{A, a, P3}, {C, c, P1}, P2, {b, B, K}},
    {{B, b, P1}, {A, a, P2}, P3, {c, C, K}},
    {{K, b, c}, {A, P3, P2}, a, {P1, C, B}},
    {{K, c, a}, {B, P1, P3}, b, {P2, A, C}},
    {{K, a, b}, {C, P2, P1}, c, {P3, B, A}},
}};

template <typename Enum, std::size_t N>
std::optional<Enum> parse_from(const std::array<std::string_view, N>& names, std::string_view text) {
  const auto it = std::find(names.begin(), names.end(), text);
  if (it == names.end()) return std::nullopt;
  return static_cast<Enum>(it - names.begin());
}

}  // namespace

std::string_view to_string(PointLabel p) { return kPointNames[index(p)]; }
std::string_view to_string(CircleLabel c) { return kCircleNames[index(c)]; }
std::string_view to_string(CenterLabel c) { return kCenterNames[index(c)]; }

std::optional<PointLabel> parse_point_label(std::string_view text) {
  return parse_from<PointLabel>(kPointNames, text);
}
std::optional<CircleLabel> parse_circle_label(std::string_view text) {
  return parse_from<CircleLabel>(kCircleNames, text);
}
std::optional<CenterLabel> parse_center_label(std::string_view text) {
  return parse_from<CenterLabel>(kCenterNames, text);
}

std::array<PointLabel, 4> quadrangle(CircleLabel circle) { return kQuadrangles[index(circle)]; }

bool on_circle(PointLabel p, CircleLabel circle) {
  const auto& q = kQuadrangles[index(circle)];
  return std::find(q.begin(), q.end(), p) != q.end();
}

std::array<CircleLabel, 2> circles_through(PointLabel p) {
  std::array<CircleLabel, 2> out{};
  std::size_t n = 0;
  for (CircleLabel c : kAllCircles) {
    if (on_circle(p, c)) out[n++] = c;
  }
  return out;
}

CircleLabel other_circle(PointLabel p, CircleLabel circle) {
  const auto pair = circles_through(p);
  return pair[0] == circle ? pair[1] : pair[0];
}

const std::array<PerspectiveRecord, kPointCount>& perspective_table() { return kTable; }

std::size_t row_of_vertex(PointLabel v) {
  for (std::size_t r = 0; r < kTable.size(); ++r) {
    if (kTable[r].vertex == v) return r;
  }
  throw std::logic_error("no perspective row for vertex");
}

CircleLabel circle_of(const Triangle& triangle) {
  for (CircleLabel c : kAllCircles) {
    if (std::all_of(triangle.begin(), triangle.end(), [c](PointLabel p) { return on_circle(p, c); })) return c;
  }
  throw std::logic_error("triangle is not inscribed in a configuration circle");
}

std::string triangle_name(const Triangle& triangle) {
  std::string out;
  for (PointLabel p : triangle) out += to_string(p);
  return out;
}

// ---------------------------------------------------------------------------

ConfigurationSeed reference_seed() {
  return {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(3), make_scalar(-3, 2)};
}

const char* reason_code(SeedDefect defect) {
  switch (defect) {
    case SeedDefect::DuplicateParameter: return "duplicate-parameter";
    case SeedDefect::TangentAtK: return "tangent-at-k";
    case SeedDefect::ParallelSides: return "parallel-sides";
    case SeedDefect::IdenticalCircles: return "identical-circles";
    case SeedDefect::CoincidentPoints: return "coincident-points";
    case SeedDefect::ExtraIncidence: return "extra-incidence";
  }
  return "unknown";
}

DegenerateSeed::DegenerateSeed(SeedDefect defect, const std::string& detail)
    : std::runtime_error(std::string(reason_code(defect)) + ": " + detail), defect_(defect) {}

WoodDesarguesConfiguration build_configuration(const ConfigurationSeed& seed) {
  const std::array<const CircleParameter*, 5> params{&seed.tJ, &seed.tK, &seed.tA, &seed.tB, &seed.tC};
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t k = i + 1; k < params.size(); ++k) {
      if (*params[i] == *params[k]) {
        throw DegenerateSeed(SeedDefect::DuplicateParameter, "parameter " + to_string(*params[i]) + " repeated");
      }
    }
  }

  const Point j = point_on_unit_circle(seed.tJ);
  const Point k = point_on_unit_circle(seed.tK);
  const Point pa = point_on_unit_circle(seed.tA);
  const Point pb = point_on_unit_circle(seed.tB);
  const Point pc = point_on_unit_circle(seed.tC);

  const Circle unit(Point(Scalar(0), Scalar(0)), Scalar(1));
  const Point second_center = midpoint(j, k) + seed.s * rot90(k - j);
  const Circle second(second_center, distance2(second_center, j));
  if (second == unit) throw DegenerateSeed(SeedDefect::IdenticalCircles, "second circle is the unit circle");

  auto through_k = [&](const Point& p, std::string_view name) {
    const SecondIntersection hit = second_intersection(second, line_through(p, k), k);
    if (hit.tangent) {
      throw DegenerateSeed(SeedDefect::TangentAtK, "line " + std::string(name) + "K touches the second circle at K");
    }
    return hit.point;
  };
  const Point qa = through_k(pa, "A");
  const Point qb = through_k(pb, "B");
  const Point qc = through_k(pc, "C");

  auto side_meet = [](const Point& p, const Point& q, const Point& r, const Point& s, std::string_view which) {
    try {
      return meet(line_through(p, q), line_through(r, s));
    } catch (const GeometryError& e) {
      const SeedDefect defect =
          e.code() == GeometryErrc::ParallelLines ? SeedDefect::ParallelSides : SeedDefect::CoincidentPoints;
      throw DegenerateSeed(defect, std::string(which) + ": " + e.what());
    }
  };

  WoodDesarguesConfiguration config{
      .seed = seed,
      .points = {pa, pb, pc, k, qa, qb, qc, side_meet(pb, pc, qb, qc, "BC, bc"), side_meet(pc, pa, qc, qa, "CA, ca"),
                 side_meet(pa, pb, qa, qb, "AB, ab")},
      .j = j,
      .circles = {unit, second, unit, unit, unit},
      .centers = {},
  };

  for (std::size_t i = 0; i < kPointCount; ++i) {
    for (std::size_t m = i + 1; m < kPointCount; ++m) {
      if (config.points[i] == config.points[m]) {
        throw DegenerateSeed(SeedDefect::CoincidentPoints,
                             std::string(kPointNames[i]) + " = " + std::string(kPointNames[m]));
      }
    }
    if (config.points[i] == j) {
      throw DegenerateSeed(SeedDefect::CoincidentPoints, std::string(kPointNames[i]) + " = J");
    }
  }

  for (CircleLabel c : {CircleLabel::Aa23, CircleLabel::Bb31, CircleLabel::Cc12}) {
    const auto q = quadrangle(c);
    try {
      config.circles[index(c)] = circle_through(config.point(q[0]), config.point(q[1]), config.point(q[2]));
    } catch (const GeometryError& e) {
      throw DegenerateSeed(SeedDefect::CoincidentPoints, std::string(to_string(c)) + ": " + e.what());
    }
  }
  for (CircleLabel c : kAllCircles) config.centers[index(c)] = config.circle(c).center();

  // A point on a third circle is a special position, not a Wood configuration.
  // Missing incidences are left for the verifier: they would falsify Wood.
  for (PointLabel p : kAllPoints) {
    for (CircleLabel c : kAllCircles) {
      if (!on_circle(p, c) && incident(config.circle(c), config.point(p))) {
        throw DegenerateSeed(SeedDefect::ExtraIncidence,
                             std::string(to_string(p)) + " vs circle " + std::string(to_string(c)));
      }
    }
  }
  return config;
}

}  // namespace wdc
