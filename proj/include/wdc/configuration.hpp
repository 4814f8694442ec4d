#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wdc/geometry.hpp"

namespace wdc {

// ---------------------------------------------------------------------------
// Labels

/// The ten points of the configuration. P1..P3 are printed as "1", "2", "3".
enum class PointLabel : std::uint8_t { A, B, C, K, a, b, c, P1, P2, P3 };
inline constexpr std::size_t kPointCount = 10;

/// The five circles, named by the quadrangles inscribed in them.
enum class CircleLabel : std::uint8_t { ABCK, abcK, Aa23, Bb31, Cc12 };
inline constexpr std::size_t kCircleCount = 5;

/// Centres of the five circles, in CircleLabel order.
enum class CenterLabel : std::uint8_t { U, V, L, M, N };

inline constexpr std::array<PointLabel, kPointCount> kAllPoints{
    PointLabel::A, PointLabel::B, PointLabel::C,  PointLabel::K,  PointLabel::a,
    PointLabel::b, PointLabel::c, PointLabel::P1, PointLabel::P2, PointLabel::P3};
inline constexpr std::array<CircleLabel, kCircleCount> kAllCircles{
    CircleLabel::ABCK, CircleLabel::abcK, CircleLabel::Aa23, CircleLabel::Bb31, CircleLabel::Cc12};
inline constexpr std::array<CenterLabel, kCircleCount> kAllCenters{
    CenterLabel::U, CenterLabel::V, CenterLabel::L, CenterLabel::M, CenterLabel::N};

constexpr std::size_t index(PointLabel p) { return static_cast<std::size_t>(p); }
constexpr std::size_t index(CircleLabel c) { return static_cast<std::size_t>(c); }
constexpr std::size_t index(CenterLabel c) { return static_cast<std::size_t>(c); }
constexpr CenterLabel center_of(CircleLabel c) { return static_cast<CenterLabel>(index(c)); }

std::string_view to_string(PointLabel p);
std::string_view to_string(CircleLabel c);
std::string_view to_string(CenterLabel c);
std::optional<PointLabel> parse_point_label(std::string_view text);
std::optional<CircleLabel> parse_circle_label(std::string_view text);
std::optional<CenterLabel> parse_center_label(std::string_view text);

/// Vertices of the quadrangle inscribed in a circle, in the order of its name.
std::array<PointLabel, 4> quadrangle(CircleLabel circle);
/// The two circles through a configuration point.
std::array<CircleLabel, 2> circles_through(PointLabel p);
/// The circle through p other than `circle`. Precondition: p lies on circle.
CircleLabel other_circle(PointLabel p, CircleLabel circle);
bool on_circle(PointLabel p, CircleLabel circle);

// ---------------------------------------------------------------------------
// The ten perspectives

using Triangle = std::array<PointLabel, 3>;

struct PerspectiveRecord {
  Triangle triangle1;
  Triangle triangle2;
  PointLabel vertex;
  /// perspectrix[k] is where the sides opposite vertex k of the two triangles
  /// meet.
  Triangle perspectrix;
};

const std::array<PerspectiveRecord, kPointCount>& perspective_table();
/// Row whose vertex of perspective is v.
std::size_t row_of_vertex(PointLabel v);
/// Circle carrying all three vertices of a Table-1 triangle.
CircleLabel circle_of(const Triangle& triangle);
std::string triangle_name(const Triangle& triangle);

// ---------------------------------------------------------------------------
// Seeds and the built configuration

struct ConfigurationSeed {
  CircleParameter tJ;
  CircleParameter tK;
  CircleParameter tA;
  CircleParameter tB;
  CircleParameter tC;
  /// Offset of the second circle's centre along the perpendicular bisector of JK.
  Scalar s;

  friend bool operator==(const ConfigurationSeed&, const ConfigurationSeed&) = default;
};

/// (tJ, tK, tA, tB, tC, s) = (0, 1, -1, 2, 3, -3/2).
ConfigurationSeed reference_seed();

enum class SeedDefect {
  DuplicateParameter,
  TangentAtK,
  ParallelSides,
  IdenticalCircles,
  CoincidentPoints,
  ExtraIncidence,
};

const char* reason_code(SeedDefect defect);

class DegenerateSeed : public std::runtime_error {
 public:
  DegenerateSeed(SeedDefect defect, const std::string& detail);
  SeedDefect defect() const noexcept { return defect_; }

 private:
  SeedDefect defect_;
};

struct WoodDesarguesConfiguration {
  std::optional<ConfigurationSeed> seed;
  std::array<Point, kPointCount> points;
  Point j;
  std::array<Circle, kCircleCount> circles;
  std::array<Point, kCircleCount> centers;

  const Point& point(PointLabel p) const { return points[index(p)]; }
  Point& point(PointLabel p) { return points[index(p)]; }
  const Circle& circle(CircleLabel c) const { return circles[index(c)]; }
  const Point& center(CenterLabel c) const { return centers[index(c)]; }
  Point& center(CenterLabel c) { return centers[index(c)]; }
  const Point& center(CircleLabel c) const { return centers[index(c)]; }
};

/// Circle 1 is the unit circle; J, K, A, B, C sit on it at the seeded
/// parameters. Circle 2 passes through J and K with centre
/// midpoint(J, K) + s * rot90(K - J). Throws DegenerateSeed.
WoodDesarguesConfiguration build_configuration(const ConfigurationSeed& seed);

// ---------------------------------------------------------------------------
// Derived figures

/// Orthocentres of the twenty Table-1 triangles, indexed [row][triangle].
/// Relative to a circle through v, H(v) is the orthocentre of the row-v
/// triangle inscribed in that circle and F(v) that of its partner.
struct OrthocentreTable {
  std::array<std::array<Point, 2>, kPointCount> by_row;

  const Point& h(CircleLabel circle, PointLabel v) const;
  const Point& f(CircleLabel circle, PointLabel v) const;
};

/// Throws GeometryError when a triangle is degenerate.
OrthocentreTable derive_orthocentres(const WoodDesarguesConfiguration& config);

struct HaggeCentre {
  Point centre;
  /// Circle through J, H and F; absent when those are collinear.
  std::optional<Circle> circle;
};

struct HaggeDerivation {
  std::array<std::optional<HaggeCentre>, kPointCount> by_row;
  /// One entry per row that could not be derived.
  std::vector<std::string> issues;

  const std::optional<HaggeCentre>& at(PointLabel v) const { return by_row[row_of_vertex(v)]; }
};

HaggeDerivation derive_hagge_centres(const WoodDesarguesConfiguration& config, const OrthocentreTable& orthocentres);

struct PentagonFigure {
  /// The circle through J, U and V.
  Circle circle;
  /// Second meet of the pentagon circle with each of the five circles (after
  /// J). The ABCK entry is Z, the Aa23 entry is W.
  std::array<SecondIntersection, kCircleCount> meets;
  /// Antipode of Z on circle ABCK.
  Point x;
  /// Antipode of Z on the pentagon circle.
  Point y;
  /// Whether L, M, N also lie on the circle.
  bool centres_concyclic = false;

  const Point& z() const { return meets[index(CircleLabel::ABCK)].point; }
  const Point& w() const { return meets[index(CircleLabel::Aa23)].point; }
};

/// Throws GeometryError when the circle through J, U, V or a second
/// intersection cannot be formed.
PentagonFigure derive_pentagon(const WoodDesarguesConfiguration& config);

struct DerivedFigures {
  std::optional<OrthocentreTable> orthocentres;
  HaggeDerivation hagge;
  std::optional<PentagonFigure> pentagon;
  std::vector<std::string> issues;

  /// Everything derived, no tangencies, every Hagge circle present.
  bool complete() const;
};

/// Never throws on geometric degeneracy; failures land in `issues`.
DerivedFigures derive_figures(const WoodDesarguesConfiguration& config);

}  // namespace wdc
