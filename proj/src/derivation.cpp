#include "wdc/configuration.hpp"

#include <algorithm>

namespace wdc {

namespace {

std::size_t side_on(std::size_t row, CircleLabel circle) {
  const PerspectiveRecord& rec = perspective_table()[row];
  if (circle_of(rec.triangle1) == circle) return 0;
  if (circle_of(rec.triangle2) == circle) return 1;
  throw std::logic_error("vertex does not lie on the requested circle");
}

}  // namespace

const Point& OrthocentreTable::h(CircleLabel circle, PointLabel v) const {
  const std::size_t row = row_of_vertex(v);
  return by_row[row][side_on(row, circle)];
}

const Point& OrthocentreTable::f(CircleLabel circle, PointLabel v) const {
  const std::size_t row = row_of_vertex(v);
  return by_row[row][1 - side_on(row, circle)];
}

OrthocentreTable derive_orthocentres(const WoodDesarguesConfiguration& config) {
  OrthocentreTable out;
  const auto& table = perspective_table();
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t side = 0; side < 2; ++side) {
      const Triangle& t = side == 0 ? table[r].triangle1 : table[r].triangle2;
      out.by_row[r][side] = orthocentre(config.point(t[0]), config.point(t[1]), config.point(t[2]));
    }
  }
  return out;
}

HaggeDerivation derive_hagge_centres(const WoodDesarguesConfiguration& config,
                                     const OrthocentreTable& orthocentres) {
  HaggeDerivation out;
  const auto& table = perspective_table();
  for (std::size_t r = 0; r < table.size(); ++r) {
    const Point& h = orthocentres.by_row[r][0];
    const Point& f = orthocentres.by_row[r][1];
    try {
      HaggeCentre centre{meet(perpendicular_bisector(config.j, h), perpendicular_bisector(config.j, f)),
                         std::nullopt};
      if (!is_collinear(config.j, h, f)) centre.circle = circle_through(config.j, h, f);
      out.by_row[r] = std::move(centre);
    } catch (const GeometryError& e) {
      out.issues.push_back("hagge " + std::string(to_string(table[r].vertex)) + ": " + e.what());
    }
  }
  return out;
}

PentagonFigure derive_pentagon(const WoodDesarguesConfiguration& config) {
  const Circle circle =
      circle_through(config.center(CenterLabel::U), config.center(CenterLabel::V), config.j);
  std::array<SecondIntersection, kCircleCount> meets;
  for (CircleLabel c : kAllCircles) meets[index(c)] = second_intersection(circle, config.circle(c), config.j);

  const Point& z = meets[index(CircleLabel::ABCK)].point;
  PentagonFigure out{
      .circle = circle,
      .meets = meets,
      .x = antipode(config.circle(CircleLabel::ABCK), z),
      .y = antipode(circle, z),
      .centres_concyclic = std::all_of(kAllCenters.begin(), kAllCenters.end(),
                                       [&](CenterLabel m) { return incident(circle, config.center(m)); }),
  };
  return out;
}

bool DerivedFigures::complete() const {
  if (!orthocentres || !pentagon || !issues.empty() || !hagge.issues.empty()) return false;
  if (std::any_of(pentagon->meets.begin(), pentagon->meets.end(), [](const auto& m) { return m.tangent; })) {
    return false;
  }
  return std::all_of(hagge.by_row.begin(), hagge.by_row.end(),
                     [](const auto& h) { return h.has_value() && h->circle.has_value(); });
}

DerivedFigures derive_figures(const WoodDesarguesConfiguration& config) {
  DerivedFigures out;
  try {
    out.orthocentres = derive_orthocentres(config);
    out.hagge = derive_hagge_centres(config, *out.orthocentres);
  } catch (const GeometryError& e) {
    out.issues.push_back(std::string("orthocentres: ") + e.what());
  }
  try {
    out.pentagon = derive_pentagon(config);
  } catch (const GeometryError& e) {
    out.issues.push_back(std::string("pentagon: ") + e.what());
  }
  return out;
}

}  // namespace wdc
