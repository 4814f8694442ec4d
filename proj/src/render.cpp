#include "wdc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "wdc/document.hpp"

namespace wdc {

namespace {

struct Vec {
  double x;
  double y;
};

Vec to_vec(const Point& p) { return {to_double(p.x), to_double(p.y)}; }

class BoundingBox {
 public:
  void add(Vec p) {
    min_x_ = std::min(min_x_, p.x);
    min_y_ = std::min(min_y_, p.y);
    max_x_ = std::max(max_x_, p.x);
    max_y_ = std::max(max_y_, p.y);
  }
  void add_disc(Vec c, double r) {
    add({c.x - r, c.y - r});
    add({c.x + r, c.y + r});
  }
  bool empty() const { return min_x_ > max_x_; }

  double min_x_ = std::numeric_limits<double>::infinity();
  double min_y_ = std::numeric_limits<double>::infinity();
  double max_x_ = -std::numeric_limits<double>::infinity();
  double max_y_ = -std::numeric_limits<double>::infinity();
};

struct CircleShape {
  std::string id;
  Vec center;
  double radius;
};

struct Segment {
  std::string id;
  Vec from;
  Vec to;
};

struct Marker {
  std::string label;
  Vec at;
};

// Segment along the line of three points, extended past the outer two.
Segment perspectrix_segment(const std::string& id, const std::array<Vec, 3>& pts) {
  const Vec dir{pts[1].x - pts[0].x, pts[1].y - pts[0].y};
  const double len2 = dir.x * dir.x + dir.y * dir.y;
  double lo = 0.0;
  double hi = 0.0;
  for (const Vec& p : pts) {
    const double t = len2 > 0 ? ((p.x - pts[0].x) * dir.x + (p.y - pts[0].y) * dir.y) / len2 : 0.0;
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  const double pad = 0.1 * (hi - lo);
  lo -= pad;
  hi += pad;
  return {id, {pts[0].x + lo * dir.x, pts[0].y + lo * dir.y}, {pts[0].x + hi * dir.x, pts[0].y + hi * dir.y}};
}

}  // namespace

RenderStyle parse_layers(std::string_view list) {
  RenderStyle style;
  if (list == "all") return style;
  style.points = style.circles = style.perspectrices = style.hagge_centres = style.pentagon = false;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const std::string_view name = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    if (name == "points") {
      style.points = true;
    } else if (name == "circles") {
      style.circles = true;
    } else if (name == "perspectrices") {
      style.perspectrices = true;
    } else if (name == "hagge") {
      style.hagge_centres = true;
    } else if (name == "pentagon") {
      style.pentagon = true;
    } else {
      throw FormatError("unknown layer '" + std::string(name) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return style;
}

std::string format_coordinate(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string render_svg(const WoodDesarguesConfiguration& config, const DerivedFigures& derived,
                       const RenderStyle& style) {
  std::vector<CircleShape> config_circles;
  std::vector<CircleShape> pentagon_circles;
  std::vector<CircleShape> hagge_circles;
  std::vector<Segment> segments;
  std::vector<Marker> markers;

  if (style.circles) {
    for (CircleLabel c : kAllCircles) {
      config_circles.push_back({"circle-" + std::string(to_string(c)), to_vec(config.circle(c).center()),
                                std::sqrt(to_double(config.circle(c).radius_squared()))});
    }
  }
  if (style.pentagon && derived.pentagon) {
    const Circle& pc = derived.pentagon->circle;
    pentagon_circles.push_back({"pentagon", to_vec(pc.center()), std::sqrt(to_double(pc.radius_squared()))});
  }
  if (style.hagge_centres) {
    for (const auto& rec : perspective_table()) {
      const auto& h = derived.hagge.at(rec.vertex);
      if (h && h->circle) {
        hagge_circles.push_back({"hagge-" + std::string(to_string(rec.vertex)), to_vec(h->circle->center()),
                                 std::sqrt(to_double(h->circle->radius_squared()))});
      }
    }
  }
  if (style.perspectrices) {
    for (const auto& rec : perspective_table()) {
      segments.push_back(perspectrix_segment(
          "perspectrix-" + triangle_name(rec.perspectrix),
          {to_vec(config.point(rec.perspectrix[0])), to_vec(config.point(rec.perspectrix[1])),
           to_vec(config.point(rec.perspectrix[2]))}));
    }
  }
  if (style.points) {
    for (PointLabel p : kAllPoints) markers.push_back({std::string(to_string(p)), to_vec(config.point(p))});
    markers.push_back({"J", to_vec(config.j)});
  }
  if (style.pentagon) {
    for (CenterLabel m : kAllCenters) markers.push_back({std::string(to_string(m)), to_vec(config.center(m))});
  }
  if (style.hagge_centres) {
    for (const auto& rec : perspective_table()) {
      const auto& h = derived.hagge.at(rec.vertex);
      if (h) markers.push_back({"h(" + std::string(to_string(rec.vertex)) + ")", to_vec(h->centre)});
    }
  }

  BoundingBox box;
  for (const auto* group : {&config_circles, &pentagon_circles, &hagge_circles}) {
    for (const auto& c : *group) box.add_disc(c.center, c.radius);
  }
  for (const auto& s : segments) {
    box.add(s.from);
    box.add(s.to);
  }
  for (const auto& m : markers) box.add(m.at);
  if (box.empty()) {
    box.add({-1.0, -1.0});
    box.add({1.0, 1.0});
  }
  const double span = std::max({box.max_x_ - box.min_x_, box.max_y_ - box.min_y_, 1e-9});
  const double pad = style.margin * span;
  const double min_x = box.min_x_ - pad;
  const double max_y = box.max_y_ + pad;
  const double view_w = box.max_x_ - box.min_x_ + 2 * pad;
  const double view_h = box.max_y_ - box.min_y_ + 2 * pad;
  const double stroke = span / 400.0;
  const double dot = span / 200.0;
  const double font = span / 50.0;

  auto f = format_coordinate;
  auto flip = [](double y) { return 0.0 - y; };
  std::ostringstream out;
  out << R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")" << style.width << R"(" height=")"
      << style.height << R"(" viewBox=")" << f(min_x) << ' ' << f(flip(max_y)) << ' ' << f(view_w) << ' '
      << f(view_h) << "\">\n";
  out << R"(<rect x=")" << f(min_x) << R"(" y=")" << f(flip(max_y)) << R"(" width=")" << f(view_w)
      << R"(" height=")" << f(view_h) << "\" fill=\"white\"/>\n";
  out << R"svg(<g transform="scale(1,-1)" fill="none" stroke-width=")svg" << f(stroke) << "\">\n";

  auto write_circles = [&](const char* group, const char* colour, const std::vector<CircleShape>& shapes) {
    if (shapes.empty()) return;
    out << "<g id=\"" << group << "\" stroke=\"" << colour << "\">\n";
    for (const auto& c : shapes) {
      out << "<circle id=\"" << c.id << "\" cx=\"" << f(c.center.x) << "\" cy=\"" << f(c.center.y) << "\" r=\""
          << f(c.radius) << "\"/>\n";
    }
    out << "</g>\n";
  };
  write_circles("circles", "#1f77b4", config_circles);
  write_circles("pentagon", "#d62728", pentagon_circles);
  write_circles("hagge", "#2ca02c", hagge_circles);

  if (!segments.empty()) {
    out << "<g id=\"perspectrices\" stroke=\"#7f7f7f\">\n";
    for (const auto& s : segments) {
      out << "<line id=\"" << s.id << "\" x1=\"" << f(s.from.x) << "\" y1=\"" << f(s.from.y) << "\" x2=\""
          << f(s.to.x) << "\" y2=\"" << f(s.to.y) << "\"/>\n";
    }
    out << "</g>\n";
  }
  if (!markers.empty()) {
    out << "<g id=\"points\" fill=\"black\" stroke=\"none\">\n";
    for (const auto& m : markers) {
      out << "<rect x=\"" << f(m.at.x - dot) << "\" y=\"" << f(m.at.y - dot) << "\" width=\"" << f(2 * dot)
          << "\" height=\"" << f(2 * dot) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</g>\n";
  if (!markers.empty()) {
    out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << f(font) << "\">\n";
    for (const auto& m : markers) {
      out << "<text x=\"" << f(m.at.x + dot) << "\" y=\"" << f(flip(m.at.y) - dot) << "\">" << m.label
          << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace wdc
