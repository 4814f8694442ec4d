#include "wdc/document.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace wdc {

namespace {

constexpr std::array<std::string_view, 6> kSeedKeys{"tJ", "tK", "tA", "tB", "tC", "s"};

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

Scalar scalar_or_throw(std::string_view text, std::string_view what) {
  const auto value = parse_scalar(text);
  if (!value) throw FormatError("bad rational for " + std::string(what) + ": '" + std::string(text) + "'");
  return *value;
}

CircleParameter parameter_or_throw(std::string_view text, std::string_view what) {
  if (text == "inf") return CircleParameter::infinity();
  return CircleParameter(scalar_or_throw(text, what));
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

const Json& member(const Json& doc, std::string_view key) {
  if (!doc.is_object()) throw FormatError("expected an object holding '" + std::string(key) + "'");
  const auto it = doc.find(std::string(key));
  if (it == doc.end()) throw FormatError("missing field '" + std::string(key) + "'");
  return *it;
}

Scalar scalar_from(const Json& node, std::string_view what) {
  if (!node.is_string()) throw FormatError(std::string(what) + " must be a rational string");
  return scalar_or_throw(node.get<std::string>(), what);
}

Point point_from(const Json& node, std::string_view what) {
  if (!node.is_array() || node.size() != 2) throw FormatError(std::string(what) + " must be [x, y]");
  return {scalar_from(node[0], what), scalar_from(node[1], what)};
}

// Exactly the keys of `names`, each once.
template <std::size_t N>
void require_keys(const Json& node, const std::array<std::string_view, N>& names, std::string_view what) {
  if (!node.is_object()) throw FormatError(std::string(what) + " must be an object");
  if (node.size() != N) throw FormatError(std::string(what) + " must have exactly " + std::to_string(N) + " entries");
  for (auto name : names) member(node, name);
}

template <typename Enum, std::size_t N>
std::array<std::string_view, N> names_of(const std::array<Enum, N>& labels) {
  std::array<std::string_view, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = to_string(labels[i]);
  return out;
}

}  // namespace

ConfigurationSeed parse_seed_text(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw FormatError("seed field without '=': '" + std::string(item) + "'");
    std::string key = trim(item.substr(0, eq));
    if (std::find(kSeedKeys.begin(), kSeedKeys.end(), key) == kSeedKeys.end()) {
      throw FormatError("unknown seed key '" + key + "'");
    }
    if (!fields.emplace(key, trim(item.substr(eq + 1))).second) throw FormatError("seed key '" + key + "' repeated");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (auto key : kSeedKeys) {
    if (!fields.contains(key)) throw FormatError("seed key '" + std::string(key) + "' missing");
  }
  return {parameter_or_throw(fields.at("tJ"), "tJ"), parameter_or_throw(fields.at("tK"), "tK"),
          parameter_or_throw(fields.at("tA"), "tA"), parameter_or_throw(fields.at("tB"), "tB"),
          parameter_or_throw(fields.at("tC"), "tC"), scalar_or_throw(fields.at("s"), "s")};
}

std::string format_seed_text(const ConfigurationSeed& seed) {
  return "tJ=" + to_string(seed.tJ) + ",tK=" + to_string(seed.tK) + ",tA=" + to_string(seed.tA) +
         ",tB=" + to_string(seed.tB) + ",tC=" + to_string(seed.tC) + ",s=" + to_string(seed.s);
}

Json seed_to_json(const ConfigurationSeed& seed) {
  return Json{{"tJ", to_string(seed.tJ)}, {"tK", to_string(seed.tK)}, {"tA", to_string(seed.tA)},
              {"tB", to_string(seed.tB)}, {"tC", to_string(seed.tC)}, {"s", to_string(seed.s)}};
}

ConfigurationSeed seed_from_json(const Json& doc) {
  require_keys(doc, kSeedKeys, "seed");
  auto text = [&](std::string_view key) {
    const Json& v = member(doc, key);
    if (!v.is_string()) throw FormatError("seed." + std::string(key) + " must be a string");
    return v.get<std::string>();
  };
  return {parameter_or_throw(text("tJ"), "tJ"), parameter_or_throw(text("tK"), "tK"),
          parameter_or_throw(text("tA"), "tA"), parameter_or_throw(text("tB"), "tB"),
          parameter_or_throw(text("tC"), "tC"), scalar_or_throw(text("s"), "s")};
}

Json configuration_to_json(const WoodDesarguesConfiguration& config) {
  Json doc = Json::object();
  doc["seed"] = config.seed ? seed_to_json(*config.seed) : Json(nullptr);
  Json points = Json::object();
  for (PointLabel p : kAllPoints) points[std::string(to_string(p))] = point_json(config.point(p));
  doc["points"] = std::move(points);
  doc["j"] = point_json(config.j);
  Json circles = Json::object();
  for (CircleLabel c : kAllCircles) {
    circles[std::string(to_string(c))] = Json{{"center", point_json(config.circle(c).center())},
                                              {"radiusSquared", to_string(config.circle(c).radius_squared())}};
  }
  doc["circles"] = std::move(circles);
  Json centers = Json::object();
  for (CenterLabel m : kAllCenters) centers[std::string(to_string(m))] = point_json(config.center(m));
  doc["centers"] = std::move(centers);
  return doc;
}

WoodDesarguesConfiguration configuration_from_json(const Json& doc) {
  if (!doc.is_object()) throw FormatError("configuration document must be a JSON object");
  const Json& seed_node = member(doc, "seed");
  std::optional<ConfigurationSeed> seed;
  if (!seed_node.is_null()) seed = seed_from_json(seed_node);

  const Json& points_node = member(doc, "points");
  require_keys(points_node, names_of(kAllPoints), "points");
  const Json& circles_node = member(doc, "circles");
  require_keys(circles_node, names_of(kAllCircles), "circles");
  const Json& centers_node = member(doc, "centers");
  require_keys(centers_node, names_of(kAllCenters), "centers");

  auto circle_from = [](const Json& node, std::string_view name) {
    const std::string what = "circles." + std::string(name);
    require_keys(node, std::array<std::string_view, 2>{"center", "radiusSquared"}, what);
    Scalar r2 = scalar_from(node["radiusSquared"], what + ".radiusSquared");
    if (r2 <= 0) throw FormatError(what + ".radiusSquared must be positive");
    return Circle(point_from(node["center"], what + ".center"), std::move(r2));
  };

  const Circle placeholder(Point(Scalar(0), Scalar(0)), Scalar(1));
  WoodDesarguesConfiguration config{
      .seed = seed,
      .points = {},
      .j = point_from(member(doc, "j"), "j"),
      .circles = {placeholder, placeholder, placeholder, placeholder, placeholder},
      .centers = {},
  };
  for (PointLabel p : kAllPoints) {
    const std::string name(to_string(p));
    config.point(p) = point_from(points_node[name], "points." + name);
  }
  for (CircleLabel c : kAllCircles) {
    config.circles[index(c)] = circle_from(circles_node[std::string(to_string(c))], to_string(c));
  }
  for (CenterLabel m : kAllCenters) {
    const std::string name(to_string(m));
    config.center(m) = point_from(centers_node[name], "centers." + name);
  }
  return config;
}

Json report_to_json(const VerificationReport& report) {
  Json doc = Json::object();
  doc["seed"] = report.seed ? seed_to_json(*report.seed) : Json(nullptr);
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(Json{{"label", w.label}, {"value", w.value}});
    results.push_back(Json{{"name", r.name}, {"status", to_string(r.status)}, {"witnesses", std::move(witnesses)},
                           {"notes", r.notes}});
  }
  doc["results"] = std::move(results);
  const ReportSummary s = report.summary();
  doc["summary"] = Json{{"checks", report.results.size()},
                        {"pass", s.pass},
                        {"degenerate_pass", s.degenerate_pass},
                        {"fail", s.fail}};
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_document(std::string_view text) {
  if (trim(text).empty()) throw FormatError("empty document");
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace wdc
