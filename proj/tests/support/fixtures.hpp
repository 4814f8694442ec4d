#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wdc/configuration.hpp"
#include "wdc/geometry.hpp"
#include "wdc/verifier.hpp"

namespace fixtures {

using wdc::CenterLabel;
using wdc::PointLabel;
using wdc::Scalar;

enum class Target { Point, Centre, J };

// Moves one coordinate of one stored point by +1/7.
struct Mutation {
  std::string check;
  Target target;
  PointLabel point = PointLabel::A;
  CenterLabel centre = CenterLabel::U;
  bool y = false;

  std::string describe() const {
    std::string what = target == Target::J        ? std::string("J")
                       : target == Target::Point ? std::string(wdc::to_string(point))
                                                 : std::string(wdc::to_string(centre));
    return what + (y ? ".y" : ".x") + " += 1/7";
  }

  wdc::WoodDesarguesConfiguration apply(wdc::WoodDesarguesConfiguration config) const {
    wdc::Point& p = target == Target::J ? config.j : target == Target::Point ? config.point(point) : config.center(centre);
    (y ? p.y : p.x) += Scalar(1, 7);
    return config;
  }
};

inline Mutation on_point(std::string check, PointLabel p, bool y = false) {
  return {std::move(check), Target::Point, p, CenterLabel::U, y};
}
inline Mutation on_centre(std::string check, CenterLabel c, bool y = false) {
  return {std::move(check), Target::Centre, PointLabel::A, c, y};
}

// One documented perturbation of the reference configuration per registered check.
inline std::vector<Mutation> mutation_table() {
  using enum PointLabel;
  using enum CenterLabel;
  std::vector<Mutation> out;
  for (const auto& rec : wdc::perspective_table()) {
    out.push_back(on_point("perspective." + std::string(wdc::to_string(rec.vertex)), rec.vertex));
  }
  out.push_back({"five_circles", Target::J});
  out.push_back(on_point("core_similarity", a));
  out.push_back(on_centre("orthocentre_quadrangle.ABCK", U));
  out.push_back(on_centre("orthocentre_quadrangle.abcK", V));
  out.push_back(on_centre("orthocentre_quadrangle.Aa23", L));
  out.push_back(on_centre("orthocentre_quadrangle.Bb31", M));
  out.push_back(on_centre("orthocentre_quadrangle.Cc12", N));
  out.push_back(on_point("steiner_line.ABCK", P1));
  out.push_back(on_point("steiner_line.abcK", P1));
  out.push_back(on_point("steiner_line.Aa23", P1));
  out.push_back(on_point("steiner_line.Bb31", P2));
  out.push_back(on_point("steiner_line.Cc12", P3));
  out.push_back(on_centre("pentagon_perspectives", N));
  out.push_back(on_centre("pentagon_quadrangles", M));
  out.push_back(on_centre("tangent_concurrency", L));
  out.push_back(on_point("hagge", K));
  out.push_back(on_centre("lemma1", M));
  out.push_back(on_point("lemma2", A));
  return out;
}

// Exact zero in either witness form.
inline bool is_zero_witness(const std::string& value) { return value == "0/1" || value == "(0/1, 0/1)"; }

inline bool has_nonzero_witness(const wdc::CheckResult& r) {
  for (const auto& w : r.witnesses) {
    if (!is_zero_witness(w.value)) return true;
  }
  return false;
}

// Small rationals for lemma instances.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  Scalar next(long magnitude = 9) {
    std::uniform_int_distribution<long> num(-magnitude, magnitude);
    std::uniform_int_distribution<long> den(1, magnitude);
    const long p = num(rng_);
    return wdc::make_scalar(p, den(rng_));
  }
  wdc::Point point(long magnitude = 9) {
    Scalar x = next(magnitude);
    Scalar y = next(magnitude);
    return {x, y};
  }

 private:
  std::mt19937_64 rng_;
};

// P, Q, R, S on one rational circle at four distinct parameters; `off` moves S
// radially by a factor 1 + 1/5 so it leaves the circle.
struct Lemma1Instance {
  wdc::Point p, q, r, s;
};

inline Lemma1Instance lemma1_instance(RationalSource& src, bool off) {
  for (;;) {
    const wdc::Point centre = src.point();
    Scalar radius = src.next();
    if (radius == 0) continue;
    Scalar t[4];
    for (auto& v : t) v = src.next();
    bool distinct = true;
    for (int i = 0; i < 4; ++i) {
      for (int k = i + 1; k < 4; ++k) distinct = distinct && t[i] != t[k];
    }
    if (!distinct) continue;
    auto at = [&](const Scalar& param, const Scalar& rad) {
      return centre + rad * wdc::point_on_unit_circle(param);
    };
    Scalar s_radius = off ? Scalar(radius * Scalar(6, 5)) : radius;
    return {at(t[0], radius), at(t[1], radius), at(t[2], radius), at(t[3], s_radius)};
  }
}

}  // namespace fixtures
