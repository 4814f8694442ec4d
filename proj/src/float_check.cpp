#include "wdc/float_check.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "wdc/verifier.hpp"

namespace wdc {

namespace {

using Z = std::complex<double>;

Z to_z(const Point& p) { return {to_double(p.x), to_double(p.y)}; }

double cross(Z a, Z b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Line through p with direction d meets line through q with direction e.
Z intersect(Z p, Z d, Z q, Z e) { return p + d * (cross(q - p, e) / cross(d, e)); }

Z circumcenter(Z a, Z b, Z c) {
  const Z ab = (a + b) / 2.0;
  const Z ac = (a + c) / 2.0;
  const Z i(0, 1);
  return intersect(ab, (b - a) * i, ac, (c - a) * i);
}

Z orthocentre(Z a, Z b, Z c) {
  const Z i(0, 1);
  return intersect(a, (c - b) * i, b, (c - a) * i);
}

// Reflection of `known` in the line of centres: the other common point.
Z other_meet(Z c1, Z c2, Z known) {
  const Z d = c2 - c1;
  const double t = ((known - c1) * std::conj(d)).real() / std::norm(d);
  const Z foot = c1 + t * d;
  return 2.0 * foot - known;
}

class Residuals {
 public:
  explicit Residuals(double scale) : scale_(scale) {}

  void points(Z got, Z want) { bump(std::abs(got - want) / scale_); }

  void collinear(Z p, Z q, Z r) {
    const double tiny = 1e-9 * scale_;
    if (std::abs(q - p) < tiny || std::abs(r - p) < tiny || std::abs(r - q) < tiny) return;
    bump(std::abs(cross(q - p, r - p)) / (std::abs(q - p) * std::abs(r - p)));
  }

  void on_circle(Z centre, double radius, Z p) { bump(std::abs(std::abs(p - centre) - radius) / scale_); }

  void relative(double got, double want) { bump(std::abs(got - want) / std::max(std::abs(want), 1.0)); }

  // Two-point similarity applied to the remaining pairs; returns alpha, beta.
  std::pair<Z, Z> similar(const std::vector<Z>& src, const std::vector<Z>& dst) {
    const Z alpha = (dst[1] - dst[0]) / (src[1] - src[0]);
    const Z beta = dst[0] - alpha * src[0];
    for (std::size_t k = 2; k < src.size(); ++k) points(alpha * src[k] + beta, dst[k]);
    return {alpha, beta};
  }

  double take() {
    const double out = worst_;
    worst_ = 0.0;
    return out;
  }

 private:
  void bump(double r) { worst_ = std::max(worst_, std::isfinite(r) ? r : INFINITY); }

  double scale_;
  double worst_ = 0.0;
};

}  // namespace

std::vector<FloatResidual> float_residuals(const WoodDesarguesConfiguration& config) {
  using enum PointLabel;
  auto pt = [&](PointLabel p) { return to_z(config.point(p)); };
  auto centre = [&](CenterLabel m) { return to_z(config.center(m)); };
  const Z j = to_z(config.j);

  double scale = 1.0;
  auto widen = [&scale](Z p) { scale = std::max({scale, std::abs(p.real()), std::abs(p.imag())}); };
  for (PointLabel p : kAllPoints) widen(pt(p));
  for (CenterLabel m : kAllCenters) widen(centre(m));
  widen(j);

  Residuals res(scale);
  std::vector<FloatResidual> out;
  auto close = [&](std::string name) { out.push_back({std::move(name), res.take()}); };

  const auto& table = perspective_table();
  std::array<std::array<Z, 2>, kPointCount> orth{};
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& t1 = table[r].triangle1;
    const auto& t2 = table[r].triangle2;
    orth[r][0] = orthocentre(pt(t1[0]), pt(t1[1]), pt(t1[2]));
    orth[r][1] = orthocentre(pt(t2[0]), pt(t2[1]), pt(t2[2]));
  }
  auto h_of = [&](CircleLabel c, PointLabel v) {
    const std::size_t r = row_of_vertex(v);
    return circle_of(table[r].triangle1) == c ? orth[r][0] : orth[r][1];
  };
  auto f_of = [&](CircleLabel c, PointLabel v) {
    const std::size_t r = row_of_vertex(v);
    return circle_of(table[r].triangle1) == c ? orth[r][1] : orth[r][0];
  };

  const Z pent_centre = circumcenter(centre(CenterLabel::U), centre(CenterLabel::V), j);
  const double pent_radius = std::abs(j - pent_centre);
  const Z z = other_meet(pent_centre, centre(CenterLabel::U), j);
  const Z w = other_meet(pent_centre, centre(CenterLabel::L), j);

  // Perspectives.
  for (const auto& rec : table) {
    for (std::size_t k = 0; k < 3; ++k) res.collinear(pt(rec.triangle1[k]), pt(rec.triangle2[k]), pt(rec.vertex));
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t i = (k + 1) % 3;
      const std::size_t m = (k + 2) % 3;
      const Z p = pt(rec.triangle1[i]);
      const Z q = pt(rec.triangle2[i]);
      res.points(intersect(p, pt(rec.triangle1[m]) - p, q, pt(rec.triangle2[m]) - q), pt(rec.perspectrix[k]));
    }
    res.collinear(pt(rec.perspectrix[0]), pt(rec.perspectrix[1]), pt(rec.perspectrix[2]));
    close("perspective." + std::string(to_string(rec.vertex)));
  }

  // Five circles.
  for (CircleLabel c : kAllCircles) {
    const auto q = quadrangle(c);
    const Z o = circumcenter(pt(q[0]), pt(q[1]), pt(q[2]));
    const double radius = std::abs(pt(q[0]) - o);
    res.on_circle(o, radius, pt(q[3]));
    res.on_circle(o, radius, j);
    res.points(o, to_z(config.center(c)));
  }
  for (CenterLabel m : kAllCenters) res.on_circle(pent_centre, pent_radius, centre(m));
  close("five_circles");

  {
    const auto [alpha, beta] = res.similar({pt(A), pt(B), pt(C)}, {pt(a), pt(b), pt(c)});
    res.points(beta / (1.0 - alpha), j);
    res.relative(std::norm(alpha), to_double(config.circle(CircleLabel::abcK).radius_squared()) /
                                       to_double(config.circle(CircleLabel::ABCK).radius_squared()));
    close("core_similarity");
  }

  for (CircleLabel c : kAllCircles) {
    const auto q = quadrangle(c);
    std::vector<Z> src;
    std::vector<Z> hs;
    for (PointLabel v : q) {
      src.push_back(pt(v));
      hs.push_back(h_of(c, v));
    }
    const auto [alpha, beta] = res.similar(src, hs);
    res.points(alpha, Z(-1.0, 0.0));
    res.points(beta / (1.0 - alpha), (src[0] + src[1] + src[2] + src[3]) / 2.0 - to_z(config.center(c)));
    close("orthocentre_quadrangle." + std::string(to_string(c)));
  }

  for (CircleLabel c : kAllCircles) {
    std::vector<Z> fs;
    for (PointLabel v : quadrangle(c)) fs.push_back(f_of(c, v));
    // Anchor on the widest pair so near-duplicates do not set the direction.
    std::size_t bi = 0;
    std::size_t bk = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t k = i + 1; k < fs.size(); ++k) {
        if (std::abs(fs[i] - fs[k]) > std::abs(fs[bi] - fs[bk])) {
          bi = i;
          bk = k;
        }
      }
    }
    for (std::size_t m = 0; m < fs.size(); ++m) {
      if (m != bi && m != bk) res.collinear(fs[bi], fs[bk], fs[m]);
    }
    close("steiner_line." + std::string(to_string(c)));
  }

  {
    res.collinear(pt(A), centre(CenterLabel::L), z);
    res.collinear(pt(B), centre(CenterLabel::M), z);
    res.collinear(pt(C), centre(CenterLabel::N), z);
    res.collinear(pt(A), centre(CenterLabel::U), w);
    const auto [alpha, beta] =
        res.similar({pt(A), pt(B), pt(C)}, {centre(CenterLabel::L), centre(CenterLabel::M), centre(CenterLabel::N)});
    res.points(beta / (1.0 - alpha), j);
    close("pentagon_perspectives");
  }

  for (CircleLabel c : kAllCircles) {
    std::vector<Z> src;
    std::vector<Z> dst;
    for (PointLabel v : quadrangle(c)) {
      src.push_back(pt(v));
      dst.push_back(to_z(config.center(other_circle(v, c))));
    }
    res.similar(src, dst);
  }
  close("pentagon_quadrangles");

  const Z i(0, 1);
  const Z ta = (pt(A) - centre(CenterLabel::L)) * i;
  const Z tb = (pt(B) - centre(CenterLabel::M)) * i;
  const Z tc = (pt(C) - centre(CenterLabel::N)) * i;
  {
    const Z x = intersect(pt(A), ta, pt(B), tb);
    res.collinear(pt(C), pt(C) + tc, x);
    res.on_circle(to_z(config.center(CircleLabel::ABCK)), std::abs(pt(A) - centre(CenterLabel::U)), x);
    res.points(x, 2.0 * centre(CenterLabel::U) - z);
    const Z y = intersect(centre(CenterLabel::L), ta, centre(CenterLabel::M), tb);
    res.collinear(centre(CenterLabel::N), centre(CenterLabel::N) + tc, y);
    res.on_circle(pent_centre, pent_radius, y);
    res.points((y + z) / 2.0, pent_centre);
    close("tangent_concurrency");
  }

  {
    std::array<Z, kPointCount> hagge{};
    for (std::size_t r = 0; r < table.size(); ++r) {
      const Z hp = orth[r][0];
      const Z fp = orth[r][1];
      hagge[r] = intersect((j + hp) / 2.0, (hp - j) * i, (j + fp) / 2.0, (fp - j) * i);
      const auto& per = table[r].perspectrix;
      res.collinear(pt(per[0]), pt(per[1]), hagge[r]);
      std::vector<Z> avoid;
      for (CircleLabel c : kAllCircles) {
        if (!on_circle(table[r].vertex, c)) avoid.push_back(to_z(config.center(c)));
      }
      res.points(hagge[r], orthocentre(avoid[0], avoid[1], avoid[2]));
    }
    for (CircleLabel c : kAllCircles) {
      std::vector<Z> src;
      std::vector<Z> hq;
      for (PointLabel v : quadrangle(c)) {
        src.push_back(pt(v));
        hq.push_back(hagge[row_of_vertex(v)]);
      }
      res.similar(src, hq);
      const Z o = circumcenter(hq[0], hq[1], hq[2]);
      res.on_circle(o, std::abs(hq[0] - o), hq[3]);
      res.relative(std::norm(hq[0] - o), pent_radius * pent_radius);
    }
    close("hagge");
  }

  {
    // Perpendiculars at L, M, N to LZ, MZ, NZ, i.e. parallels to the tangents.
    const Z l = centre(CenterLabel::L);
    const Z m = centre(CenterLabel::M);
    const Z n = centre(CenterLabel::N);
    const Z t = intersect(l, (z - l) * i, m, (z - m) * i);
    res.collinear(n, n + (z - n) * i, t);
    res.points(t, 2.0 * pent_centre - z);
    close("lemma1");
  }

  {
    const Z u = centre(CenterLabel::U);
    const Z l = centre(CenterLabel::L);
    const Z s1 = circumcenter(j, u, l);
    const Z pa = other_meet(l, u, j);
    const Z pb = other_meet(s1, l, j);
    const Z pd = other_meet(u, s1, j);
    res.collinear(u, pa, pb);
    res.collinear(l, pa, pd);
    res.points(pa, pt(A));
    res.points(pb, w);
    res.points(pd, z);
    close("lemma2");
  }

  return out;
}

}  // namespace wdc
