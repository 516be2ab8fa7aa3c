#include "starconf/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "starconf/certificates.hpp"

namespace starconf {

namespace {

using Vec3 = std::array<double, 3>;

constexpr double kSize = 800.0;

struct Viewport {
  double xmin, xmax, ymin, ymax;

  double sx(double x) const { return (x - xmin) / (xmax - xmin) * kSize; }
  double sy(double y) const { return kSize - (y - ymin) / (ymax - ymin) * kSize; }
  bool inside(double x, double y, double slack = 0) const {
    const double w = (xmax - xmin) * slack, h = (ymax - ymin) * slack;
    return x >= xmin - w && x <= xmax + w && y >= ymin - h && y <= ymax + h;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

Vec3 to_vec(const ProjVector<PointTag>& p) {
  return {p[0].get_d(), p[1].get_d(), p[2].get_d()};
}

std::optional<std::pair<double, double>> affine(const Vec3& p) {
  if (std::abs(p[2]) < 1e-12 * (std::abs(p[0]) + std::abs(p[1]) + 1)) return std::nullopt;
  return std::make_pair(p[0] / p[2], p[1] / p[2]);
}

// Clip the line a x + b y + c = 0 to the viewport rectangle.
std::optional<std::array<double, 4>> clip_line(const Vec3& l, const Viewport& vp) {
  std::vector<std::pair<double, double>> hits;
  const double a = l[0], b = l[1], c = l[2];
  if (b != 0) {
    for (double x : {vp.xmin, vp.xmax}) {
      const double y = -(a * x + c) / b;
      if (y >= vp.ymin && y <= vp.ymax) hits.emplace_back(x, y);
    }
  }
  if (a != 0) {
    for (double y : {vp.ymin, vp.ymax}) {
      const double x = -(b * y + c) / a;
      if (x >= vp.xmin && x <= vp.xmax) hits.emplace_back(x, y);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  std::sort(hits.begin(), hits.end());
  return std::array<double, 4>{hits.front().first, hits.front().second, hits.back().first, hits.back().second};
}

double quad(const std::array<std::array<double, 3>, 3>& m, const Vec3& u, const Vec3& v) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += u[i] * m[i][j] * v[j];
  return s;
}

// A real point of the conic: an exact point from the configuration if one
// lies on it, otherwise a numerical root along vertical lines.
std::optional<Vec3> conic_base_point(const HomForm& conic, const PointSet& pts,
                                     const std::array<std::array<double, 3>, 3>& m, const Viewport& vp) {
  for (const auto& p : pts)
    if (conic.eval(p.coords()) == 0) return to_vec(p);
  for (int k = 0; k <= 200; ++k) {
    const double x = vp.xmin + (vp.xmax - vp.xmin) * k / 200.0;
    // Q(x, y, 1) as a quadratic in y.
    const double qa = m[1][1], qb = 2 * (m[0][1] * x + m[1][2]);
    const double qc = m[0][0] * x * x + 2 * m[0][2] * x + m[2][2];
    if (std::abs(qa) < 1e-15) {
      if (std::abs(qb) > 1e-15) return Vec3{x, -qc / qb, 1};
      continue;
    }
    const double disc = qb * qb - 4 * qa * qc;
    if (disc >= 0) return Vec3{x, (-qb + std::sqrt(disc)) / (2 * qa), 1};
  }
  return std::nullopt;
}

// Second intersections of the conic with the pencil of lines through p.
std::vector<std::vector<std::pair<double, double>>> conic_polylines(const HomForm& conic, const PointSet& pts,
                                                                    const Viewport& vp) {
  const RatMatrix rm = conic_matrix(conic);
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = rm(i, j).get_d();
  std::vector<std::vector<std::pair<double, double>>> out;
  const auto base = conic_base_point(conic, pts, m, vp);
  if (!base) return out;
  const Vec3 p = *base;
  const int samples = 720;
  std::vector<std::pair<double, double>> current;
  for (int k = 0; k <= samples; ++k) {
    const double theta = std::numbers::pi * k / samples;
    // A point q off p in direction theta, then x = Q(q) p - 2 B(p, q) q.
    const Vec3 q = {p[0] + std::cos(theta) * p[2], p[1] + std::sin(theta) * p[2], p[2]};
    const double qq = quad(m, q, q), pq = quad(m, p, q);
    const Vec3 x = {qq * p[0] - 2 * pq * q[0], qq * p[1] - 2 * pq * q[1], qq * p[2] - 2 * pq * q[2]};
    const auto a = affine(x);
    if (a && vp.inside(a->first, a->second, 0.5)) {
      current.push_back(*a);
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace

std::string render_svg(const Json& config) {
  const std::size_t n = config.contains("n") ? config.at("n").get<std::size_t>() : 2;
  if (n != 2) throw Error("SVG export supports plane configurations only (n = 2)");
  const PointSet pts = config.contains("points") ? point_set_from_json(config) : PointSet(2);
  const auto lines = hyperplanes_from_json(config);
  std::vector<HomForm> conics;
  if (config.contains("conics"))
    for (const auto& c : config.at("conics")) conics.push_back(form_from_json(c));

  Viewport vp{-10, 10, -10, 10};
  std::vector<std::pair<double, double>> finite;
  for (const auto& p : pts)
    if (auto a = affine(to_vec(p))) finite.push_back(*a);
  if (!finite.empty()) {
    double x0 = finite[0].first, x1 = x0, y0 = finite[0].second, y1 = y0;
    for (const auto& [x, y] : finite) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    const double span = std::max({x1 - x0, y1 - y0, 1.0});
    const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2, half = span * 0.5 * 1.15;
    vp = Viewport{cx - half, cx + half, cy - half, cy + half};
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<g id=\"conics\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\">\n";
  for (const auto& c : conics) {
    for (const auto& poly : conic_polylines(c, pts, vp)) {
      svg << "<polyline points=\"";
      for (std::size_t i = 0; i < poly.size(); ++i)
        svg << (i ? " " : "") << num(vp.sx(poly[i].first)) << ',' << num(vp.sy(poly[i].second));
      svg << "\"/>\n";
    }
  }
  svg << "</g>\n<g id=\"lines\" stroke=\"#555555\" stroke-width=\"1\">\n";
  for (const auto& l : lines) {
    if (auto seg = clip_line(to_vec(ProjPoint(std::span<const Integer>(l.coords()))), vp)) {
      const auto& s = *seg;
      svg << "<line x1=\"" << num(vp.sx(s[0])) << "\" y1=\"" << num(vp.sy(s[1])) << "\" x2=\"" << num(vp.sx(s[2]))
          << "\" y2=\"" << num(vp.sy(s[3])) << "\"/>\n";
    }
  }
  svg << "</g>\n<g id=\"points\" fill=\"black\">\n";
  for (const auto& [x, y] : finite)
    svg << "<circle cx=\"" << num(vp.sx(x)) << "\" cy=\"" << num(vp.sy(y)) << "\" r=\"4\"/>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace starconf
