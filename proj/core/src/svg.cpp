#include "k3walls/svg.hpp"

#include "k3walls/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace k3walls {

namespace {

std::string fmt(double x) {
  char buf[64];
  if (x == 0.0) x = 0.0;  // normalize -0
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

struct Extent {
  double min_u = -1, max_u = 1, max_t = 1;
  void include_u(double u) {
    min_u = std::min(min_u, u);
    max_u = std::max(max_u, u);
  }
  void include_t(double t) { max_t = std::max(max_t, t); }
};

}  // namespace

std::string render_walls_svg(const std::vector<WallGeometry>& walls,
                             const std::vector<Rational>& rays) {
  Extent ext;
  for (const auto& w : walls) {
    if (w.kind == WallGeometry::Kind::semicircle) {
      const double c = w.center_u.to_double();
      const double r = std::sqrt(w.radius_sq.to_double());
      ext.include_u(c - r);
      ext.include_u(c + r);
      ext.include_t(r);
    } else if (w.kind == WallGeometry::Kind::vertical) {
      ext.include_u(w.u0.to_double());
    }
  }
  for (const auto& r : rays) ext.include_u(static_cast<double>(r));

  const double pad = 0.5;
  const double scale = 120.0;
  const double x0 = ext.min_u - pad, x1 = ext.max_u + pad;
  const double height = (ext.max_t + pad) * scale;
  const double width = (x1 - x0) * scale;
  auto X = [&](double u) { return (u - x0) * scale; };
  auto Y = [&](double t) { return height - t * scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(width) + " " +
         fmt(height) + "\">\n";
  svg += "  <line x1=\"0\" y1=\"" + fmt(Y(0)) + "\" x2=\"" + fmt(width) + "\" y2=\"" + fmt(Y(0)) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";  // u-axis
  svg += "  <line x1=\"" + fmt(X(0)) + "\" y1=\"0\" x2=\"" + fmt(X(0)) + "\" y2=\"" + fmt(Y(0)) +
         "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";  // t-axis
  for (const auto& w : walls) {
    if (w.kind == WallGeometry::Kind::semicircle) {
      const double c = w.center_u.to_double();
      const double r = std::sqrt(w.radius_sq.to_double());
      svg += "  <path d=\"M " + fmt(X(c - r)) + " " + fmt(Y(0)) + " A " + fmt(r * scale) + " " +
             fmt(r * scale) + " 0 0 1 " + fmt(X(c + r)) + " " + fmt(Y(0)) +
             "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    } else if (w.kind == WallGeometry::Kind::vertical) {
      const double u = w.u0.to_double();
      svg += "  <line x1=\"" + fmt(X(u)) + "\" y1=\"0\" x2=\"" + fmt(X(u)) + "\" y2=\"" +
             fmt(Y(0)) + "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const auto& r : rays) {
    const double u = static_cast<double>(r);
    svg += "  <line x1=\"" + fmt(X(u)) + "\" y1=\"0\" x2=\"" + fmt(X(u)) + "\" y2=\"" + fmt(Y(0)) +
           "\" stroke=\"crimson\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_hyperbola_svg(std::int64_t n, std::int64_t bound) {
  const auto points = spherical_orbit_points(n, bound);
  const double view = 12.0;  // plot window in lattice units
  const double scale = 30.0;
  const double width = 2 * view * scale, height = 2 * view * scale;
  auto X = [&](double x) { return (x + view) * scale; };
  auto Y = [&](double y) { return height - (y + view) * scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(width) + " " +
         fmt(height) + "\">\n";
  // half-plane 2x + y <= -3, shaded
  {
    // boundary through (x, -3-2x); clip to window corners on the left
    const double xa = -view, ya = -3 + 2 * view;
    const double xb = view, yb = -3 - 2 * view;
    svg += "  <polygon points=\"" + fmt(X(xa)) + "," + fmt(Y(ya)) + " " + fmt(X(xb)) + "," +
           fmt(Y(yb)) + " " + fmt(X(-view)) + "," + fmt(Y(-view * 3)) +
           "\" fill=\"#fde8e8\" stroke=\"none\"/>\n";
    svg += "  <line x1=\"" + fmt(X(xa)) + "\" y1=\"" + fmt(Y(ya)) + "\" x2=\"" + fmt(X(xb)) +
           "\" y2=\"" + fmt(Y(yb)) + "\" stroke=\"indianred\" stroke-width=\"1\"/>\n";
  }
  // axes
  svg += "  <line x1=\"0\" y1=\"" + fmt(Y(0)) + "\" x2=\"" + fmt(width) + "\" y2=\"" + fmt(Y(0)) +
         "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  svg += "  <line x1=\"" + fmt(X(0)) + "\" y1=\"0\" x2=\"" + fmt(X(0)) + "\" y2=\"" + fmt(height) +
         "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  // pairing-zero line y = -x/(2n-1)
  {
    const double slope = -1.0 / static_cast<double>(2 * n - 1);
    svg += "  <line x1=\"" + fmt(X(-view)) + "\" y1=\"" + fmt(Y(-view * slope)) + "\" x2=\"" +
           fmt(X(view)) + "\" y2=\"" + fmt(Y(view * slope)) +
           "\" stroke=\"seagreen\" stroke-width=\"1\"/>\n";
  }
  // spherical classes: effective filled, others hollow
  for (const auto& p : points) {
    if (std::abs(p.x) > view || std::abs(p.y) > view) continue;
    svg += "  <circle cx=\"" + fmt(X(static_cast<double>(p.x))) + "\" cy=\"" +
           fmt(Y(static_cast<double>(p.y))) + "\" r=\"3\" fill=\"" +
           (p.effective ? "steelblue" : "white") + "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace k3walls
