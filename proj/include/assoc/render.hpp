#pragma once

// SVG drawing of one triangulation or of a superimposed pair.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "assoc/core.hpp"

namespace assoc {

struct render_style {
  std::string source_color = "blue";  // solid
  std::string target_color = "red";   // dotted
  std::string common_color = "black"; // dashed
  bool labels = true;
  double radius = 200.0;
};

namespace detail {

inline std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace detail

// Vertex position on the circle.  The root interval sits at the top, with
// the root vertex on its left and labels increasing counterclockwise.
inline std::pair<double, double> vertex_position(int v, int n, const render_style& style) {
  const int m = n + 2;
  const double step = 2.0 * std::numbers::pi / m;
  const int slot = v == n + 1 ? 0 : v + 1;
  const double angle = std::numbers::pi / 2 + step / 2 + slot * step;
  const double margin = 30.0;
  const double c = style.radius + margin;
  return {c + style.radius * std::cos(angle), c - style.radius * std::sin(angle)};
}

inline std::string render_svg(const triangulation& s, const std::optional<triangulation>& t = std::nullopt,
                              const render_style& style = {}) {
  if (t) require_same_size(s, *t);
  const int n = s.size();
  const double extent = 2 * (style.radius + 30.0);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::fixed3(extent) +
         "\" height=\"" + detail::fixed3(extent) + "\" viewBox=\"0 0 " + detail::fixed3(extent) + " " +
         detail::fixed3(extent) + "\">\n";

  out += "  <polygon class=\"boundary\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" points=\"";
  for (int v = 0; v <= n + 1; ++v) {
    auto [x, y] = vertex_position(v, n, style);
    if (v) out += ' ';
    out += detail::fixed3(x) + "," + detail::fixed3(y);
  }
  out += "\"/>\n";

  auto segment = [&](chord c, const char* cls, const std::string& color, const char* dash) {
    auto [x1, y1] = vertex_position(c.a, n, style);
    auto [x2, y2] = vertex_position(c.b, n, style);
    out += "  <line class=\"" + std::string(cls) + "\" data-chord=\"" + to_string(c) + "\" x1=\"" + detail::fixed3(x1) +
           "\" y1=\"" + detail::fixed3(y1) + "\" x2=\"" + detail::fixed3(x2) + "\" y2=\"" + detail::fixed3(y2) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"";
    if (*dash) out += " stroke-dasharray=\"" + std::string(dash) + "\"";
    out += "/>\n";
  };
  constexpr const char* solid = "";
  constexpr const char* dotted = "2,4";
  constexpr const char* dashed = "8,4";

  if (!t) {
    for (const auto& c : s.chords()) segment(c, "source", style.source_color, solid);
  } else {
    for (const auto& c : s.chords())
      if (t->contains(c)) segment(c, "common", style.common_color, dashed);
    for (const auto& c : s.chords())
      if (!t->contains(c)) segment(c, "source", style.source_color, solid);
    for (const auto& c : t->chords())
      if (!s.contains(c)) segment(c, "target", style.target_color, dotted);
  }

  if (style.labels) {
    for (int v = 0; v <= n + 1; ++v) {
      auto [x, y] = vertex_position(v, n, style);
      const double cx = style.radius + 30.0;
      // push labels slightly outside the circle
      const double lx = cx + (x - cx) * 1.08;
      const double ly = cx + (y - cx) * 1.08 + 4.0;
      out += "  <text x=\"" + detail::fixed3(lx) + "\" y=\"" + detail::fixed3(ly) +
             "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
             (v == n + 1 ? std::string("R") : std::to_string(v)) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace assoc
