#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "hamnet/polyhedron.hpp"
#include "hamnet/unfold.hpp"

namespace hamnet {

struct SvgOptions {
  double viewport = 800.0;   // square viewport edge, px
  double margin = 40.0;
  bool vertex_labels = true;
};

namespace svgdetail {

inline std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace svgdetail

// Deterministic SVG: one path per face, the join edge stroked distinctly,
// boundary (cut) edges heavier than interior folds, 1-based vertex labels on
// the outer boundary. The uniform scale and translation are recorded in a
// comment so the drawing maps back to net coordinates.
inline std::string emit_svg(const Polyhedron& P, const Net& net,
                            const SvgOptions& opt = {}) {
  Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};
  for (const auto& [f, pts] : net.face_points) {
    for (const auto& p : pts) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
  }
  double span = std::max(hi.x - lo.x, hi.y - lo.y);
  double scale = (opt.viewport - 2.0 * opt.margin) / span;
  // y is flipped for screen coordinates.
  auto tx = [&](const Vec2& p) {
    return Vec2{opt.margin + (p.x - lo.x) * scale,
                opt.viewport - opt.margin - (p.y - lo.y) * scale};
  };

  std::ostringstream out;
  using svgdetail::fmt;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(opt.viewport)
      << "\" height=\"" << fmt(opt.viewport) << "\" viewBox=\"0 0 "
      << fmt(opt.viewport) << ' ' << fmt(opt.viewport) << "\">\n";
  out << "<!-- scale=" << fmt(scale) << " origin=(" << fmt(lo.x) << ','
      << fmt(lo.y) << ") -->\n";

  for (const auto& [f, pts] : net.face_points) {
    out << "<path d=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      Vec2 q = tx(pts[i]);
      out << (i == 0 ? 'M' : 'L') << fmt(q.x) << ' ' << fmt(q.y) << ' ';
    }
    out << "Z\" fill=\"#e8eef7\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  }

  // Outer boundary (the cut edges) drawn heavier.
  out << "<path d=\"";
  for (size_t i = 0; i < net.boundary.size(); ++i) {
    Vec2 q = tx(net.boundary[i]);
    out << (i == 0 ? 'M' : 'L') << fmt(q.x) << ' ' << fmt(q.y) << ' ';
  }
  out << "Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

  // Join edge, from one of its incident faces.
  {
    const auto& fs = P.edge_faces.at(net.join_edge);
    int f = net.face_points.count(fs[0]) ? fs[0] : fs[1];
    const auto& fc = P.faces[f];
    auto idx = [&](int v) {
      return std::find(fc.begin(), fc.end(), v) - fc.begin();
    };
    Vec2 a = tx(net.face_points.at(f)[idx(net.join_edge[0])]);
    Vec2 b = tx(net.face_points.at(f)[idx(net.join_edge[1])]);
    out << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\""
        << fmt(b.x) << "\" y2=\"" << fmt(b.y)
        << "\" stroke=\"#c02020\" stroke-width=\"3\"/>\n";
  }

  if (opt.vertex_labels) {
    for (size_t i = 0; i < net.boundary.size(); ++i) {
      Vec2 q = tx(net.boundary[i]);
      out << "<text x=\"" << fmt(q.x + 4.0) << "\" y=\"" << fmt(q.y - 4.0)
          << "\" font-size=\"14\" font-family=\"sans-serif\">"
          << (net.boundary_verts[i] + 1) << "</text>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace hamnet
