#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hamnet/vec.hpp"

namespace hamnet {

inline double polygon_area_signed(const std::vector<Vec2>& pts) {
  double a = 0.0;
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) a += cross(pts[i], pts[(i + 1) % n]);
  return a / 2.0;
}

inline double polygon_diagonal(const std::vector<Vec2>& pts) {
  if (pts.empty()) return 0.0;
  Vec2 lo = pts[0], hi = pts[0];
  for (const auto& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  return norm(hi - lo);
}

// Interior turning angle at vertex i for a CCW polygon, in (0, 2*pi).
inline double interior_angle(const std::vector<Vec2>& pts, size_t i) {
  size_t n = pts.size();
  Vec2 into = pts[i] - pts[(i + n - 1) % n];
  Vec2 out = pts[(i + 1) % n] - pts[i];
  double turn = std::atan2(cross(into, out), dot(into, out));  // (-pi, pi]
  return std::numbers::pi - turn;
}

// Drops straight (angle within tol of pi) vertices.
inline std::vector<Vec2> merge_collinear(const std::vector<Vec2>& pts, double tol_angle = 1e-7) {
  std::vector<Vec2> out;
  size_t n = pts.size();
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(interior_angle(pts, i) - std::numbers::pi) > tol_angle) {
      out.push_back(pts[i]);
    }
  }
  return out.size() >= 3 ? out : pts;
}

// Max residual after the optimal proper rigid motion mapping a[i] -> b[i].
inline double rigid_align_residual(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  size_t n = a.size();
  Vec2 ca{}, cb{};
  for (size_t i = 0; i < n; ++i) {
    ca = ca + a[i];
    cb = cb + b[i];
  }
  ca = ca * (1.0 / n);
  cb = cb * (1.0 / n);
  double sc = 0.0, ss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    Vec2 u = a[i] - ca, v = b[i] - cb;
    sc += dot(u, v);
    ss += cross(u, v);
  }
  double th = std::atan2(ss, sc);
  double c = std::cos(th), s = std::sin(th);
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    Vec2 u = a[i] - ca;
    Vec2 r{c * u.x - s * u.y, s * u.x + c * u.y};
    worst = std::max(worst, norm((r + cb) - b[i]));
  }
  return worst;
}

namespace detail {

inline std::vector<Vec2> as_ccw(std::vector<Vec2> pts) {
  if (polygon_area_signed(pts) < 0.0) std::reverse(pts.begin(), pts.end());
  return pts;
}

}  // namespace detail

// Congruence up to rotation, translation and reflection: straight vertices
// are merged, boundary (edge length, interior angle) sequences are compared
// over all cyclic offsets, and a match is confirmed by rigid alignment.
inline bool congruent(const std::vector<Vec2>& poly1, const std::vector<Vec2>& poly2,
                      double tol = 1e-7) {
  double scale = std::max({polygon_diagonal(poly1), polygon_diagonal(poly2), 1e-300});
  double tol_len = tol * scale;
  double tol_ang = 1e-6;

  std::vector<Vec2> p = detail::as_ccw(merge_collinear(poly1, tol_ang));
  std::vector<Vec2> q0 = detail::as_ccw(merge_collinear(poly2, tol_ang));
  if (p.size() != q0.size()) return false;
  size_t n = p.size();

  auto seq = [&](const std::vector<Vec2>& pts) {
    std::vector<std::pair<double, double>> s(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      s[i] = {norm(pts[(i + 1) % pts.size()] - pts[i]), interior_angle(pts, i)};
    }
    return s;
  };
  auto sp = seq(p);

  for (int reflected = 0; reflected < 2; ++reflected) {
    std::vector<Vec2> q = q0;
    if (reflected) {
      for (auto& v : q) v.y = -v.y;
      q = detail::as_ccw(std::move(q));
    }
    auto sq = seq(q);
    for (size_t off = 0; off < n; ++off) {
      bool match = true;
      for (size_t i = 0; i < n && match; ++i) {
        const auto& [la, aa] = sp[i];
        const auto& [lb, ab] = sq[(i + off) % n];
        if (std::abs(la - lb) > tol_len || std::abs(aa - ab) > tol_ang) match = false;
      }
      if (!match) continue;
      std::vector<Vec2> qm(n);
      for (size_t i = 0; i < n; ++i) qm[i] = q[(i + off) % n];
      if (rigid_align_residual(p, qm) <= tol_len * 10.0) return true;
    }
  }
  return false;
}

}  // namespace hamnet
