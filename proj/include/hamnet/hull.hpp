#pragma once

#include <array>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "hamnet/polyhedron.hpp"

namespace hamnet {

struct HullError : std::runtime_error {
  explicit HullError(const std::string& what) : std::runtime_error(what) {}
};

namespace hdetail {

inline double orient(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& p) {
  return dot(cross(b - a, c - a), p - a);
}

}  // namespace hdetail

// Incremental 3D convex hull of points in general position. Returns outward-
// CCW triangles; every input point must end up a hull vertex (callers pass
// points on the sphere), otherwise interior points are simply absorbed.
inline Polyhedron convex_hull(const std::vector<Vec3>& points, double eps = 1e-12) {
  size_t n = points.size();
  if (n < 4) throw HullError("hull needs at least 4 points");

  // Initial tetrahedron from the first four non-degenerate points.
  size_t i3 = 3;
  while (i3 < n && std::abs(hdetail::orient(points[0], points[1], points[2], points[i3])) <= eps) {
    ++i3;
  }
  if (i3 >= n) throw HullError("all points coplanar");

  std::vector<std::array<int, 3>> tris;
  {
    int a = 0, b = 1, c = 2, d = static_cast<int>(i3);
    if (hdetail::orient(points[a], points[b], points[c], points[d]) > 0.0) std::swap(b, c);
    tris = {{a, b, c}, {a, c, d}, {a, d, b}, {b, d, c}};
  }

  for (size_t p = 3; p < n; ++p) {
    if (p == i3) continue;
    std::vector<bool> visible(tris.size(), false);
    bool any = false;
    for (size_t t = 0; t < tris.size(); ++t) {
      const auto& tr = tris[t];
      if (hdetail::orient(points[tr[0]], points[tr[1]], points[tr[2]], points[p]) > eps) {
        visible[t] = true;
        any = true;
      }
    }
    if (!any) continue;  // interior point

    // Horizon: directed edges of visible triangles whose twin is hidden.
    std::map<std::pair<int, int>, bool> dir_visible;
    for (size_t t = 0; t < tris.size(); ++t) {
      const auto& tr = tris[t];
      for (int k = 0; k < 3; ++k) {
        dir_visible[{tr[k], tr[(k + 1) % 3]}] = visible[t];
      }
    }
    std::vector<std::array<int, 3>> next;
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!visible[t]) next.push_back(tris[t]);
    }
    for (size_t t = 0; t < tris.size(); ++t) {
      if (!visible[t]) continue;
      const auto& tr = tris[t];
      for (int k = 0; k < 3; ++k) {
        int a = tr[k], b = tr[(k + 1) % 3];
        if (!dir_visible.at({b, a})) {
          next.push_back({a, b, static_cast<int>(p)});
        }
      }
    }
    tris = std::move(next);
  }

  Polyhedron P;
  P.vertices = points;
  for (const auto& tr : tris) P.faces.push_back({tr[0], tr[1], tr[2]});
  P.build();
  return P;
}

// Convex hull of n pseudo-random points on the unit sphere (mt19937_64 seeded
// directly with `seed`, Gaussian direction sampling). Deterministic per seed.
inline Polyhedron corpus_gen(int n_points, std::uint64_t seed) {
  if (n_points < 4) throw HullError("need at least 4 points");
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * attempt);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vec3> pts;
    for (int i = 0; i < n_points; ++i) {
      Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
      double len = norm(v);
      if (len < 1e-6) { --i; continue; }
      pts.push_back(v * (1.0 / len));
    }
    try {
      Polyhedron P = convex_hull(pts);
      if (P.vertex_count() == n_points) return P;
    } catch (const std::exception&) {
      // degenerate draw, retry with a perturbed stream
    }
  }
  throw HullError("could not generate a non-degenerate hull");
}

}  // namespace hamnet
