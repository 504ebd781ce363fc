#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamnet/polygon2d.hpp"
#include "hamnet/unfold.hpp"

namespace hamnet {

// Geometric tolerance for intersection and side tests, x layout diagonal.
inline constexpr double kTolGeomRel = 1e-7;

struct VerifyError : std::runtime_error {
  explicit VerifyError(const std::string& what) : std::runtime_error(what) {}
};

struct SimpleViolation {
  int seg_a, seg_b;
  Vec2 point;
};

struct SimplePolygonReport {
  bool is_simple = true;
  std::vector<SimpleViolation> violations;
  double area = 0.0;
};

struct OverlapViolation {
  int face_a, face_b;
  double area;
};

struct OverlapReport {
  std::vector<OverlapViolation> violations;
  double total_area = 0.0;

  bool empty() const { return violations.empty(); }
};

namespace vdetail {

inline double point_seg_dist(const Vec2& p, const Vec2& a, const Vec2& b) {
  Vec2 d = b - a;
  double len2 = dot(d, d);
  double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
  return norm(p - (a + d * t));
}

inline double seg_seg_dist(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  return std::min(std::min(point_seg_dist(c, a, b), point_seg_dist(d, a, b)),
                  std::min(point_seg_dist(a, c, d), point_seg_dist(b, c, d)));
}

// Contact between two segments that are non-adjacent along the boundary:
// a proper interior crossing, or any approach closer than tol.
inline bool segments_conflict(const Vec2& a, const Vec2& b, const Vec2& c,
                              const Vec2& d, double tol, Vec2* where) {
  double d1 = cross(b - a, c - a);
  double d2 = cross(b - a, d - a);
  double d3 = cross(d - c, a - c);
  double d4 = cross(d - c, b - c);
  if (d1 * d2 < 0.0 && d3 * d4 < 0.0) {
    double t = d1 / (d1 - d2);
    *where = c + (d - c) * t;
    return true;
  }
  if (seg_seg_dist(a, b, c, d) < tol) {
    *where = point_seg_dist(c, a, b) < point_seg_dist(d, a, b) ? c : d;
    return true;
  }
  return false;
}

// Sutherland-Hodgman clip of CCW polygon `subject` by the CCW polygon `clip`.
inline std::vector<Vec2> clip_convex(std::vector<Vec2> subject, const std::vector<Vec2>& clip) {
  for (size_t i = 0; i < clip.size() && !subject.empty(); ++i) {
    const Vec2& ca = clip[i];
    const Vec2& cb = clip[(i + 1) % clip.size()];
    std::vector<Vec2> out;
    for (size_t j = 0; j < subject.size(); ++j) {
      const Vec2& p = subject[j];
      const Vec2& q = subject[(j + 1) % subject.size()];
      double sp = cross(cb - ca, p - ca);
      double sq = cross(cb - ca, q - ca);
      if (sp >= 0.0) out.push_back(p);
      if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
        double t = sp / (sp - sq);
        out.push_back(p + (q - p) * t);
      }
    }
    subject = std::move(out);
  }
  return subject;
}

}  // namespace vdetail

// Brute-force O(n^2) simplicity test. Straight (angle pi) vertices are fine;
// non-adjacent edges must stay tol apart, and adjacent edges must not fold
// back onto each other.
inline SimplePolygonReport check_simple(const std::vector<Vec2>& polygon,
                                        double tol = -1.0) {
  size_t n = polygon.size();
  if (n < 3) throw VerifyError("polygon needs at least 3 vertices");
  if (tol < 0.0) tol = kTolGeomRel * polygon_diagonal(polygon);
  for (size_t i = 0; i < n; ++i) {
    if (norm(polygon[(i + 1) % n] - polygon[i]) <= tol) {
      throw VerifyError("repeated consecutive points at index " + std::to_string(i));
    }
  }

  SimplePolygonReport rep;
  rep.area = polygon_area_signed(polygon);
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = polygon[i];
    const Vec2& b = polygon[(i + 1) % n];
    for (size_t j = i + 1; j < n; ++j) {
      const Vec2& c = polygon[j];
      const Vec2& d = polygon[(j + 1) % n];
      if (j == i + 1 || (i == 0 && j == n - 1)) {
        // Adjacent pair: flag only a fold-back (zero interior angle).
        const Vec2& shared = (j == i + 1) ? b : a;
        const Vec2& e1 = (j == i + 1) ? a : c;   // other end of first segment
        const Vec2& e2 = (j == i + 1) ? d : b;   // other end of second segment
        Vec2 u = e1 - shared, v = e2 - shared;
        double h = std::abs(cross(u, v)) / std::max(norm(u), norm(v));
        if (h < tol && dot(u, v) > 0.0) {
          rep.violations.push_back({static_cast<int>(i), static_cast<int>(j), shared});
        }
        continue;
      }
      Vec2 where;
      if (vdetail::segments_conflict(a, b, c, d, tol, &where)) {
        rep.violations.push_back({static_cast<int>(i), static_cast<int>(j), where});
      }
    }
  }
  rep.is_simple = rep.violations.empty();
  return rep;
}

// All cross products of consecutive edge pairs share one sign or vanish.
inline bool check_convex(const std::vector<Vec2>& polygon, double tol = -1.0) {
  size_t n = polygon.size();
  if (n < 3) throw VerifyError("polygon needs at least 3 vertices");
  if (tol < 0.0) tol = kTolGeomRel * polygon_diagonal(polygon);
  int sign = 0;
  for (size_t i = 0; i < n; ++i) {
    Vec2 u = polygon[(i + 1) % n] - polygon[i];
    Vec2 v = polygon[(i + 2) % n] - polygon[(i + 1) % n];
    double c = cross(u, v) / std::max(norm(u), norm(v));
    if (std::abs(c) <= tol) continue;
    int s = c > 0.0 ? 1 : -1;
    if (sign == 0) sign = s;
    else if (s != sign) return false;
  }
  return true;
}

// Pairwise face-interior intersection over fan triangulations. Contact along
// shared edges has (near) zero area and stays below the tol^2 threshold.
inline OverlapReport check_no_overlap(const Net& net, double tol = -1.0) {
  if (net.face_points.empty()) throw VerifyError("net has no face placements");
  if (tol < 0.0) {
    std::vector<Vec2> all;
    for (const auto& [f, pts] : net.face_points)
      all.insert(all.end(), pts.begin(), pts.end());
    tol = kTolGeomRel * polygon_diagonal(all);
  }

  struct Tri {
    int face;
    std::vector<Vec2> pts;
  };
  std::vector<Tri> tris;
  for (const auto& [f, pts] : net.face_points) {
    double a = polygon_area_signed(pts);
    if (std::abs(a) <= tol * tol) {
      throw VerifyError("degenerate placement of face " + std::to_string(f));
    }
    // Clipping assumes CCW triangles; accept faces of either orientation.
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
      if (a > 0.0) tris.push_back({f, {pts[0], pts[i], pts[i + 1]}});
      else tris.push_back({f, {pts[0], pts[i + 1], pts[i]}});
    }
  }

  OverlapReport rep;
  std::map<std::pair<int, int>, double> per_pair;
  for (size_t i = 0; i < tris.size(); ++i) {
    for (size_t j = i + 1; j < tris.size(); ++j) {
      if (tris[i].face == tris[j].face) continue;
      auto inter = vdetail::clip_convex(tris[i].pts, tris[j].pts);
      if (inter.size() < 3) continue;
      double a = std::abs(polygon_area_signed(inter));
      if (a > tol * tol) {
        per_pair[{tris[i].face, tris[j].face}] += a;
      }
    }
  }
  for (const auto& [pair, area] : per_pair) {
    rep.violations.push_back({pair.first, pair.second, area});
    rep.total_area += area;
  }
  return rep;
}

// Claim-(2) check: the two halves lie in opposite closed half-planes of the
// line through the join edge.
inline bool check_half_planes(const Polyhedron& P, const Net& net, double tol = -1.0) {
  if (net.faces_a.empty() || net.faces_b.empty()) {
    throw VerifyError("net is missing half provenance");
  }
  auto [u, v] = net.join_edge;
  // The join edge's placed endpoints, taken from an incident A face.
  const auto& fs = P.edge_faces.at(net.join_edge);
  int fa = std::find(net.faces_a.begin(), net.faces_a.end(), fs[0]) != net.faces_a.end()
               ? fs[0] : fs[1];
  const auto& fc = P.faces[fa];
  auto idx = [&](int w) {
    return std::find(fc.begin(), fc.end(), w) - fc.begin();
  };
  Vec2 pu = net.face_points.at(fa)[idx(u)];
  Vec2 pv = net.face_points.at(fa)[idx(v)];
  Vec2 dir = pv - pu;
  double len = norm(dir);
  if (len <= 0.0) throw VerifyError("degenerate join edge");

  if (tol < 0.0) {
    std::vector<Vec2> all;
    for (const auto& [f, pts] : net.face_points)
      all.insert(all.end(), pts.begin(), pts.end());
    tol = kTolGeomRel * polygon_diagonal(all);
  }

  auto side_range = [&](const std::vector<int>& faces) {
    double lo = 0.0, hi = 0.0;
    for (int f : faces) {
      for (const auto& p : net.face_points.at(f)) {
        double s = cross(dir, p - pu) / len;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
    }
    return std::pair{lo, hi};
  };
  auto [alo, ahi] = side_range(net.faces_a);
  auto [blo, bhi] = side_range(net.faces_b);
  return (ahi <= tol && blo >= -tol) || (alo >= -tol && bhi <= tol);
}

// Max deviation of the planar placement from the intrinsic face geometry:
// relative for edge lengths, absolute (radians) for corner angles.
inline double check_isometry(const Polyhedron& P, const HalfSurface& H,
                             const PlanarLayout& L) {
  double worst = 0.0;
  for (int f : H.faces) {
    auto it = L.face_points.find(f);
    if (it == L.face_points.end()) throw VerifyError("face missing from layout");
    const auto& pts = it->second;
    const auto& fc = P.faces[f];
    if (pts.size() != fc.size()) throw VerifyError("face/vertex mismatch");
    size_t k = fc.size();
    for (size_t i = 0; i < k; ++i) {
      double l3 = norm(P.vertices[fc[(i + 1) % k]] - P.vertices[fc[i]]);
      double l2 = norm(pts[(i + 1) % k] - pts[i]);
      worst = std::max(worst, std::abs(l2 - l3) / l3);
      Vec3 u3 = P.vertices[fc[(i + k - 1) % k]] - P.vertices[fc[i]];
      Vec3 v3 = P.vertices[fc[(i + 1) % k]] - P.vertices[fc[i]];
      Vec2 u2 = pts[(i + k - 1) % k] - pts[i];
      Vec2 v2 = pts[(i + 1) % k] - pts[i];
      double a3 = angle_between(u3, v3);
      double a2 = std::abs(std::atan2(cross(u2, v2), dot(u2, v2)));
      worst = std::max(worst, std::abs(a2 - a3));
    }
  }
  return worst;
}

}  // namespace hamnet
