#pragma once

#include <cmath>

namespace hamnet {

struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) {
  double n = norm(a);
  return {a.x / n, a.y / n, a.z / n};
}

// Angle between two 3D vectors, in (0, pi) for non-degenerate input.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

// 2D rigid motion (rotation + translation), optionally with a reflection.
struct Rigid2 {
  // p -> (c*x - s*y, s*x + c*y) + t   (or with y negated first when mirrored)
  double c = 1.0, s = 0.0;
  Vec2 t{};
  bool mirror = false;

  Vec2 operator()(const Vec2& p) const {
    double px = p.x, py = mirror ? -p.y : p.y;
    return {c * px - s * py + t.x, s * px + c * py + t.y};
  }
};

// The orientation-preserving rigid motion taking segment (a0,a1) onto (b0,b1).
// Segment lengths must agree; only the direction is used for the rotation.
inline Rigid2 align_segment(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
  Vec2 u = a1 - a0;
  Vec2 v = b1 - b0;
  double nu = norm(u), nv = norm(v);
  double c = (u.x * v.x + u.y * v.y) / (nu * nv);
  double s = (u.x * v.y - u.y * v.x) / (nu * nv);
  Rigid2 r;
  r.c = c;
  r.s = s;
  r.t = {b0.x - (c * a0.x - s * a0.y), b0.y - (s * a0.x + c * a0.y)};
  return r;
}

}  // namespace hamnet
