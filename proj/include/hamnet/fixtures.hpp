#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamnet/polyhedron.hpp"

namespace hamnet {

// Built-in solids. Vertex numberings for the cube, octahedron and pyramid are
// fixed so that the cycle strings 15623784, 123645 and 12534 (1-based) are
// Hamiltonian quasigeodesics as written; see README for the labelings.

namespace detail {

// Orient every face outward (valid for convex solids with interior origin
// side known from the solid centroid), then build.
inline Polyhedron finish(std::vector<Vec3> verts, std::vector<std::vector<int>> faces) {
  Polyhedron P;
  P.vertices = std::move(verts);
  P.faces = std::move(faces);
  Vec3 c{};
  for (const auto& v : P.vertices) c = c + v;
  c = c * (1.0 / static_cast<double>(P.vertices.size()));
  for (auto& fc : P.faces) {
    Vec3 n = {0, 0, 0};
    Vec3 fcent{};
    for (int v : fc) fcent = fcent + P.vertices[v];
    fcent = fcent * (1.0 / static_cast<double>(fc.size()));
    for (size_t i = 0; i < fc.size(); ++i) {
      const Vec3& a = P.vertices[fc[i]];
      const Vec3& b = P.vertices[fc[(i + 1) % fc.size()]];
      n.x += (a.y - b.y) * (a.z + b.z);
      n.y += (a.z - b.z) * (a.x + b.x);
      n.z += (a.x - b.x) * (a.y + b.y);
    }
    if (dot(n, fcent - c) < 0.0) std::reverse(fc.begin(), fc.end());
  }
  P.build();
  return P;
}

// Faces of a convex solid recovered from its supporting-plane normals: for
// each normal, take the `per_face` vertices with maximal dot product and
// order them CCW around the outward normal.
inline std::vector<std::vector<int>> faces_from_normals(
    const std::vector<Vec3>& verts, const std::vector<Vec3>& normals, int per_face) {
  std::vector<std::vector<int>> faces;
  for (const auto& nraw : normals) {
    Vec3 n = normalized(nraw);
    std::vector<std::pair<double, int>> scored;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      scored.push_back({dot(verts[i], n), i});
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<int> fc;
    for (int k = 0; k < per_face; ++k) fc.push_back(scored[k].second);

    Vec3 c{};
    for (int v : fc) c = c + verts[v];
    c = c * (1.0 / per_face);
    Vec3 x = normalized(verts[fc[0]] - c);
    Vec3 y = cross(n, x);
    std::sort(fc.begin(), fc.end(), [&](int a, int b) {
      Vec3 da = verts[a] - c, db = verts[b] - c;
      return std::atan2(dot(da, y), dot(da, x)) < std::atan2(dot(db, y), dot(db, x));
    });
    faces.push_back(std::move(fc));
  }
  return faces;
}

}  // namespace detail

inline Polyhedron make_tetrahedron() {
  std::vector<Vec3> v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<std::vector<int>> f = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return detail::finish(v, f);
}

// Unit cube; vertices 1-4 on the bottom, 5-8 above them (1-based labels).
inline Polyhedron make_cube() {
  std::vector<Vec3> v = {
      {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
      {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  std::vector<std::vector<int>> f = {
      {0, 1, 2, 3}, {4, 5, 6, 7},
      {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};
  return detail::finish(v, f);
}

// Regular octahedron; antipodal label pairs are (1,6), (2,5), (3,4).
inline Polyhedron make_octahedron() {
  std::vector<Vec3> v = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, -1}, {0, -1, 0}, {-1, 0, 0}};
  std::vector<std::vector<int>> f;
  for (int i : {0, 5}) {
    for (int j : {1, 4}) {
      for (int k : {2, 3}) f.push_back({i, j, k});
    }
  }
  return detail::finish(v, f);
}

inline Polyhedron make_dodecahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double ip = 1.0 / phi;
  std::vector<Vec3> v;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0}) v.push_back({sx, sy, sz});
  for (double a : {-ip, ip})
    for (double b : {-phi, phi}) {
      v.push_back({0, a, b});
      v.push_back({a, b, 0});
      v.push_back({b, 0, a});
    }
  // Face normals point at the vertices of the dual icosahedron; note the
  // cyclic pattern is mirrored relative to the vertex pattern above.
  std::vector<Vec3> normals;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      normals.push_back({a, 0, b});
      normals.push_back({b, a, 0});
      normals.push_back({0, b, a});
    }
  return detail::finish(v, detail::faces_from_normals(v, normals, 5));
}

inline Polyhedron make_icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      v.push_back({0, a, b});
      v.push_back({a, b, 0});
      v.push_back({b, 0, a});
    }
  // Face normals point at the vertices of the dual dodecahedron, with the
  // mirrored cyclic pattern.
  std::vector<Vec3> normals;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0}) normals.push_back({sx, sy, sz});
  const double ip = 1.0 / phi;
  for (double a : {-ip, ip})
    for (double b : {-phi, phi}) {
      normals.push_back({a, 0, b});
      normals.push_back({b, a, 0});
      normals.push_back({0, b, a});
    }
  return detail::finish(v, detail::faces_from_normals(v, normals, 3));
}

inline Polyhedron make_rhombic_dodecahedron() {
  std::vector<Vec3> v;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0})
      for (double sz : {-1.0, 1.0}) v.push_back({sx, sy, sz});
  for (double s : {-2.0, 2.0}) {
    v.push_back({s, 0, 0});
    v.push_back({0, s, 0});
    v.push_back({0, 0, s});
  }
  std::vector<Vec3> normals;
  for (double a : {-1.0, 1.0})
    for (double b : {-1.0, 1.0}) {
      normals.push_back({a, b, 0});
      normals.push_back({a, 0, b});
      normals.push_back({0, a, b});
    }
  return detail::finish(v, detail::faces_from_normals(v, normals, 4));
}

// Unit-edge square pyramid with four equilateral sides: the top half of a
// regular octahedron. Vertices 1-4 are the base square in cyclic order,
// vertex 5 is the apex.
inline Polyhedron make_square_pyramid_octa_half() {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Vec3> v = {
      {-0.5, -0.5, 0}, {0.5, -0.5, 0}, {0.5, 0.5, 0}, {-0.5, 0.5, 0}, {0, 0, h}};
  std::vector<std::vector<int>> f = {
      {0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
  return detail::finish(v, f);
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron",
      "rhombic_dodecahedron", "square_pyramid_octa_half"};
  return names;
}

inline Polyhedron fixture(const std::string& name) {
  if (name == "tetrahedron") return make_tetrahedron();
  if (name == "cube") return make_cube();
  if (name == "octahedron") return make_octahedron();
  if (name == "dodecahedron") return make_dodecahedron();
  if (name == "icosahedron") return make_icosahedron();
  if (name == "rhombic_dodecahedron") return make_rhombic_dodecahedron();
  if (name == "square_pyramid_octa_half") return make_square_pyramid_octa_half();
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace hamnet
