#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamnet/cycles.hpp"
#include "hamnet/polygon2d.hpp"
#include "hamnet/polyhedron.hpp"

namespace hamnet {

inline constexpr double kTolFitRel = 1e-7;  // shared-edge residual, x diagonal

struct UnfoldError : std::runtime_error {
  explicit UnfoldError(const std::string& what) : std::runtime_error(what) {}
};

// One side of the directed cycle Q: faces strictly left (or right) of Q.
struct HalfSurface {
  bool left;                       // left of Q in its stored direction
  std::vector<int> faces;          // sorted
  std::vector<int> boundary;       // Q forward for the left half, reversed for the right
  std::vector<Edge> interior_edges;

  bool contains(int face) const {
    return std::binary_search(faces.begin(), faces.end(), face);
  }
};

struct Pose {
  Vec2 origin{0.0, 0.0};
  double angle = 0.0;
};

// Isometric development of a set of faces into the plane.
struct PlanarLayout {
  std::map<int, std::vector<Vec2>> face_points;  // aligned with the face's vertex list
  std::vector<int> boundary_verts;
  std::vector<Vec2> boundary;

  Vec2 point_of(int face, int vertex, const Polyhedron& P) const {
    const auto& fc = P.faces[face];
    auto it = std::find(fc.begin(), fc.end(), vertex);
    if (it == fc.end()) throw UnfoldError("vertex not on face");
    return face_points.at(face)[it - fc.begin()];
  }
};

struct Net {
  std::string polyhedron;          // fixture name or content hash
  std::vector<int> cycle;          // Q, canonical
  Edge join_edge;
  std::map<int, std::vector<Vec2>> face_points;
  std::vector<int> boundary_verts;
  std::vector<Vec2> boundary;
  std::vector<Edge> cut_edges;     // edges(Q) minus the join edge
  std::vector<int> faces_a, faces_b;  // provenance: the two halves
  int seed_face = 0;
};

// --- partition ---------------------------------------------------------------

// Splits P's faces into the half left of directed Q and the half right of it.
// The face whose CCW boundary traverses a directed cycle edge in the same
// direction is on the left.
inline std::pair<HalfSurface, HalfSurface> partition(const Polyhedron& P, const HamCycle& Q) {
  int nf = P.face_count();
  std::vector<int> side(nf, -1);
  std::set<Edge> qedges;
  int n = Q.size();
  for (int i = 0; i < n; ++i) qedges.insert(make_edge(Q.verts[i], Q.at(i + 1)));

  auto assign = [&](int f, int s) {
    if (side[f] != -1 && side[f] != s) {
      throw UnfoldError("face " + std::to_string(f) +
                        " assigned to both sides: corrupt cycle");
    }
    side[f] = s;
  };
  for (int i = 0; i < n; ++i) {
    int u = Q.verts[i], v = Q.at(i + 1);
    assign(P.face_left_of(u, v), 0);
    assign(P.face_left_of(v, u), 1);
  }

  // Faces with no cycle edge inherit the side of a neighbor across a
  // non-cycle edge.
  std::deque<int> queue;
  for (int f = 0; f < nf; ++f)
    if (side[f] != -1) queue.push_back(f);
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    const auto& fc = P.faces[f];
    for (size_t i = 0; i < fc.size(); ++i) {
      Edge e = make_edge(fc[i], fc[(i + 1) % fc.size()]);
      if (qedges.count(e)) continue;
      const auto& fs = P.edge_faces.at(e);
      int g = fs[0] == f ? fs[1] : fs[0];
      if (side[g] == -1) {
        side[g] = side[f];
        queue.push_back(g);
      } else if (side[g] != side[f]) {
        throw UnfoldError("inconsistent side assignment across edge: corrupt cycle");
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    if (side[f] == -1) throw UnfoldError("face " + std::to_string(f) + " unassigned");
  }

  HalfSurface A{true, {}, Q.verts, {}};
  HalfSurface B{false, {}, Q.verts, {}};
  std::reverse(B.boundary.begin(), B.boundary.end());
  for (int f = 0; f < nf; ++f) (side[f] == 0 ? A : B).faces.push_back(f);
  for (const auto& e : P.edges) {
    if (qedges.count(e)) continue;
    const auto& fs = P.edge_faces.at(e);
    (side[fs[0]] == 0 ? A : B).interior_edges.push_back(e);
  }
  if (A.faces.empty() || B.faces.empty()) throw UnfoldError("empty half");

  // Each half's dual graph must be connected.
  for (const HalfSurface* H : {&A, &B}) {
    std::set<int> seen{H->faces[0]};
    std::deque<int> q2{H->faces[0]};
    while (!q2.empty()) {
      int f = q2.front();
      q2.pop_front();
      for (const auto& e : H->interior_edges) {
        const auto& fs = P.edge_faces.at(e);
        for (int k = 0; k < 2; ++k) {
          if (fs[k] == f && !seen.count(fs[1 - k])) {
            seen.insert(fs[1 - k]);
            q2.push_back(fs[1 - k]);
          }
        }
      }
    }
    if (seen.size() != H->faces.size()) {
      throw UnfoldError("half dual graph disconnected");
    }
  }
  return {A, B};
}

// --- development -------------------------------------------------------------

namespace detail {

// Face in its own plane: origin at its first vertex, +x along its first edge,
// +y so the face reads CCW (as seen from outside).
inline std::vector<Vec2> face_local_coords(const Polyhedron& P, int f) {
  const auto& fc = P.faces[f];
  Vec3 n = normalized(P.face_normal(f));
  const Vec3& o = P.vertices[fc[0]];
  Vec3 x = P.vertices[fc[1]] - o;
  x = normalized(x - n * dot(x, n));
  Vec3 y = cross(n, x);
  std::vector<Vec2> out;
  for (int v : fc) {
    Vec3 d = P.vertices[v] - o;
    out.push_back({dot(d, x), dot(d, y)});
  }
  return out;
}

// Breadth-first development across crossable edges, starting from seed_face
// at `pose`. Places exactly the faces reachable from the seed.
inline std::map<int, std::vector<Vec2>> develop(
    const Polyhedron& P, const std::function<bool(const Edge&)>& crossable,
    int seed_face, const Pose& pose, double tol_fit) {
  std::map<int, std::vector<Vec2>> placed;
  {
    auto local = face_local_coords(P, seed_face);
    double c = std::cos(pose.angle), s = std::sin(pose.angle);
    for (auto& p : local) p = Vec2{c * p.x - s * p.y, s * p.x + c * p.y} + pose.origin;
    placed[seed_face] = std::move(local);
  }
  std::deque<int> queue{seed_face};
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    const auto& fc = P.faces[f];
    for (size_t i = 0; i < fc.size(); ++i) {
      int a = fc[i], b = fc[(i + 1) % fc.size()];
      Edge e = make_edge(a, b);
      if (!crossable(e)) continue;
      const auto& fs = P.edge_faces.at(e);
      int g = fs[0] == f ? fs[1] : fs[0];
      if (placed.count(g)) continue;
      const auto& gf = P.faces[g];
      auto gl = face_local_coords(P, g);
      auto gidx = [&](int v) {
        return std::find(gf.begin(), gf.end(), v) - gf.begin();
      };
      Vec2 la = gl[gidx(a)], lb = gl[gidx(b)];
      Vec2 pa = placed[f][i], pb = placed[f][(i + 1) % fc.size()];
      if (std::abs(norm(lb - la) - norm(pb - pa)) > tol_fit) {
        throw UnfoldError("shared-edge length mismatch beyond tolerance");
      }
      Rigid2 m = align_segment(la, lb, pa, pb);
      for (auto& p : gl) p = m(p);
      placed[g] = std::move(gl);
      queue.push_back(g);
    }
  }
  return placed;
}

struct BoundaryWalk {
  std::vector<int> verts;
  std::vector<Vec2> points;
};

// Outer boundary of a development: starting from a boundary half-edge, walk
// the cut-open surface, rotating around each vertex through glued faces.
inline BoundaryWalk boundary_walk(const Polyhedron& P,
                                  const std::map<int, std::vector<Vec2>>& placed,
                                  const std::function<bool(const Edge&)>& is_cut) {
  auto glued = [&](int f, int a, int b) {
    Edge e = make_edge(a, b);
    if (is_cut(e)) return -1;
    const auto& fs = P.edge_faces.at(e);
    int g = fs[0] == f ? fs[1] : fs[0];
    return placed.count(g) ? g : -1;
  };

  // All boundary directed half-edges (f, a->b).
  std::set<std::array<int, 3>> open;
  for (const auto& [f, pts] : placed) {
    const auto& fc = P.faces[f];
    for (size_t i = 0; i < fc.size(); ++i) {
      int a = fc[i], b = fc[(i + 1) % fc.size()];
      if (glued(f, a, b) < 0) open.insert({f, a, b});
    }
  }
  if (open.empty()) throw UnfoldError("development has no boundary");

  auto next_in_face = [&](int f, int v) {
    const auto& fc = P.faces[f];
    auto it = std::find(fc.begin(), fc.end(), v);
    return fc[(it - fc.begin() + 1) % fc.size()];
  };

  BoundaryWalk walk;
  std::array<int, 3> start = *open.begin();
  std::array<int, 3> cur = start;
  do {
    if (!open.erase(cur)) throw UnfoldError("boundary walk revisited a half-edge");
    auto [f, a, b] = cur;
    // Rotate around b through glued faces to the next boundary half-edge.
    int g = f, v = b;
    int c = next_in_face(g, v);
    for (size_t guard = 0; true; ++guard) {
      if (guard > placed.size()) {
        throw UnfoldError("vertex with no cut edge on the boundary walk");
      }
      int h = glued(g, v, c);
      if (h < 0) break;
      g = h;
      c = next_in_face(g, v);
    }
    {
      const auto& fc = P.faces[g];
      auto it = std::find(fc.begin(), fc.end(), v);
      walk.verts.push_back(v);
      walk.points.push_back(placed.at(g)[it - fc.begin()]);
    }
    cur = {g, v, c};
  } while (cur != start);

  if (!open.empty()) throw UnfoldError("development boundary is not a single cycle");
  // Rotate so the walk starts at its lexicographically smallest vertex id.
  size_t best = 0;
  for (size_t i = 1; i < walk.verts.size(); ++i) {
    if (walk.verts[i] < walk.verts[best]) best = i;
  }
  std::rotate(walk.verts.begin(), walk.verts.begin() + best, walk.verts.end());
  std::rotate(walk.points.begin(), walk.points.begin() + best, walk.points.end());
  return walk;
}

}  // namespace detail

// Develops one half into the plane. The seed face is placed at `pose` (its
// first vertex at pose.origin, first edge rotated by pose.angle from +x).
inline PlanarLayout unfold_half(const Polyhedron& P, const HalfSurface& H,
                                int seed_face = -1, const Pose& pose = {}) {
  if (seed_face < 0) seed_face = H.faces.front();
  if (!H.contains(seed_face)) throw UnfoldError("seed face not in half");
  double tol_fit = kTolFitRel * P.bbox_diagonal();
  std::set<Edge> interior(H.interior_edges.begin(), H.interior_edges.end());
  auto crossable = [&](const Edge& e) { return interior.count(e) > 0; };
  PlanarLayout L;
  L.face_points = detail::develop(P, crossable, seed_face, pose, tol_fit);
  if (L.face_points.size() != H.faces.size()) {
    throw UnfoldError("half dual graph disconnected from seed");
  }
  auto walk = detail::boundary_walk(P, L.face_points,
                                    [](const Edge&) { return false; });
  L.boundary_verts = std::move(walk.verts);
  L.boundary = std::move(walk.points);
  return L;
}

namespace detail {

inline Net assemble_net(const Polyhedron& P, const HamCycle& Q, const Edge& e,
                        std::map<int, std::vector<Vec2>> placed,
                        const std::vector<int>& faces_a, const std::vector<int>& faces_b,
                        int seed_face) {
  Net net;
  net.cycle = Q.verts;
  net.join_edge = e;
  net.face_points = std::move(placed);
  for (const auto& qe : Q.edges()) {
    if (qe != e) net.cut_edges.push_back(qe);
  }
  std::set<Edge> cut(net.cut_edges.begin(), net.cut_edges.end());
  auto walk = boundary_walk(P, net.face_points,
                            [&](const Edge& ed) { return cut.count(ed) > 0; });
  net.boundary_verts = std::move(walk.verts);
  net.boundary = std::move(walk.points);
  net.faces_a = faces_a;
  net.faces_b = faces_b;
  net.seed_face = seed_face;
  return net;
}

}  // namespace detail

// Joins the two developed halves across cycle edge e: A keeps its pose, B is
// moved by the orientation-preserving rigid motion that lays its copy of e
// onto A's. The halves end up in opposite closed half-planes of the line
// through e.
inline Net join(const Polyhedron& P, const HamCycle& Q, const HalfSurface& A,
                const HalfSurface& B, const PlanarLayout& layoutA,
                const PlanarLayout& layoutB, const Edge& e) {
  int n = Q.size();
  int du = -1, dv = -1;
  for (int i = 0; i < n; ++i) {
    if (make_edge(Q.verts[i], Q.at(i + 1)) == e) {
      du = Q.verts[i];
      dv = Q.at(i + 1);
      break;
    }
  }
  if (du < 0) throw UnfoldError("join edge is not on the cycle");

  int fa = P.face_left_of(du, dv);   // A's face at e
  int fb = P.face_left_of(dv, du);   // B's face at e
  if (!A.contains(fa) || !B.contains(fb)) {
    throw UnfoldError("join edge faces do not match the halves");
  }
  Vec2 pa_u = layoutA.point_of(fa, du, P), pa_v = layoutA.point_of(fa, dv, P);
  Vec2 pb_u = layoutB.point_of(fb, du, P), pb_v = layoutB.point_of(fb, dv, P);
  double tol_fit = kTolFitRel * P.bbox_diagonal();
  if (std::abs(norm(pa_v - pa_u) - norm(pb_v - pb_u)) > tol_fit) {
    throw UnfoldError("join edge length mismatch between the halves");
  }
  Rigid2 m = align_segment(pb_u, pb_v, pa_u, pa_v);

  std::map<int, std::vector<Vec2>> placed = layoutA.face_points;
  for (const auto& [f, pts] : layoutB.face_points) {
    std::vector<Vec2> moved = pts;
    for (auto& p : moved) p = m(p);
    placed[f] = std::move(moved);
  }
  return detail::assemble_net(P, Q, e, std::move(placed), A.faces, B.faces,
                              layoutA.face_points.begin()->first);
}

// The same net built the other way: cut all edges of Q except e (a spanning
// cut-path of the vertices) and develop every face across the remaining
// crossable edges, which form the unique spanning tree of the face-dual graph.
inline Net unfold_via_cut_tree(const Polyhedron& P, const HamCycle& Q, const Edge& e,
                               int seed_face = 0, const Pose& pose = {}) {
  std::set<Edge> qedges;
  for (const auto& qe : Q.edges()) qedges.insert(qe);
  if (!qedges.count(e)) throw UnfoldError("join edge is not on the cycle");
  auto crossable = [&](const Edge& ed) { return ed == e || !qedges.count(ed); };
  double tol_fit = kTolFitRel * P.bbox_diagonal();
  auto placed = detail::develop(P, crossable, seed_face, pose, tol_fit);
  if (static_cast<int>(placed.size()) != P.face_count()) {
    throw UnfoldError("crossable dual graph disconnected");
  }
  auto [A, B] = partition(P, Q);
  return detail::assemble_net(P, Q, e, std::move(placed), A.faces, B.faces, seed_face);
}

// One net per cycle edge, in cycle-edge order starting from the canonical
// form's first vertex. With dedupe, nets whose boundaries are congruent to an
// earlier net's are dropped.
inline std::vector<Net> enumerate_nets(const Polyhedron& P, const HamCycle& Q,
                                       bool dedupe = false) {
  auto [A, B] = partition(P, Q);
  PlanarLayout LA = unfold_half(P, A);
  PlanarLayout LB = unfold_half(P, B);
  std::vector<Net> nets;
  int n = Q.size();
  for (int i = 0; i < n; ++i) {
    Edge e = make_edge(Q.verts[i], Q.at(i + 1));
    Net net = join(P, Q, A, B, LA, LB, e);
    if (dedupe) {
      bool dup = false;
      for (const auto& prev : nets) {
        if (congruent(prev.boundary, net.boundary)) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
    }
    nets.push_back(std::move(net));
  }
  return nets;
}

}  // namespace hamnet
