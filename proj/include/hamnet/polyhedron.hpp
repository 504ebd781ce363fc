#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamnet/vec.hpp"

namespace hamnet {

// Relative tolerances, scaled by the bounding-box diagonal where noted.
inline constexpr double kTolPlanarRel = 1e-8;   // face planarity, x diagonal
inline constexpr double kTolConvexRel = 1e-8;   // plane-side tests, x diagonal
inline constexpr double kTolAngle = 1e-9;       // radians, absolute

struct MeshError : std::runtime_error {
  explicit MeshError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : MeshError {
  ParseError(int line, const std::string& what)
      : MeshError("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

using Edge = std::array<int, 2>;  // unordered; stored with min index first

inline Edge make_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Closed orientable polyhedral surface. Vertices + outward-CCW faces are the
// source data; edges and per-vertex rotation systems are derived on build().
// Immutable after construction.
struct Polyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;

  // Derived.
  std::vector<Edge> edges;                       // sorted lexicographically
  std::map<Edge, std::array<int, 2>> edge_faces; // the two incident faces
  // Rotation system at each vertex, counterclockwise as seen from outside:
  // rot_neighbors[v][i] is the far endpoint of the i-th incident edge, and
  // rot_faces[v][i] is the face between edges i and i+1 (cyclically).
  std::vector<std::vector<int>> rot_neighbors;
  std::vector<std::vector<int>> rot_faces;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  bool has_edge(int a, int b) const {
    return edge_faces.count(make_edge(a, b)) > 0;
  }

  double bbox_diagonal() const {
    if (vertices.empty()) return 0.0;
    Vec3 lo = vertices[0], hi = vertices[0];
    for (const auto& p : vertices) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    return norm(hi - lo);
  }

  // Face plane by Newell's method; normal is outward for outward-CCW faces.
  Vec3 face_normal(int f) const {
    const auto& fc = faces[f];
    Vec3 n{};
    for (size_t i = 0; i < fc.size(); ++i) {
      const Vec3& a = vertices[fc[i]];
      const Vec3& b = vertices[fc[(i + 1) % fc.size()]];
      n.x += (a.y - b.y) * (a.z + b.z);
      n.y += (a.z - b.z) * (a.x + b.x);
      n.z += (a.x - b.x) * (a.y + b.y);
    }
    return n;
  }

  Vec3 face_centroid(int f) const {
    Vec3 c{};
    for (int v : faces[f]) c = c + vertices[v];
    return c * (1.0 / static_cast<double>(faces[f].size()));
  }

  // Signed volume via fan triangulation; positive when faces are outward-CCW.
  double signed_volume() const {
    double vol = 0.0;
    for (const auto& fc : faces) {
      for (size_t i = 1; i + 1 < fc.size(); ++i) {
        vol += dot(vertices[fc[0]],
                   cross(vertices[fc[i]], vertices[fc[i + 1]])) / 6.0;
      }
    }
    return vol;
  }

  // Builds edges, incidence, and rotation systems. Throws MeshError on
  // non-manifold edges or inconsistent orientation; flips all faces first if
  // the mesh is consistently oriented but inward.
  void build() {
    if (vertices.size() < 4 || faces.size() < 3) {
      throw MeshError("too few vertices or faces for a closed surface");
    }
    for (const auto& fc : faces) {
      if (fc.size() < 3) throw MeshError("face with fewer than 3 vertices");
      for (int v : fc) {
        if (v < 0 || v >= vertex_count()) {
          throw MeshError("vertex index out of range in face");
        }
      }
    }
    check_directed_edges();
    if (signed_volume() < 0.0) {
      for (auto& fc : faces) std::reverse(fc.begin(), fc.end());
      check_directed_edges();
    }
    build_edges();
    build_rotation();
  }

  // Interior angle of `face` at `vertex`, from the 3D edge vectors.
  double corner_angle(int face, int vertex) const {
    const auto& fc = faces[face];
    auto it = std::find(fc.begin(), fc.end(), vertex);
    if (it == fc.end()) throw MeshError("vertex not on face");
    size_t i = static_cast<size_t>(it - fc.begin());
    const Vec3& p = vertices[vertex];
    const Vec3& prev = vertices[fc[(i + fc.size() - 1) % fc.size()]];
    const Vec3& next = vertices[fc[(i + 1) % fc.size()]];
    return angle_between(prev - p, next - p);
  }

  double vertex_angle_sum(int vertex) const {
    double sum = 0.0;
    for (int f : rot_faces[vertex]) sum += corner_angle(f, vertex);
    return sum;
  }

  double vertex_curvature(int vertex) const {
    return 2.0 * std::numbers::pi - vertex_angle_sum(vertex);
  }

  // Counterclockwise angle swept at `vertex` from edge (vertex,from) to edge
  // (vertex,to), summing the corner angles of the faces in between.
  double ccw_angle(int vertex, int from, int to) const {
    const auto& nbrs = rot_neighbors[vertex];
    const auto& fcs = rot_faces[vertex];
    auto idx = [&](int u) {
      auto it = std::find(nbrs.begin(), nbrs.end(), u);
      if (it == nbrs.end()) throw MeshError("edge not incident to vertex");
      return static_cast<size_t>(it - nbrs.begin());
    };
    size_t i = idx(from), j = idx(to);
    double sum = 0.0;
    for (size_t k = i; k != j; k = (k + 1) % nbrs.size()) {
      sum += corner_angle(fcs[k], vertex);
    }
    return sum;
  }

  int vertex_degree(int vertex) const {
    return static_cast<int>(rot_neighbors[vertex].size());
  }

  // The face to the left of the directed edge a->b: the one whose CCW
  // boundary traverses a->b in that direction.
  int face_left_of(int a, int b) const {
    auto it = directed_.find({a, b});
    if (it == directed_.end()) throw MeshError("no such directed edge");
    return it->second;
  }

 private:
  std::map<std::pair<int, int>, int> directed_;  // (a,b) -> face with a->b

  void check_directed_edges() {
    directed_.clear();
    for (int f = 0; f < face_count(); ++f) {
      const auto& fc = faces[f];
      for (size_t i = 0; i < fc.size(); ++i) {
        int a = fc[i], b = fc[(i + 1) % fc.size()];
        if (a == b) throw MeshError("degenerate edge in face " + std::to_string(f));
        if (!directed_.emplace(std::make_pair(a, b), f).second) {
          throw MeshError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                          " traversed twice in the same direction: "
                          "non-manifold or inconsistently oriented faces");
        }
      }
    }
    for (const auto& [de, f] : directed_) {
      if (!directed_.count({de.second, de.first})) {
        throw MeshError("boundary edge " + std::to_string(de.first) + "-" +
                        std::to_string(de.second) + ": surface is not closed");
      }
    }
  }

  void build_edges() {
    edges.clear();
    edge_faces.clear();
    for (const auto& [de, f] : directed_) {
      Edge e = make_edge(de.first, de.second);
      auto [it, fresh] = edge_faces.emplace(e, std::array<int, 2>{f, -1});
      if (!fresh) {
        if (it->second[1] != -1) throw MeshError("non-manifold edge");
        it->second[1] = f;
      }
    }
    for (const auto& [e, fs] : edge_faces) edges.push_back(e);
  }

  void build_rotation() {
    int n = vertex_count();
    rot_neighbors.assign(n, {});
    rot_faces.assign(n, {});
    // For each vertex v and incident face f with ... prev, v, next ... the
    // face spans CCW (seen from outside) from edge (v,next) to edge (v,prev).
    std::vector<std::map<int, std::pair<int, int>>> step(n);  // next -> (face, prev)
    for (int f = 0; f < face_count(); ++f) {
      const auto& fc = faces[f];
      size_t k = fc.size();
      for (size_t i = 0; i < k; ++i) {
        int v = fc[i];
        int nxt = fc[(i + 1) % k];
        int prv = fc[(i + k - 1) % k];
        if (!step[v].emplace(nxt, std::make_pair(f, prv)).second) {
          throw MeshError("non-manifold star at vertex " + std::to_string(v));
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (step[v].empty()) throw MeshError("isolated vertex " + std::to_string(v));
      int start = step[v].begin()->first;
      int u = start;
      do {
        auto it = step[v].find(u);
        if (it == step[v].end()) throw MeshError("open star at vertex " + std::to_string(v));
        rot_neighbors[v].push_back(u);
        rot_faces[v].push_back(it->second.first);
        u = it->second.second;
        if (rot_neighbors[v].size() > step[v].size()) {
          throw MeshError("non-manifold star at vertex " + std::to_string(v));
        }
      } while (u != start);
      if (rot_neighbors[v].size() != step[v].size()) {
        throw MeshError("disconnected star at vertex " + std::to_string(v));
      }
    }
  }
};

struct ValidationCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.pass; });
  }
};

namespace detail {

// Simplicity of a small polygon given 2D points: O(k^2) segment pairs.
inline bool polygon_simple_2d(const std::vector<Vec2>& pts, double tol) {
  size_t n = pts.size();
  auto seg_dist_point = [](const Vec2& a, const Vec2& b, const Vec2& p) {
    Vec2 d = b - a;
    double len2 = dot(d, d);
    double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
    return norm(p - (a + d * t));
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      const Vec2 &a = pts[i], &b = pts[(i + 1) % n];
      const Vec2 &c = pts[j], &d = pts[(j + 1) % n];
      double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
      double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
      double la = norm(b - a), lc = norm(d - c);
      if (la <= tol || lc <= tol) return false;
      // Proper crossing, with signed distances scaled to lengths.
      if ((d1 / la) * (d2 / la) < -tol * tol && (d3 / lc) * (d4 / lc) < -tol * tol) {
        return false;
      }
      // Near-touching endpoints or collinear overlap.
      if (seg_dist_point(a, b, c) <= tol || seg_dist_point(a, b, d) <= tol ||
          seg_dist_point(c, d, a) <= tol || seg_dist_point(c, d, b) <= tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// Pure pass/fail report over the mesh invariants. Structural manifoldness
// is enforced at build() time, so it is reported as passing here.
inline ValidationReport validate(const Polyhedron& P, bool convex_required) {
  ValidationReport rep;
  double diag = P.bbox_diagonal();
  double tol_planar = kTolPlanarRel * diag;
  double tol_convex = kTolConvexRel * diag;

  rep.checks.push_back({"manifold", true, "every edge shared by exactly 2 faces"});

  {
    int v = P.vertex_count(), e = P.edge_count(), f = P.face_count();
    bool ok = (v - e + f) == 2;
    rep.checks.push_back({"euler", ok,
                          "V-E+F = " + std::to_string(v - e + f)});
  }

  {
    bool ok = true;
    std::string detail;
    for (int f = 0; f < P.face_count() && ok; ++f) {
      Vec3 n = P.face_normal(f);
      double nn = norm(n);
      if (nn <= 0.0) { ok = false; detail = "degenerate face " + std::to_string(f); break; }
      n = n * (1.0 / nn);
      Vec3 c = P.face_centroid(f);
      for (int v : P.faces[f]) {
        if (std::abs(dot(P.vertices[v] - c, n)) > tol_planar) {
          ok = false;
          detail = "face " + std::to_string(f) + " deviates from its plane";
          break;
        }
      }
    }
    rep.checks.push_back({"planarity", ok, detail});
  }

  {
    // Each face simple in its own plane.
    bool ok = true;
    std::string detail;
    for (int f = 0; f < P.face_count() && ok; ++f) {
      Vec3 n = normalized(P.face_normal(f));
      const Vec3& o = P.vertices[P.faces[f][0]];
      Vec3 x = P.vertices[P.faces[f][1]] - o;
      x = normalized(x - n * dot(x, n));
      Vec3 y = cross(n, x);
      std::vector<Vec2> pts;
      for (int v : P.faces[f]) {
        Vec3 d = P.vertices[v] - o;
        pts.push_back({dot(d, x), dot(d, y)});
      }
      if (!detail::polygon_simple_2d(pts, tol_planar)) {
        ok = false;
        detail = "face " + std::to_string(f) + " is not a simple polygon";
      }
    }
    rep.checks.push_back({"face_simplicity", ok, detail});
  }

  if (convex_required) {
    bool ok = true;
    std::string detail;
    for (int f = 0; f < P.face_count() && ok; ++f) {
      Vec3 n = normalized(P.face_normal(f));
      Vec3 c = P.face_centroid(f);
      for (int v = 0; v < P.vertex_count(); ++v) {
        if (dot(P.vertices[v] - c, n) > tol_convex) {
          ok = false;
          detail = "vertex " + std::to_string(v) + " outside plane of face " +
                   std::to_string(f);
          break;
        }
      }
    }
    rep.checks.push_back({"convexity", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (int v = 0; v < P.vertex_count(); ++v) {
      if (P.vertex_degree(v) < 3) {
        ok = false;
        detail = "vertex " + std::to_string(v) + " has degree " +
                 std::to_string(P.vertex_degree(v));
        break;
      }
    }
    rep.checks.push_back({"degree", ok, detail});
  }

  return rep;
}

// --- OFF I/O ---------------------------------------------------------------

// Whitespace-separated OFF with '#' comments. Errors carry 1-based line
// numbers. A consistently inward-oriented mesh is flipped to outward-CCW;
// mixed orientation is an error.
inline Polyhedron load_off(std::istream& in) {
  struct Tokenizer {
    std::istream& in;
    std::istringstream line;
    int lineno = 0;

    bool next(std::string& tok) {
      for (;;) {
        if (line >> tok) {
          if (!tok.empty() && tok[0] == '#') {
            line.str("");
            line.clear();
            continue;
          }
          auto hash = tok.find('#');
          if (hash != std::string::npos) tok.erase(hash);
          if (tok.empty()) continue;
          return true;
        }
        std::string raw;
        if (!std::getline(in, raw)) return false;
        ++lineno;
        line.str(raw);
        line.clear();
      }
    }

    std::string expect(const char* what) {
      std::string tok;
      if (!next(tok)) throw ParseError(lineno, std::string("unexpected end of input, expected ") + what);
      return tok;
    }

    long expect_int(const char* what) {
      std::string tok = expect(what);
      size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError(lineno, std::string("expected integer ") + what + ", got '" + tok + "'");
      }
      if (pos != tok.size()) {
        throw ParseError(lineno, std::string("expected integer ") + what + ", got '" + tok + "'");
      }
      return v;
    }

    double expect_real(const char* what) {
      std::string tok = expect(what);
      size_t pos = 0;
      double v = 0;
      try {
        v = std::stod(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError(lineno, std::string("expected number ") + what + ", got '" + tok + "'");
      }
      if (pos != tok.size()) {
        throw ParseError(lineno, std::string("expected number ") + what + ", got '" + tok + "'");
      }
      return v;
    }
  } tk{in};

  std::string header = tk.expect("OFF header");
  if (header != "OFF") throw ParseError(tk.lineno, "malformed header, expected 'OFF'");

  long nv = tk.expect_int("vertex count");
  long nf = tk.expect_int("face count");
  (void)tk.expect_int("edge count");
  if (nv < 0 || nf < 0) throw ParseError(tk.lineno, "negative counts");

  Polyhedron P;
  P.vertices.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    double x = tk.expect_real("x"), y = tk.expect_real("y"), z = tk.expect_real("z");
    P.vertices.push_back({x, y, z});
  }
  P.faces.reserve(nf);
  for (long i = 0; i < nf; ++i) {
    long k = tk.expect_int("face vertex count");
    if (k < 3) throw ParseError(tk.lineno, "face with fewer than 3 vertices");
    std::vector<int> fc;
    for (long j = 0; j < k; ++j) {
      long v = tk.expect_int("vertex index");
      if (v < 0 || v >= nv) throw ParseError(tk.lineno, "vertex index out of range");
      fc.push_back(static_cast<int>(v));
    }
    P.faces.push_back(std::move(fc));
  }

  try {
    P.build();
  } catch (const MeshError& e) {
    throw ParseError(tk.lineno, e.what());
  }
  return P;
}

inline Polyhedron load_off(const std::string& text) {
  std::istringstream in(text);
  return load_off(in);
}

inline void emit_off(const Polyhedron& P, std::ostream& out) {
  out << "OFF\n" << P.vertex_count() << ' ' << P.face_count() << ' '
      << P.edge_count() << '\n';
  char buf[96];
  for (const auto& v : P.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
    out << buf;
  }
  for (const auto& fc : P.faces) {
    out << fc.size();
    for (int v : fc) out << ' ' << v;
    out << '\n';
  }
}

inline std::string emit_off(const Polyhedron& P) {
  std::ostringstream out;
  emit_off(P, out);
  return out.str();
}

}  // namespace hamnet
