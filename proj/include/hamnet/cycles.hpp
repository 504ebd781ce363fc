#pragma once

#include <algorithm>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamnet/polyhedron.hpp"

namespace hamnet {

struct CycleError : std::runtime_error {
  explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

// Lexicographically minimal representative over all rotations and both
// traversal directions.
inline std::vector<int> canonical_cycle(std::vector<int> seq) {
  if (seq.empty()) return seq;
  size_t n = seq.size();
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t s = 0; s < n; ++s) {
      std::vector<int> cand(n);
      for (size_t i = 0; i < n; ++i) cand[i] = seq[(s + i) % n];
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

// Undirected Hamiltonian vertex cycle on the 1-skeleton, stored canonically.
struct HamCycle {
  std::vector<int> verts;

  bool operator<(const HamCycle& o) const { return verts < o.verts; }
  bool operator==(const HamCycle& o) const { return verts == o.verts; }

  int size() const { return static_cast<int>(verts.size()); }

  int at(int i) const {
    int n = size();
    return verts[((i % n) + n) % n];
  }

  bool has_edge(int a, int b) const {
    int n = size();
    for (int i = 0; i < n; ++i) {
      int u = verts[i], v = verts[(i + 1) % n];
      if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> es;
    int n = size();
    for (int i = 0; i < n; ++i) es.push_back(make_edge(verts[i], verts[(i + 1) % n]));
    std::sort(es.begin(), es.end());
    return es;
  }
};

// Constructs a HamCycle from a vertex sequence, checking it is Hamiltonian on
// P's skeleton, and canonicalizes it.
inline HamCycle make_ham_cycle(const Polyhedron& P, const std::vector<int>& seq) {
  int n = P.vertex_count();
  if (static_cast<int>(seq.size()) != n) {
    throw CycleError("cycle visits " + std::to_string(seq.size()) +
                     " vertices, polyhedron has " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (int v : seq) {
    if (v < 0 || v >= n) throw CycleError("cycle vertex index out of range");
    if (seen[v]) throw CycleError("cycle repeats vertex " + std::to_string(v + 1));
    seen[v] = true;
  }
  for (size_t i = 0; i < seq.size(); ++i) {
    int a = seq[i], b = seq[(i + 1) % seq.size()];
    if (!P.has_edge(a, b)) {
      throw CycleError("consecutive cycle vertices " + std::to_string(a + 1) +
                       " and " + std::to_string(b + 1) + " are not an edge");
    }
  }
  return HamCycle{canonical_cycle(seq)};
}

// Per-cycle-position left/right angle sums; left is taken relative to the
// stored traversal direction.
struct SideSplit {
  std::vector<int> verts;          // cycle order
  std::vector<double> left;        // left[i] at verts[i]
  std::vector<double> right;

  double left_at(int vertex) const {
    for (size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == vertex) return left[i];
    throw CycleError("vertex not on cycle");
  }
  double right_at(int vertex) const {
    for (size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == vertex) return right[i];
    throw CycleError("vertex not on cycle");
  }
};

// Angle sums on the two sides of the cycle at `vertex`: left is swept CCW
// (seen from outside) from the outgoing cycle edge to the incoming one.
inline std::pair<double, double> side_split(const Polyhedron& P, const HamCycle& Q,
                                            int vertex) {
  int n = Q.size();
  int i = -1;
  for (int k = 0; k < n; ++k)
    if (Q.verts[k] == vertex) { i = k; break; }
  if (i < 0) throw CycleError("vertex not on cycle");
  int out = Q.at(i + 1), in = Q.at(i - 1);
  if (!P.has_edge(vertex, out) || !P.has_edge(vertex, in)) {
    throw CycleError("cycle edges not incident to vertex");
  }
  double left = P.ccw_angle(vertex, out, in);
  double right = P.vertex_angle_sum(vertex) - left;
  return {left, right};
}

inline SideSplit side_split_table(const Polyhedron& P, const HamCycle& Q) {
  SideSplit t;
  t.verts = Q.verts;
  for (int v : Q.verts) {
    auto [l, r] = side_split(P, Q, v);
    t.left.push_back(l);
    t.right.push_back(r);
  }
  return t;
}

// "At most pi angle to each side at every point"; equality counts.
inline bool is_quasigeodesic(const Polyhedron& P, const HamCycle& Q, SideSplit* table = nullptr) {
  SideSplit t = side_split_table(P, Q);
  bool ok = true;
  for (size_t i = 0; i < t.verts.size(); ++i) {
    if (t.left[i] > std::numbers::pi + kTolAngle ||
        t.right[i] > std::numbers::pi + kTolAngle) {
      ok = false;
    }
  }
  if (table) *table = std::move(t);
  return ok;
}

namespace detail {

// Backtracking enumeration of Hamiltonian cycles. When quasi_only is set, a
// vertex is checked as soon as both its cycle edges are fixed, which prunes
// each branch at the earliest interior vertex violating the <= pi condition.
class CycleSearch {
 public:
  CycleSearch(const Polyhedron& P, bool quasi_only, long limit)
      : P_(P), quasi_only_(quasi_only), limit_(limit) {}

  std::vector<HamCycle> run() {
    int n = P_.vertex_count();
    used_.assign(n, false);
    path_.clear();
    path_.push_back(0);
    used_[0] = true;
    extend();
    std::vector<HamCycle> out(found_.begin(), found_.end());
    return out;
  }

 private:
  const Polyhedron& P_;
  bool quasi_only_;
  long limit_;
  std::vector<bool> used_;
  std::vector<int> path_;
  std::set<HamCycle> found_;

  bool vertex_ok(int prev, int v, int next) const {
    if (!quasi_only_) return true;
    double left = P_.ccw_angle(v, next, prev);
    double right = P_.vertex_angle_sum(v) - left;
    return left <= std::numbers::pi + kTolAngle &&
           right <= std::numbers::pi + kTolAngle;
  }

  bool full() const { return limit_ >= 0 && static_cast<long>(found_.size()) >= limit_; }

  void extend() {
    if (full()) return;
    int n = P_.vertex_count();
    int u = path_.back();
    if (static_cast<int>(path_.size()) == n) {
      if (!P_.has_edge(u, 0)) return;
      // Closing the cycle fixes the last and first vertices.
      if (!vertex_ok(path_[n - 2], u, 0)) return;
      if (!vertex_ok(u, 0, path_[1])) return;
      if (path_[1] > path_[n - 1]) return;  // symmetry: one direction only
      found_.insert(HamCycle{canonical_cycle(path_)});
      return;
    }
    int prev = path_.size() >= 2 ? path_[path_.size() - 2] : -1;
    const auto& nbrs = P_.rot_neighbors[u];
    std::vector<int> cand(nbrs.begin(), nbrs.end());
    std::sort(cand.begin(), cand.end());
    for (int w : cand) {
      if (used_[w]) continue;
      if (prev >= 0 && !vertex_ok(prev, u, w)) continue;
      used_[w] = true;
      path_.push_back(w);
      extend();
      path_.pop_back();
      used_[w] = false;
      if (full()) return;
    }
  }
};

}  // namespace detail

// All Hamiltonian cycles of P's skeleton, canonical and sorted. limit < 0
// means unlimited; with a limit the search stops early.
inline std::vector<HamCycle> find_ham_cycles(const Polyhedron& P, long limit = -1) {
  return detail::CycleSearch(P, false, limit).run();
}

// All Hamiltonian quasigeodesics, canonical and sorted.
inline std::vector<HamCycle> find_ham_quasigeodesics(const Polyhedron& P, long limit = -1) {
  return detail::CycleSearch(P, true, limit).run();
}

// --- cycle text form: dash-separated 1-based indices, e.g. "1-5-6-2" -------

inline std::vector<int> parse_cycle_string(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, '-')) {
    if (tok.empty()) throw CycleError("empty index in cycle string '" + text + "'");
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw CycleError("bad index '" + tok + "' in cycle string");
    }
    if (pos != tok.size() || v < 1) throw CycleError("bad index '" + tok + "' in cycle string");
    out.push_back(v - 1);
  }
  if (out.size() < 3) throw CycleError("cycle string needs at least 3 vertices");
  return out;
}

// Compact digit strings like "15623784" (valid when all labels are one digit).
inline std::vector<int> parse_cycle_compact(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c < '1' || c > '9') throw CycleError("bad digit in compact cycle string");
    out.push_back(c - '1');
  }
  if (out.size() < 3) throw CycleError("cycle string needs at least 3 vertices");
  return out;
}

inline std::string format_cycle(const std::vector<int>& verts) {
  std::string s;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(verts[i] + 1);
  }
  return s;
}

inline std::string format_cycle(const HamCycle& Q) { return format_cycle(Q.verts); }

}  // namespace hamnet
