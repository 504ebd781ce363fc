#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamnet/cycles.hpp"
#include "hamnet/unfold.hpp"
#include "hamnet/verify.hpp"

namespace hamnet {

using json = nlohmann::ordered_json;

namespace iodetail {

// Coordinates as decimal strings with 17 significant digits, so emitted
// files are byte-stable and round-trip exactly.
inline json num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return json::parse(buf);
}

inline json point(const Vec2& p) { return json::array({num(p.x), num(p.y)}); }

}  // namespace iodetail

// Stable field order; all vertex and face indices are 1-based, matching the
// CLI's cycle strings.
inline json net_to_json(const Net& net) {
  json j;
  j["polyhedron"] = net.polyhedron;
  j["cycle"] = format_cycle(net.cycle);
  j["join_edge"] = {net.join_edge[0] + 1, net.join_edge[1] + 1};
  json faces = json::array();
  for (const auto& [f, pts] : net.face_points) {
    json jf;
    jf["face"] = f + 1;
    json vs = json::array();
    for (const auto& p : pts) vs.push_back(iodetail::point(p));
    jf["vertices2d"] = std::move(vs);
    faces.push_back(std::move(jf));
  }
  j["faces"] = std::move(faces);
  json boundary = json::array();
  for (const auto& p : net.boundary) boundary.push_back(iodetail::point(p));
  j["boundary"] = std::move(boundary);
  json cuts = json::array();
  for (const auto& e : net.cut_edges) cuts.push_back({e[0] + 1, e[1] + 1});
  j["cut_edges"] = std::move(cuts);
  return j;
}

// Rebuilds a Net against its polyhedron; half provenance is recomputed from
// the cycle.
inline Net net_from_json(const json& j, const Polyhedron& P) {
  Net net;
  net.polyhedron = j.at("polyhedron").get<std::string>();
  HamCycle Q = make_ham_cycle(P, parse_cycle_string(j.at("cycle").get<std::string>()));
  net.cycle = Q.verts;
  net.join_edge = make_edge(j.at("join_edge")[0].get<int>() - 1,
                            j.at("join_edge")[1].get<int>() - 1);
  for (const auto& jf : j.at("faces")) {
    int f = jf.at("face").get<int>() - 1;
    std::vector<Vec2> pts;
    for (const auto& p : jf.at("vertices2d")) {
      pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    if (f < 0 || f >= P.face_count() || pts.size() != P.faces[f].size()) {
      throw UnfoldError("net JSON does not match the polyhedron's faces");
    }
    net.face_points[f] = std::move(pts);
  }
  for (const auto& je : j.at("cut_edges")) {
    net.cut_edges.push_back(make_edge(je[0].get<int>() - 1, je[1].get<int>() - 1));
  }
  for (const auto& p : j.at("boundary")) {
    net.boundary.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  auto [A, B] = partition(P, Q);
  net.faces_a = A.faces;
  net.faces_b = B.faces;
  return net;
}

inline json validation_to_json(const ValidationReport& rep) {
  json j;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["pass"] = rep.all_pass();
  return j;
}

struct VerificationOutcome {
  std::vector<ValidationCheck> checks;   // reused record shape: name/pass/detail
  double worst_residual = 0.0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Full verification battery for a net; the checks never reuse the unfolding's
// placement math, only the serialized coordinates.
inline VerificationOutcome verify_net(const Polyhedron& P, const Net& net) {
  VerificationOutcome out;
  {
    auto rep = check_simple(net.boundary);
    out.checks.push_back({"boundary_simple", rep.is_simple,
                          rep.is_simple ? "" : std::to_string(rep.violations.size()) +
                                                   " edge-pair violation(s)"});
  }
  {
    auto rep = check_no_overlap(net);
    out.checks.push_back({"no_overlap", rep.empty(),
                          rep.empty() ? "" : "total overlap area " +
                                                 std::to_string(rep.total_area)});
  }
  {
    bool ok = check_half_planes(P, net);
    out.checks.push_back({"half_planes", ok, ""});
  }
  {
    HamCycle Q{net.cycle};
    auto [A, B] = partition(P, Q);
    double worst = 0.0;
    for (const HalfSurface* H : {&A, &B}) {
      PlanarLayout L;
      for (int f : H->faces) L.face_points[f] = net.face_points.at(f);
      worst = std::max(worst, check_isometry(P, *H, L));
    }
    out.worst_residual = worst;
    out.checks.push_back({"isometry", worst < 1e-9,
                          "max residual " + std::to_string(worst)});
  }
  return out;
}

inline json verification_to_json(const VerificationOutcome& out) {
  json j;
  json checks = json::array();
  for (const auto& c : out.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["worst_residual"] = iodetail::num(out.worst_residual);
  j["pass"] = out.all_pass();
  return j;
}

}  // namespace hamnet
