#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hamnet/fixtures.hpp"
#include "hamnet/net_io.hpp"
#include "hamnet/svg.hpp"

using namespace hamnet;

namespace {

Net sample_net() {
  Polyhedron cube = fixture("cube");
  HamCycle Q = make_ham_cycle(cube, parse_cycle_compact("15623784"));
  Net net = unfold_via_cut_tree(cube, Q, make_edge(0, 4));
  net.polyhedron = "cube";
  return net;
}

}  // namespace

TEST_CASE("net JSON round-trip is exact") {
  Polyhedron cube = fixture("cube");
  Net net = sample_net();
  json j = net_to_json(net);
  Net back = net_from_json(j, cube);
  CHECK(back.polyhedron == net.polyhedron);
  CHECK(back.cycle == net.cycle);
  CHECK(back.join_edge == net.join_edge);
  CHECK(back.cut_edges == net.cut_edges);
  REQUIRE(back.face_points.size() == net.face_points.size());
  for (const auto& [f, pts] : net.face_points) {
    const auto& q = back.face_points.at(f);
    REQUIRE(q.size() == pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      CHECK(q[i].x == pts[i].x);  // %.17g preserves doubles exactly
      CHECK(q[i].y == pts[i].y);
    }
  }
  CHECK(net_to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("net JSON field shape") {
  json j = net_to_json(sample_net());
  CHECK(j["polyhedron"] == "cube");
  // canonical (lexicographically least rotation/reflection) of 15623784
  CHECK(j["cycle"] == "1-4-8-7-3-2-6-5");
  CHECK(j["join_edge"] == json::array({1, 5}));
  CHECK(j["faces"].size() == 6);
  CHECK(j["faces"][0].contains("face"));
  CHECK(j["faces"][0].contains("vertices2d"));
  CHECK(j["cut_edges"].size() == 7);
  CHECK(j["boundary"].size() >= 8);
  for (const auto& e : j["cut_edges"]) {
    CHECK(e[0].get<int>() >= 1);
    CHECK(e[1].get<int>() >= 1);
  }
}

TEST_CASE("net_from_json rejects mismatched polyhedra") {
  json j = net_to_json(sample_net());
  CHECK_THROWS_AS(net_from_json(j, fixture("octahedron")), std::exception);
}

TEST_CASE("verify_net passes for a generated net and its JSON copy") {
  Polyhedron cube = fixture("cube");
  Net net = sample_net();
  auto out = verify_net(cube, net);
  CHECK(out.all_pass());
  CHECK(out.worst_residual < 1e-9);

  Net back = net_from_json(net_to_json(net), cube);
  CHECK(verify_net(cube, back).all_pass());

  json jv = verification_to_json(out);
  CHECK(jv["pass"] == true);
  CHECK(jv["checks"].size() == 4);
  std::set<std::string> names;
  for (const auto& c : jv["checks"]) names.insert(c["name"].get<std::string>());
  CHECK(names == std::set<std::string>{"boundary_simple", "no_overlap",
                                       "half_planes", "isometry"});
}

TEST_CASE("verify_net fails on corrupted coordinates") {
  Polyhedron cube = fixture("cube");
  Net net = sample_net();
  net.face_points.begin()->second[0].x += 0.05;
  auto out = verify_net(cube, net);
  CHECK(!out.all_pass());
  CHECK(out.worst_residual > 1e-3);
}

TEST_CASE("validation_to_json shape") {
  json j = validation_to_json(validate(fixture("icosahedron"), true));
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() >= 5);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("details"));
  }
}

TEST_CASE("svg output is deterministic and well formed") {
  Polyhedron cube = fixture("cube");
  Net net = sample_net();
  std::string a = emit_svg(cube, net);
  std::string b = emit_svg(cube, net);
  CHECK(a == b);
  CHECK(a.rfind("<svg ", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("c02020") != std::string::npos);  // join edge stroke
  // One face path per face plus the boundary path.
  size_t paths = 0;
  for (size_t pos = 0; (pos = a.find("<path", pos)) != std::string::npos; ++pos) {
    ++paths;
  }
  CHECK(paths == 7);
  std::string no_labels = emit_svg(cube, net, SvgOptions{800, 40, false});
  CHECK(no_labels.find("<text") == std::string::npos);
}
