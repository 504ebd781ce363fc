#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <set>

#include "hamnet/cycles.hpp"
#include "hamnet/fixtures.hpp"
#include "hamnet/unfold.hpp"
#include "hamnet/verify.hpp"

using namespace hamnet;
using std::numbers::pi;

TEST_CASE("cube napkin holder partitions 3/3") {
  Polyhedron cube = fixture("cube");
  HamCycle Q = make_ham_cycle(cube, parse_cycle_compact("15623784"));
  auto [A, B] = partition(cube, Q);
  CHECK(A.faces.size() == 3);
  CHECK(B.faces.size() == 3);
  std::set<int> all(A.faces.begin(), A.faces.end());
  all.insert(B.faces.begin(), B.faces.end());
  CHECK(all.size() == 6);
  CHECK(A.interior_edges.size() == 2);
  CHECK(B.interior_edges.size() == 2);
}

TEST_CASE("pyramid partitions 2/3") {
  Polyhedron P = fixture("square_pyramid_octa_half");
  HamCycle Q = make_ham_cycle(P, parse_cycle_compact("12534"));
  auto [A, B] = partition(P, Q);
  std::multiset<size_t> sizes{A.faces.size(), B.faces.size()};
  CHECK(sizes == std::multiset<size_t>{2, 3});
}

TEST_CASE("octahedron partitions 4/4") {
  Polyhedron P = fixture("octahedron");
  HamCycle Q = make_ham_cycle(P, parse_cycle_compact("123645"));
  auto [A, B] = partition(P, Q);
  CHECK(A.faces.size() == 4);
  CHECK(B.faces.size() == 4);
}

TEST_CASE("cube half unfolds to a 1x3 strip") {
  Polyhedron cube = fixture("cube");
  HamCycle Q = make_ham_cycle(cube, parse_cycle_compact("15623784"));
  auto [A, B] = partition(cube, Q);
  std::vector<Vec2> rect = {{0, 0}, {3, 0}, {3, 1}, {0, 1}};
  for (const HalfSurface* H : {&A, &B}) {
    PlanarLayout L = unfold_half(cube, *H);
    CHECK(congruent(L.boundary, rect));
    CHECK(check_convex(L.boundary));
    CHECK(check_isometry(cube, *H, L) < 1e-9);
  }
}

TEST_CASE("octahedron halves are congruent convex quadrilaterals") {
  Polyhedron oct = fixture("octahedron");
  HamCycle Q = make_ham_cycle(oct, parse_cycle_compact("123645"));
  auto [A, B] = partition(oct, Q);
  PlanarLayout LA = unfold_half(oct, A);
  PlanarLayout LB = unfold_half(oct, B);
  CHECK(congruent(LA.boundary, LB.boundary));
  CHECK(check_convex(LA.boundary));
  CHECK(merge_collinear(LA.boundary).size() == 4);
}

TEST_CASE("boundary interior angles equal the side split") {
  for (const char* name : {"square_pyramid_octa_half", "cube", "octahedron"}) {
    Polyhedron P = fixture(name);
    for (const auto& Q : find_ham_quasigeodesics(P)) {
      SideSplit t = side_split_table(P, Q);
      auto [A, B] = partition(P, Q);
      PlanarLayout LA = unfold_half(P, A);
      PlanarLayout LB = unfold_half(P, B);
      for (size_t i = 0; i < LA.boundary.size(); ++i) {
        CHECK(std::abs(interior_angle(LA.boundary, i) - t.left_at(LA.boundary_verts[i])) <
              1e-9);
      }
      for (size_t i = 0; i < LB.boundary.size(); ++i) {
        CHECK(std::abs(interior_angle(LB.boundary, i) - t.right_at(LB.boundary_verts[i])) <
              1e-9);
      }
    }
  }
}

TEST_CASE("seed independence of unfold_half") {
  Polyhedron oct = fixture("octahedron");
  HamCycle Q = make_ham_cycle(oct, parse_cycle_compact("123645"));
  auto [A, B] = partition(oct, Q);
  PlanarLayout ref = unfold_half(oct, A);
  for (int seed : A.faces) {
    PlanarLayout L = unfold_half(oct, A, seed, Pose{{2.0, -1.0}, 0.7});
    CHECK(congruent(ref.boundary, L.boundary));
    CHECK(check_isometry(oct, A, L) < 1e-9);
  }
}

TEST_CASE("join places halves in opposite half-planes for every edge") {
  Polyhedron cube = fixture("cube");
  HamCycle Q = make_ham_cycle(cube, parse_cycle_compact("15623784"));
  auto [A, B] = partition(cube, Q);
  PlanarLayout LA = unfold_half(cube, A);
  PlanarLayout LB = unfold_half(cube, B);
  int n = Q.size();
  for (int i = 0; i < n; ++i) {
    Edge e = make_edge(Q.verts[i], Q.at(i + 1));
    Net net = join(cube, Q, A, B, LA, LB, e);
    CHECK(net.face_points.size() == 6);
    CHECK(net.cut_edges.size() == 7);
    CHECK(check_half_planes(cube, net));
    CHECK(check_simple(net.boundary).is_simple);
    CHECK(check_no_overlap(net).empty());
    // Cut edges plus e are exactly the cycle's edges, and the cut set is a
    // spanning path of the vertices.
    std::set<Edge> cuts(net.cut_edges.begin(), net.cut_edges.end());
    CHECK(!cuts.count(e));
    std::vector<int> deg(cube.vertex_count(), 0);
    for (const auto& c : net.cut_edges) {
      ++deg[c[0]];
      ++deg[c[1]];
    }
    int ones = 0;
    for (int d : deg) {
      CHECK(d >= 1);
      CHECK(d <= 2);
      if (d == 1) ++ones;
    }
    CHECK(ones == 2);
  }
  CHECK_THROWS_AS(join(cube, Q, A, B, LA, LB, make_edge(0, 2)), UnfoldError);
}

TEST_CASE("cut-tree unfolding matches join for every fixture cycle and edge") {
  for (const char* name :
       {"tetrahedron", "square_pyramid_octa_half", "octahedron", "cube"}) {
    Polyhedron P = fixture(name);
    for (const auto& Q : find_ham_quasigeodesics(P)) {
      auto [A, B] = partition(P, Q);
      PlanarLayout LA = unfold_half(P, A);
      PlanarLayout LB = unfold_half(P, B);
      for (int i = 0; i < Q.size(); ++i) {
        Edge e = make_edge(Q.verts[i], Q.at(i + 1));
        Net nj = join(P, Q, A, B, LA, LB, e);
        Net nt = unfold_via_cut_tree(P, Q, e);
        CHECK(congruent(nj.boundary, nt.boundary));
        // Same gluing: aligning one shared face must align all of them.
        const auto& f0 = *nt.face_points.begin();
        Rigid2 m = align_segment(f0.second[0], f0.second[1],
                                 nj.face_points.at(f0.first)[0],
                                 nj.face_points.at(f0.first)[1]);
        double worst = 0.0;
        for (const auto& [f, pts] : nt.face_points) {
          for (size_t k = 0; k < pts.size(); ++k) {
            worst = std::max(worst, norm(m(pts[k]) - nj.face_points.at(f)[k]));
          }
        }
        CHECK(worst < 1e-7 * P.bbox_diagonal());
      }
    }
  }
}

TEST_CASE("the crossable dual graph is the unique spanning tree") {
  // All interior edges plus the join edge number F-1, so there is exactly one
  // spanning tree of the crossable dual graph.
  for (const char* name : {"cube", "octahedron", "square_pyramid_octa_half"}) {
    Polyhedron P = fixture(name);
    for (const auto& Q : find_ham_quasigeodesics(P)) {
      auto [A, B] = partition(P, Q);
      size_t crossable = A.interior_edges.size() + B.interior_edges.size() + 1;
      CHECK(crossable == static_cast<size_t>(P.face_count() - 1));
    }
  }
}

TEST_CASE("enumerate_nets yields one net per cycle edge") {
  Polyhedron cube = fixture("cube");
  HamCycle Q = make_ham_cycle(cube, parse_cycle_compact("15623784"));
  CHECK(enumerate_nets(cube, Q).size() == 8);
  Polyhedron tet = fixture("tetrahedron");
  for (const auto& q : find_ham_quasigeodesics(tet)) {
    CHECK(enumerate_nets(tet, q).size() == 4);
  }
  auto deduped = enumerate_nets(cube, Q, true);
  CHECK(deduped.size() >= 2);
  CHECK(deduped.size() <= 8);
}

TEST_CASE("all placed faces stay congruent to their originals") {
  Polyhedron oct = fixture("octahedron");
  HamCycle Q = make_ham_cycle(oct, parse_cycle_compact("123645"));
  for (const auto& net : enumerate_nets(oct, Q)) {
    for (const auto& [f, pts] : net.face_points) {
      const auto& fc = oct.faces[f];
      for (size_t i = 0; i < fc.size(); ++i) {
        double l3 = norm(oct.vertices[fc[(i + 1) % fc.size()]] - oct.vertices[fc[i]]);
        double l2 = norm(pts[(i + 1) % pts.size()] - pts[i]);
        CHECK(std::abs(l2 - l3) / l3 < 1e-9);
      }
    }
  }
}
