#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>
#include <set>

#include "hamnet/cycles.hpp"
#include "hamnet/fixtures.hpp"

using namespace hamnet;
using std::numbers::pi;

namespace {

// Brute-force oracle: all permutations starting at vertex 0, filtered by
// skeleton adjacency, deduplicated canonically. Independent of the search.
std::set<HamCycle> brute_force_ham_cycles(const Polyhedron& P) {
  int n = P.vertex_count();
  std::vector<int> rest;
  for (int v = 1; v < n; ++v) rest.push_back(v);
  std::set<HamCycle> out;
  do {
    bool ok = P.has_edge(0, rest.front()) && P.has_edge(rest.back(), 0);
    for (size_t i = 0; ok && i + 1 < rest.size(); ++i) {
      ok = P.has_edge(rest[i], rest[i + 1]);
    }
    if (ok) {
      std::vector<int> seq{0};
      seq.insert(seq.end(), rest.begin(), rest.end());
      out.insert(HamCycle{canonical_cycle(seq)});
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace

TEST_CASE("canonical form is a fixed point") {
  std::vector<int> seq = {0, 4, 5, 1, 2, 6, 7, 3};
  auto c = canonical_cycle(seq);
  CHECK(canonical_cycle(c) == c);
  std::reverse(seq.begin(), seq.end());
  CHECK(canonical_cycle(seq) == c);
  std::rotate(seq.begin(), seq.begin() + 3, seq.end());
  CHECK(canonical_cycle(seq) == c);
}

TEST_CASE("make_ham_cycle rejects corrupt input") {
  Polyhedron cube = fixture("cube");
  CHECK_THROWS_AS(make_ham_cycle(cube, {0, 1, 2, 3, 4, 5, 6}), CycleError);
  CHECK_THROWS_AS(make_ham_cycle(cube, {0, 1, 2, 3, 4, 5, 6, 6}), CycleError);
  // 1 and 7 (0-based 0 and 6) are a cube diagonal, not an edge.
  CHECK_THROWS_AS(make_ham_cycle(cube, {0, 6, 1, 2, 3, 4, 5, 7}), CycleError);
}

TEST_CASE("tetrahedron side split is pi/3 vs 2pi/3") {
  Polyhedron tet = fixture("tetrahedron");
  HamCycle Q = make_ham_cycle(tet, {0, 1, 2, 3});
  for (int v = 0; v < 4; ++v) {
    auto [l, r] = side_split(tet, Q, v);
    double lo = std::min(l, r), hi = std::max(l, r);
    CHECK(lo == Catch::Approx(pi / 3).margin(1e-12));
    CHECK(hi == Catch::Approx(2 * pi / 3).margin(1e-12));
  }
  CHECK(is_quasigeodesic(tet, Q));
}

TEST_CASE("pyramid Q=12534 side angle set") {
  Polyhedron P = fixture("square_pyramid_octa_half");
  HamCycle Q = make_ham_cycle(P, parse_cycle_compact("12534"));
  SideSplit t;
  CHECK(is_quasigeodesic(P, Q, &t));
  std::set<long> millis;  // angle/pi rounded, as value set over both sides
  for (size_t i = 0; i < t.verts.size(); ++i) {
    millis.insert(std::lround(t.left[i] / pi * 6));
    millis.insert(std::lround(t.right[i] / pi * 6));
  }
  // pi x {1/3, 1/2, 2/3, 5/6, 1} in sixths
  CHECK(millis == std::set<long>{2, 3, 4, 5, 6});
  for (size_t i = 0; i < t.verts.size(); ++i) {
    double nearest = std::lround(t.left[i] / pi * 6) * pi / 6;
    CHECK(std::abs(t.left[i] - nearest) < 1e-9);
  }
}

TEST_CASE("cube napkin-holder side angles are pi/2 or pi") {
  Polyhedron cube = fixture("cube");
  HamCycle Q = make_ham_cycle(cube, parse_cycle_compact("15623784"));
  SideSplit t;
  CHECK(is_quasigeodesic(cube, Q, &t));
  for (size_t i = 0; i < t.verts.size(); ++i) {
    for (double a : {t.left[i], t.right[i]}) {
      bool ok = std::abs(a - pi / 2) < 1e-9 || std::abs(a - pi) < 1e-9;
      CHECK(ok);
    }
  }
}

TEST_CASE("left plus right equals the vertex angle; reversal swaps sides") {
  Polyhedron oct = fixture("octahedron");
  HamCycle Q = make_ham_cycle(oct, parse_cycle_compact("123645"));
  std::vector<int> rev = Q.verts;
  std::reverse(rev.begin(), rev.end());
  HamCycle Qr{rev};  // non-canonical on purpose: reversed traversal
  for (int v = 0; v < oct.vertex_count(); ++v) {
    auto [l, r] = side_split(oct, Q, v);
    CHECK(std::abs(l + r - oct.vertex_angle_sum(v)) < 1e-9);
    CHECK(l > 0.0);
    CHECK(r > 0.0);
    auto [lr, rr] = side_split(oct, Qr, v);
    CHECK(lr == Catch::Approx(r).margin(1e-12));
    CHECK(rr == Catch::Approx(l).margin(1e-12));
  }
  CHECK(is_quasigeodesic(oct, Q) == is_quasigeodesic(oct, Qr));
}

TEST_CASE("icosahedron cycles exist but none are quasigeodesic") {
  Polyhedron ico = fixture("icosahedron");
  auto some = find_ham_cycles(ico, 5);
  REQUIRE(!some.empty());
  for (const auto& c : some) CHECK(!is_quasigeodesic(ico, c));
  CHECK(find_ham_quasigeodesics(ico).empty());
}

TEST_CASE("search counts on small fixtures") {
  CHECK(find_ham_cycles(fixture("tetrahedron")).size() == 3);
  CHECK(find_ham_quasigeodesics(fixture("tetrahedron")).size() == 3);
  CHECK(find_ham_cycles(fixture("cube")).size() == 6);
  CHECK(find_ham_cycles(fixture("rhombic_dodecahedron")).empty());
  CHECK(find_ham_quasigeodesics(fixture("dodecahedron")).empty());
}

TEST_CASE("cube search finds the napkin holder") {
  Polyhedron cube = fixture("cube");
  auto qs = find_ham_quasigeodesics(cube);
  HamCycle napkin = make_ham_cycle(cube, parse_cycle_compact("15623784"));
  CHECK(std::find(qs.begin(), qs.end(), napkin) != qs.end());
}

TEST_CASE("octahedron search finds 123645") {
  Polyhedron oct = fixture("octahedron");
  auto qs = find_ham_quasigeodesics(oct);
  HamCycle q = make_ham_cycle(oct, parse_cycle_compact("123645"));
  CHECK(std::find(qs.begin(), qs.end(), q) != qs.end());
}

TEST_CASE("oracle equivalence on small fixtures") {
  for (const char* name : {"tetrahedron", "square_pyramid_octa_half", "octahedron", "cube"}) {
    Polyhedron P = fixture(name);
    auto oracle = brute_force_ham_cycles(P);
    auto searched = find_ham_cycles(P);
    CHECK(std::set<HamCycle>(searched.begin(), searched.end()) == oracle);
    std::set<HamCycle> quasi_oracle;
    for (const auto& c : oracle) {
      if (is_quasigeodesic(P, c)) quasi_oracle.insert(c);
    }
    auto quasi = find_ham_quasigeodesics(P);
    CHECK(std::set<HamCycle>(quasi.begin(), quasi.end()) == quasi_oracle);
  }
}

TEST_CASE("search output is deterministic and sorted") {
  Polyhedron oct = fixture("octahedron");
  auto a = find_ham_quasigeodesics(oct);
  auto b = find_ham_quasigeodesics(oct);
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("cycle string parsing") {
  CHECK(parse_cycle_string("1-5-6-2") == std::vector<int>{0, 4, 5, 1});
  CHECK(parse_cycle_compact("12534") == std::vector<int>{0, 1, 4, 2, 3});
  CHECK(format_cycle(std::vector<int>{0, 4, 5, 1}) == "1-5-6-2");
  CHECK_THROWS_AS(parse_cycle_string("1--2-3"), CycleError);
  CHECK_THROWS_AS(parse_cycle_string("1-x-3"), CycleError);
  CHECK_THROWS_AS(parse_cycle_compact("1x3"), CycleError);
}
