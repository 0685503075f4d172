#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "faceflip/pattern.hpp"
#include "faceflip/validity.hpp"

using namespace faceflip;

namespace {

void check_structure(const CreasePattern& p) {
  // Euler for a disk: V - E + F = 1 (the outer face is not stored)
  CHECK(static_cast<long>(p.num_vertices()) - static_cast<long>(p.num_edges()) +
            static_cast<long>(p.num_faces()) ==
        1);
  for (VertexId v : p.interior_vertices()) {
    std::vector<Degrees> sectors;
    for (const auto& s : p.star(v)) sectors.push_back(s.sector);
    CHECK(kawasaki_check(sectors));
  }
  for (const auto& e : p.edges()) {
    CHECK(e.faces.size() >= 1);
    CHECK(e.faces.size() <= 2);
    bool interior_end = p.vertex(e.v0).interior || p.vertex(e.v1).interior;
    CHECK(e.constrained == interior_end);
  }
  for (const auto& f : p.faces()) {
    Degrees total{0};
    for (const auto& c : f.corners) total += c;
    CHECK(total == Degrees(180 * (static_cast<int>(f.cycle.size()) - 2)));
  }
}

}  // namespace

TEST_CASE("square grid counts") {
  auto p = build_square_grid(3, 4);
  CHECK(p.num_faces() == 12);
  CHECK(p.num_vertices() == 20);
  CHECK(p.num_edges() == 31);
  CHECK(p.interior_vertices().size() == 6);
  check_structure(p);
  CHECK(p.grid_face(1, 2) == 6);
  for (VertexId v : p.interior_vertices()) CHECK(p.star(v).size() == 4);
}

TEST_CASE("grid generators reject bad sizes") {
  CHECK_THROWS_AS(build_square_grid(0, 3), PatternError);
  CHECK_THROWS_AS(build_miura(2, 2, Degrees(90)), PatternError);
  CHECK_THROWS_AS(build_miura(2, 2, Degrees(0)), PatternError);
  CHECK_THROWS_AS(build_square_twist(0, 1), PatternError);
}

TEST_CASE("miura structure") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      auto p = build_miura(m, n, Degrees(60));
      CHECK(p.interior_vertices().size() == static_cast<std::size_t>((m - 1) * (n - 1)));
      check_structure(p);
    }
  auto p = build_miura(3, 3, Degrees(70));
  for (VertexId v : p.interior_vertices()) {
    const auto& star = p.star(v);
    REQUIRE(star.size() == 4);
    int zigzag = 0;
    for (const auto& s : star) zigzag += p.is_zigzag(s.edge) ? 1 : 0;
    CHECK(zigzag == 2);
  }
}

TEST_CASE("triangle regions") {
  auto p = build_triangle_region(2, 2);
  CHECK(p.num_faces() == 8);
  CHECK(p.interior_vertices().size() == 1);
  check_structure(p);
  auto h = build_triangle_hexagon(1);
  CHECK(h.num_faces() == 6);
  CHECK(h.interior_vertices().size() == 1);
  check_structure(h);
  auto h2 = build_triangle_hexagon(2);
  CHECK(h2.num_faces() == 24);
  CHECK(h2.interior_vertices().size() == 7);
  check_structure(h2);
  for (const auto& f : h2.faces()) CHECK(f.cycle.size() == 3);
}

TEST_CASE("huffman and twist structure") {
  auto h = build_huffman(2, 2, Degrees(60));
  CHECK(h.num_faces() == 4);
  check_structure(h);
  auto h3 = build_huffman(3, 3, Degrees(50));
  check_structure(h3);
  auto rows = h3.short_rows();
  CHECK(!rows.empty());
  auto t = build_square_twist(1, 1);
  CHECK(t.num_faces() == 9);
  CHECK(t.interior_vertices().size() == 4);
  check_structure(t);
  check_structure(build_square_twist(2, 2));
}

TEST_CASE("dual graph of a grid") {
  auto p = build_square_grid(2, 3);
  auto d = dual_graph(p);
  CHECK(d.num_nodes == 6);
  CHECK(d.edges.size() == 7);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : d.edges) seen.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
  CHECK(seen.size() == 7);
}

TEST_CASE("build_pattern regenerates") {
  PatternParams params;
  params.m = 2;
  params.n = 3;
  params.alpha = Degrees(60);
  auto a = build_pattern(Family::Miura, params);
  auto b = build_miura(2, 3, Degrees(60));
  CHECK(a.num_edges() == b.num_edges());
  CHECK(family_from_name(family_name(Family::SquareTwist)) == Family::SquareTwist);
  CHECK(!family_from_name("nope"));
}
