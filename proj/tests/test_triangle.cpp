#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "faceflip/flip_graph.hpp"
#include "faceflip/triangle.hpp"
#include "faceflip/validity.hpp"

using namespace faceflip;

TEST_CASE("canonical configuration") {
  auto p = build_triangle_region(3, 4);
  auto c = canonical_config(p);
  CHECK(c == canonical_config(p));
  CHECK(is_locally_valid(c, p));
  for (VertexId v : p.interior_vertices()) {
    CHECK(maekawa_sum(c, p, v) == -2);
    CHECK(vertex_class(c, p, v) == VertexClass::ValleyVertex);
  }
  CHECK(reconfigure_to_canonical(c, p).empty());
  CHECK_THROWS_AS(canonical_config(build_square_grid(2, 2)), TriangleError);
}

TEST_CASE("unblock candidates on the two-ring hexagon") {
  auto p = build_triangle_hexagon(2);
  VertexId center = *p.find_vertex({Rational(0), Rational(0)});
  const auto& star = p.star(center);
  std::mt19937_64 rng(11);
  int blocked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto mu = random_valid(p, rng);
    for (const auto& s : star) {
      FaceId f = s.face;
      if (!blocks(mu, p, f, center)) {
        CHECK_THROWS_AS(unblock_candidates(mu, p, f, center), TriangleError);
        continue;
      }
      ++blocked;
      auto c = unblock_candidates(mu, p, f, center);
      REQUIRE(c.size() == 3);
      for (FaceId g : c) {
        const auto& fe = p.face(f).edges;
        for (EdgeId e : p.face(g).edges) CHECK(std::find(fe.begin(), fe.end(), e) == fe.end());
      }
      bool any = false;
      for (FaceId g : c) any = any || is_flippable(mu, p, g);
      CHECK(any);
    }
  }
  CHECK(blocked > 0);
}

TEST_CASE("sweep on every state of small regions") {
  for (const auto& p : {build_triangle_region(2, 2), build_triangle_region(2, 3), build_triangle_hexagon(1)}) {
    auto c = canonical_config(p);
    for (const auto& mu : enumerate_valid(p)) {
      auto seq = reconfigure_to_canonical(mu, p);
      CHECK(seq.size() <= 2 * p.num_faces());
      CHECK(equal_on_constrained(apply_sequence(mu, p, seq, true), c, p));
    }
  }
}

TEST_CASE("sweep on sampled larger regions") {
  std::mt19937_64 rng(5);
  for (const auto& p : {build_triangle_region(4, 5), build_triangle_hexagon(3)}) {
    auto c = canonical_config(p);
    for (int trial = 0; trial < 50; ++trial) {
      auto mu = random_valid(p, rng);
      auto seq = reconfigure_to_canonical(mu, p);
      CHECK(seq.size() <= 2 * p.num_faces());
      CHECK(equal_on_constrained(apply_sequence(mu, p, seq, true), c, p));
    }
  }
}

TEST_CASE("reconfigure and exact search") {
  auto p = build_triangle_hexagon(1);
  auto g = build_flip_graph(p);
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    auto dist = bfs_distances(g, static_cast<int>(i));
    for (std::size_t j = 0; j < g.num_nodes(); ++j) {
      auto seq = reconfigure(g.nodes[i], g.nodes[j], p);
      CHECK(seq.size() <= 4 * p.num_faces());
      CHECK(static_cast<int>(seq.size()) >= dist[j]);
      CHECK(equal_on_constrained(apply_sequence(g.nodes[i], p, seq, true), g.nodes[j], p));
      CHECK(static_cast<int>(exact_min_flips_triangle(g.nodes[i], g.nodes[j], p).size()) == dist[j]);
    }
  }
  auto c = canonical_config(p);
  auto b = g.nodes.back();
  auto back = reconfigure_to_canonical(b, p);
  FlipSequence reversed(back.rbegin(), back.rend());
  CHECK(reconfigure(c, b, p) == reversed);
}
