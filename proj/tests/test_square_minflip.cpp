#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "faceflip/flip_graph.hpp"
#include "faceflip/square_minflip.hpp"
#include "faceflip/validity.hpp"

using namespace faceflip;

namespace {

// all horizontal creases are mountains, vertical creases alternate by row:
// every vertex has three mountains and one valley
MVAssignment striped(const CreasePattern& p) {
  MVAssignment mu(p.num_edges(), kMountain);
  for (const auto& e : p.edges()) {
    if (e.cls != EdgeClass::Vertical) continue;
    auto top = std::min(p.vertex(e.v0).lattice.y, p.vertex(e.v1).lattice.y);
    if (boost::rational_cast<int>(top) % 2 != 0) mu.set(e.id, kValley);
  }
  return mu;
}

}  // namespace

TEST_CASE("weights") {
  auto p = build_square_grid(3, 5);
  auto mu = striped(p);
  REQUIRE(is_locally_valid(mu, p));
  auto same = weighted_dual(mu, mu, p);
  for (int w : same.weights) CHECK(w == 2);
  auto opposite = weighted_dual(mu, -mu, p);
  for (int w : opposite.weights) CHECK(w == 0);
  CHECK_THROWS_AS(weighted_dual(mu, MVAssignment(p.num_edges()), p), MinFlipError);
  auto miura = build_miura(2, 2, Degrees(60));
  auto m = enumerate_valid(miura).front();
  CHECK_THROWS_AS(weighted_dual(m, m, miura), MinFlipError);
}

TEST_CASE("extreme colorings") {
  auto p = build_square_grid(3, 5);
  auto mu = striped(p);
  auto cc = color_classes(two_color(weighted_dual(mu, mu, p)));
  CHECK(cc.purple.size() == 15);
  CHECK(cc.teal.empty());
  auto checker = two_color(weighted_dual(mu, -mu, p));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 5; ++c)
      CHECK(checker[p.grid_face(r, c)] == ((r + c) % 2 == 0 ? DualColor::Purple : DualColor::Teal));
  CHECK(min_flip_set(mu, mu, p).empty());
  auto q = build_square_grid(2, 3);
  auto nu = striped(q);
  CHECK(min_flip_set(nu, -nu, q).size() == 3);
}

TEST_CASE("random pairs on G_{3,5}") {
  auto p = build_square_grid(3, 5);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_valid(p, rng);
    auto b = random_valid(p, rng);
    for (VertexId v : p.interior_vertices()) {
      int agree = parity_lemma_check(a, b, p, v);
      CHECK((agree == 0 || agree == 2 || agree == 4));
    }
    auto wd = weighted_dual(a, b, p);
    auto colors = two_color(wd);
    for (std::size_t i = 0; i < wd.dual.edges.size(); ++i) {
      const auto& de = wd.dual.edges[i];
      CHECK((colors[de.a] == colors[de.b]) == (wd.weights[i] == 2));
    }
    auto cc = color_classes(colors);
    CHECK(cc.purple.size() + cc.teal.size() == 15);
    for (const auto& cls : {cc.purple, cc.teal})
      CHECK(equal_on_constrained(apply_sequence(a, p, cls, true), b, p));
    auto seq = min_flip_set(a, b, p);
    CHECK(seq.size() == std::min(cc.purple.size(), cc.teal.size()));
    CHECK(std::is_sorted(seq.begin(), seq.end()));
  }
}

TEST_CASE("parity check rejects an odd agreement") {
  auto p = build_square_grid(2, 2);
  auto mu = striped(p);
  auto bad = mu;
  bad.negate(p.star(p.interior_vertices()[0]).front().edge);
  CHECK_THROWS_AS(parity_lemma_check(mu, bad, p, p.interior_vertices()[0]), std::logic_error);
}

TEST_CASE("odd cycle on inconsistent weights") {
  auto p = build_square_grid(2, 2);
  auto mu = striped(p);
  auto wd = weighted_dual(mu, mu, p);
  wd.weights[0] = 0;
  CHECK_THROWS_AS(two_color(wd), OddCycle);
}

TEST_CASE("optimal on G_{3,3}") {
  auto p = build_square_grid(3, 3);
  auto g = build_flip_graph(p);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int i = static_cast<int>(rng() % g.num_nodes());
    int j = static_cast<int>(rng() % g.num_nodes());
    auto d = bfs_distances(g, i);
    CHECK(static_cast<int>(min_flip_set(g.nodes[i], g.nodes[j], p).size()) == d[j]);
  }
}

TEST_CASE("twist flip set") {
  auto p = build_square_twist(1, 1);
  auto states = enumerate_valid(p);
  for (const auto& a : states)
    for (const auto& b : states) {
      auto seq = twist_flip_set(a, b, p);
      for (FaceId f : seq) CHECK(p.face(f).cls == FaceClass::ParallelogramOrTrapezoid);
      CHECK(equal_on_constrained(apply_sequence(a, p, seq, true), b, p));
    }
}
