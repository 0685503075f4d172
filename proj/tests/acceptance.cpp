// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "faceflip/cli.hpp"
#include "faceflip/flip.hpp"
#include "faceflip/flip_graph.hpp"
#include "faceflip/io.hpp"
#include "faceflip/miura.hpp"
#include "faceflip/square_minflip.hpp"
#include "faceflip/triangle.hpp"
#include "faceflip/validity.hpp"

using namespace faceflip;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts failed checks and keeps the first counterexample.
struct Tally {
  long checked = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failures == 0;
    o.detail = summary + ", " + std::to_string(checked) + " checks";
    if (!o.pass) o.detail += ", " + std::to_string(failures) + " failed; first: " + first;
    return o;
  }
};

std::string str(long v) { return std::to_string(v); }

Outcome square_universal_flippability() {
  auto p = build_square_grid(4, 4);
  std::mt19937_64 rng(1);
  Tally t;
  for (int trial = 0; trial < 1000; ++trial) {
    auto mu = random_valid(p, rng);
    t.expect(is_locally_valid(mu, p), "sample " + str(trial) + " invalid");
    for (const auto& f : p.faces())
      t.expect(flip_keeps_valid(mu, p, f.id), "sample " + str(trial) + " face " + str(f.id));
  }
  return t.outcome("1000 samples on G_4,4");
}

Outcome square_min_flip_optimality() {
  Tally t;
  long pairs = 0;
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}}) {
    auto p = build_square_grid(m, n);
    auto g = build_flip_graph(p);
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      auto dist = bfs_distances(g, static_cast<int>(i));
      for (std::size_t j = 0; j < g.num_nodes(); ++j) {
        ++pairs;
        const auto& a = g.nodes[i];
        const auto& b = g.nodes[j];
        auto seq = min_flip_set(a, b, p);
        const std::string where = str(m) + "x" + str(n) + " pair " + str(i) + "," + str(j);
        t.expect(static_cast<int>(seq.size()) == dist[j], where + " length " + str(seq.size()) + " vs bfs " +
                                                              str(dist[j]));
        t.expect(equal_on_constrained(apply_sequence(a, p, seq, true), b, p), where + " misses target");
      }
    }
  }
  return t.outcome(str(pairs) + " ordered pairs on G_2,2 and G_2,3");
}

Outcome even_agreement() {
  auto p = build_square_grid(4, 4);
  std::mt19937_64 rng(3);
  Tally t;
  std::set<int> seen;
  for (int trial = 0; trial < 10000; ++trial) {
    auto a = random_valid(p, rng);
    auto b = random_valid(p, rng);
    for (VertexId v : p.interior_vertices()) {
      int agree = 0;
      for (const auto& s : p.star(v)) agree += a[s.edge] == b[s.edge] ? 1 : 0;
      seen.insert(agree);
      t.expect(agree == 0 || agree == 2 || agree == 4, "pair " + str(trial) + " vertex " + str(v));
    }
  }
  std::string vals;
  for (int s : seen) vals += (vals.empty() ? "" : ",") + str(s);
  return t.outcome("10000 pairs on G_4,4, agreements seen {" + vals + "}");
}

Outcome huffman_rigidity() {
  Tally t;
  std::string sizes;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      auto p = build_huffman(m, n, Degrees(60));
      auto g = build_flip_graph(p);
      const std::string where = str(m) + "x" + str(n);
      sizes += " " + where + ":" + str(g.num_nodes()) + "/" + str(g.num_edges());
      t.expect(g.num_edges() == 0, where + " has " + str(g.num_edges()) + " flip edges");
      auto rows = p.short_rows();
      for (const auto& mu : g.nodes)
        for (const auto& row : rows) {
          int label = 0;
          bool mono = true;
          for (EdgeId e : row) {
            if (!p.edge(e).constrained) continue;
            if (label == 0) label = mu[e];
            mono = mono && mu[e] == label;
          }
          t.expect(mono, where + " short row not monochromatic");
        }
    }
  return t.outcome("nodes/edges" + sizes);
}

Outcome twist_characterization() {
  Tally t;
  auto small = build_square_twist(1, 1);
  auto g = build_flip_graph(small);
  for (const auto& mu : g.nodes)
    for (const auto& f : small.faces())
      t.expect(is_flippable(mu, small, f.id) == (f.cls == FaceClass::ParallelogramOrTrapezoid),
               "(1,1) face " + str(f.id));
  auto summary = components_and_diameter(g);
  bool cube = g.num_nodes() == 16 && g.num_edges() == 32 && summary.count == 1 && summary.diameters[0] == 4;
  for (const auto& adj : g.adjacency) cube = cube && adj.size() == 4;
  t.expect(cube, "(1,1) flip graph is not a connected four-cube");

  auto big = build_square_twist(2, 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto mu = random_valid(big, rng);
    for (const auto& f : big.faces())
      t.expect(is_flippable(mu, big, f.id) == (f.cls == FaceClass::ParallelogramOrTrapezoid),
               "(2,2) sample " + str(trial) + " face " + str(f.id));
  }
  return t.outcome("(1,1) exhaustive " + str(g.num_nodes()) + " states, " + str(g.num_edges()) +
                   " edges; (2,2) 200 samples");
}

// Colors differing at exactly one cell once a global shift is allowed.
int recolored_cells(const GridColoring& a, const GridColoring& b) {
  int best = static_cast<int>(a.colors.size());
  for (int s = 0; s < 3; ++s) {
    int d = 0;
    for (std::size_t i = 0; i < a.colors.size(); ++i) d += (a.colors[i] + s) % 3 != b.colors[i] ? 1 : 0;
    best = std::min(best, d);
  }
  return best;
}

Outcome miura_bijection() {
  auto p = build_miura(2, 3, Degrees(60));
  auto states = enumerate_valid(p);
  Tally t;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& mu = states[i];
    const std::string where = "state " + str(i);
    auto c = mv_to_coloring(mu, p);
    t.expect(coloring_to_mv(c, p) == mu, where + " mv->coloring->mv");
    t.expect(mv_to_coloring(coloring_to_mv(c, p), p) == c, where + " coloring->mv->coloring");
    for (const auto& f : p.faces()) {
      if (!is_flippable(mu, p, f.id)) continue;
      t.expect(recolored_cells(c, mv_to_coloring(flip_face(mu, p, f.id), p)) == 1,
               where + " flip of face " + str(f.id));
    }
    for (std::size_t cell = 0; cell < c.colors.size(); ++cell)
      for (int s = 1; s <= 2; ++s) {
        GridColoring d = c;
        d.colors[cell] = (d.colors[cell] + s) % 3;
        const int shift = d.colors[0];
        for (auto& x : d.colors) x = (x + 3 - shift) % 3;
        MVAssignment nu;
        try {
          nu = coloring_to_mv(d, p);
        } catch (const MiuraError&) {
          continue;  // not a proper coloring
        }
        const auto f = static_cast<FaceId>(cell);
        t.expect(is_flippable(mu, p, f) && equal_on_constrained(flip_face(mu, p, f), nu, p),
                 where + " recoloring of cell " + str(cell));
      }
  }
  return t.outcome(str(states.size()) + " valid states of 2x3 Miura");
}

Outcome miura_optimality() {
  auto p = build_miura(2, 3, Degrees(60));
  auto g = build_flip_graph(p);
  const int bound = 2 * 2 * 3 * 3;
  Tally t;
  int longest = 0;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    auto dist = bfs_distances(g, static_cast<int>(i));
    for (std::size_t j = 0; j < g.num_nodes(); ++j) {
      const auto& a = g.nodes[i];
      const auto& b = g.nodes[j];
      const std::string where = "pair " + str(i) + "," + str(j);
      const int d = min_flip_distance(a, b, p);
      t.expect(d == dist[j], where + " distance " + str(d) + " vs bfs " + str(dist[j]));
      auto seq = min_flip_sequence(a, b, p);
      t.expect(static_cast<int>(seq.size()) == dist[j], where + " sequence length");
      t.expect(static_cast<int>(seq.size()) <= bound, where + " exceeds 2mn^2");
      bool reached = false;
      try {
        reached = equal_on_constrained(apply_sequence(a, p, seq, true), b, p);
      } catch (const SequenceError&) {
      }
      t.expect(reached, where + " sequence leaves the valid set or misses b");
      longest = std::max(longest, d);
    }
  }
  return t.outcome(str(g.num_nodes()) + " states, diameter " + str(longest) + ", bound " + str(bound));
}

Outcome miura_count() {
  auto p = build_miura(2, 2, Degrees(60));
  const auto count = count_valid(p);
  // proper 3-colorings of the 2x2 grid graph (a 4-cycle), counted directly
  long free_start = 0, fixed_start = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          // cells a b / c d; neighbours a-b, a-c, b-d, c-d
          if (a == b || a == c || b == d || c == d) continue;
          ++free_start;
          if (a == 0) ++fixed_start;
        }
  Outcome o;
  o.pass = free_start == 18 && static_cast<long>(count.projected) == fixed_start &&
           static_cast<long>(count.projected) * 3 == 18;
  o.detail = "valid (interior-projected) " + str(static_cast<long>(count.projected)) +
             " = colorings with start color 0 (" + str(fixed_start) + "); x3 color shifts = " +
             str(static_cast<long>(count.projected) * 3) + ", proper 3-colorings of C4 = " + str(free_start);
  return o;
}

Outcome triangle_flip_rule() {
  Tally t;
  std::string sizes;
  for (const auto& p : {build_triangle_hexagon(1), build_triangle_region(2, 2)}) {
    auto states = enumerate_valid(p);
    sizes += " " + str(states.size());
    for (const auto& mu : states)
      for (const auto& f : p.faces())
        t.expect(triangle_flippable(mu, p, f.id).flippable == flip_keeps_valid(mu, p, f.id),
                 "face " + str(f.id));
  }
  return t.outcome("states (hexagon, 2x2):" + sizes);
}

Outcome triangle_unblocking() {
  auto p = build_triangle_hexagon(2);
  const VertexId center = *p.find_vertex({Rational(0), Rational(0)});
  Tally t;
  long states = 0, blocked = 0, mixed = 0, mixed_sole = 0;
  for_each_valid(p, [&](const MVAssignment& mu) {
    ++states;
    for (const auto& s : p.star(center)) {
      const FaceId f = s.face;
      if (!blocks(mu, p, f, center)) continue;
      ++blocked;
      auto cands = unblock_candidates(mu, p, f, center);
      std::optional<FaceId> chosen;
      for (FaceId g : cands)
        if (is_flippable(mu, p, g)) {
          chosen = g;
          break;
        }
      t.expect(chosen.has_value(), "state " + str(states) + " face " + str(f) + " has no flippable candidate");
      bool has_m = false, has_v = false;
      for (EdgeId e : p.face(f).edges) (mu[e] == kMountain ? has_m : has_v) = true;
      if (!chosen || !(has_m && has_v)) continue;
      ++mixed;
      auto after = flip_face(mu, p, *chosen);
      t.expect(!blocks(after, p, f, center), "state " + str(states) + " face " + str(f) + " still blocked");
      // When the center was the only blocker, f must now be flippable outright.
      bool sole = true;
      for (VertexId w : p.face(f).cycle)
        if (w != center && p.vertex(w).interior && blocks(mu, p, f, w)) sole = false;
      if (sole) {
        ++mixed_sole;
        t.expect(is_flippable(after, p, f), "state " + str(states) + " face " + str(f) + " not flippable");
      }
    }
  });
  return t.outcome(str(states) + " states of the 2-ring hexagon, " + str(blocked) + " blocked, " + str(mixed) +
                   " mixed (" + str(mixed_sole) + " with the center as sole blocker)");
}

Outcome triangle_bound() {
  auto p = build_triangle_region(2, 2);
  const std::size_t n = p.num_faces();
  auto canonical = canonical_config(p);
  auto states = enumerate_valid(p);
  Tally t;
  std::size_t worst = 0, worst_pair = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto seq = reconfigure_to_canonical(states[i], p);
    worst = std::max(worst, seq.size());
    t.expect(seq.size() <= 2 * n, "state " + str(i) + " needs " + str(seq.size()));
    bool ok = false;
    try {
      ok = equal_on_constrained(apply_sequence(states[i], p, seq, true), canonical, p);
    } catch (const SequenceError&) {
    }
    t.expect(ok, "state " + str(i) + " does not reach canonical through valid states");
  }
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = 0; j < states.size(); ++j) {
      auto seq = reconfigure(states[i], states[j], p);
      worst_pair = std::max(worst_pair, seq.size());
      t.expect(seq.size() <= 4 * n, "pair " + str(i) + "," + str(j) + " needs " + str(seq.size()));
      bool ok = false;
      try {
        ok = equal_on_constrained(apply_sequence(states[i], p, seq, true), states[j], p);
      } catch (const SequenceError&) {
      }
      t.expect(ok, "pair " + str(i) + "," + str(j) + " misses the target");
    }
  return t.outcome(str(states.size()) + " states, n=" + str(n) + ", longest to canonical " + str(worst) +
                   ", longest A->B " + str(worst_pair));
}

Outcome connectivity() {
  Tally t;
  std::string report;
  auto one = [&](const std::string& name, const CreasePattern& p, bool rigid) {
    auto g = build_flip_graph(p);
    auto s = components_and_diameter(g);
    report += " " + name + ":" + str(g.num_nodes()) + "n/" + str(s.count) + "c";
    const std::size_t want = rigid ? g.num_nodes() : 1;
    t.expect(s.count == want, name + " has " + str(s.count) + " components, expected " + str(want));
  };
  one("square2x3", build_square_grid(2, 3), false);
  one("square3x3", build_square_grid(3, 3), false);
  one("miura2x3", build_miura(2, 3, Degrees(60)), false);
  one("miura3x3", build_miura(3, 3, Degrees(60)), false);
  one("triangle2x2", build_triangle_region(2, 2), false);
  one("hexagon1", build_triangle_hexagon(1), false);
  one("twist1x1", build_square_twist(1, 1), false);
  one("huffman1x4", build_huffman(1, 4, Degrees(60)), true);
  one("huffman2x2", build_huffman(2, 2, Degrees(60)), true);
  one("huffman2x3", build_huffman(2, 3, Degrees(60)), true);
  return t.outcome("nodes/components" + report);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome cli_reproducibility() {
  const std::string dir = FACEFLIP_GOLDEN_DIR;
  struct Case {
    std::vector<std::string> args;
    std::string golden;
  };
  const std::vector<Case> cases{
      {{"gen", "--family", "miura", "--m", "2", "--n", "3", "--mv", "random-valid", "--seed", "4"}, "miura_b.json"},
      {{"gen", "--family", "triangle", "--rows", "2", "--cols", "2", "--mv", "random-valid", "--seed", "11"},
       "triangle_a.json"},
      {{"gen", "--family", "triangle", "--rows", "2", "--cols", "2"}, "triangle_2x2_canonical.json"},
      {{"minflip", "--family", "miura", dir + "/miura_a.json", dir + "/miura_b.json"}, "miura_minflip.txt"},
      {{"reconfigure", dir + "/triangle_a.json", dir + "/triangle_b.json"}, "triangle_reconfigure.txt"},
      {{"render", "--labels", dir + "/triangle_a.json"}, "triangle_a.svg"},
  };
  Tally t;
  for (const auto& c : cases) {
    std::string outputs[2];
    for (auto& text : outputs) {
      std::istringstream in;
      std::ostringstream out, err;
      const int code = run_cli(c.args, in, out, err);
      t.expect(code == kExitOk, c.args[0] + " exited " + str(code));
      text = out.str();
    }
    t.expect(outputs[0] == outputs[1], c.args[0] + " differs between runs");
    t.expect(outputs[0] == slurp(dir + "/" + c.golden), c.args[0] + " differs from " + c.golden);
  }
  return t.outcome(str(static_cast<long>(cases.size())) + " commands run twice against golden files");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"square grid: every face flip preserves validity", square_universal_flippability},
      {"square grid: min flip set equals flip-graph distance", square_min_flip_optimality},
      {"square grid: per-vertex agreement is even", even_agreement},
      {"huffman grid: no flips, monochromatic short rows", huffman_rigidity},
      {"square twist: flippable faces are the parallelograms", twist_characterization},
      {"miura: coloring bijection, flips are single recolorings", miura_bijection},
      {"miura: min flip distance and sequence are optimal", miura_optimality},
      {"miura: 2x2 count against 3-colorings", miura_count},
      {"triangle: vertex-type flippability rule", triangle_flip_rule},
      {"triangle: opposite faces unblock a blocked face", triangle_unblocking},
      {"triangle: 2n reconfiguration bound", triangle_bound},
      {"flip graph connectivity witnesses", connectivity},
      {"cli: reproducible golden output", cli_reproducibility},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s [%s] (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
