#include "faceflip/square_minflip.hpp"

#include <deque>
#include <string>

#include "faceflip/validity.hpp"

namespace faceflip {

namespace {

void require_pair(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p, Family family) {
  if (p.family() != family) throw MinFlipError("pattern has the wrong family for this operation");
  if (mu1.size() != p.num_edges() || mu2.size() != p.num_edges())
    throw MinFlipError("assignment size does not match the pattern");
  if (!is_locally_valid(mu1, p) || !is_locally_valid(mu2, p))
    throw MinFlipError("both assignments must be locally valid");
}

}  // namespace

WeightedDual weighted_dual(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p) {
  require_pair(mu1, mu2, p, Family::SquareGrid);
  WeightedDual wd;
  wd.dual = dual_graph(p);
  wd.weights.reserve(wd.dual.edges.size());
  for (const auto& de : wd.dual.edges) wd.weights.push_back(std::abs(mu1[de.primal] + mu2[de.primal]));
  return wd;
}

int parity_lemma_check(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p, VertexId v) {
  int agree = 0;
  for (const auto& s : p.star(v)) agree += mu1[s.edge] == mu2[s.edge] ? 1 : 0;
  if (agree % 2 != 0)
    throw std::logic_error("assignments agree on " + std::to_string(agree) + " creases at vertex " +
                           std::to_string(v) + "; one of them is not valid");
  return agree;
}

std::vector<DualColor> two_color(const WeightedDual& wd) {
  std::vector<int> color(wd.dual.num_nodes, -1);
  // adjacency stores the primal edge; map it back to the dual edge weight
  std::vector<int> weight_by_primal;
  for (std::size_t i = 0; i < wd.dual.edges.size(); ++i) {
    EdgeId e = wd.dual.edges[i].primal;
    if (static_cast<std::size_t>(e) >= weight_by_primal.size()) weight_by_primal.resize(e + 1, -1);
    weight_by_primal[e] = wd.weights.at(i);
  }
  for (std::size_t start = 0; start < wd.dual.num_nodes; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (const auto& [b, e] : wd.dual.adjacency[a]) {
        int want = weight_by_primal[e] == 2 ? color[a] : 1 - color[a];
        if (color[b] < 0) {
          color[b] = want;
          queue.push_back(b);
        } else if (color[b] != want) {
          throw OddCycle("weighted dual has an odd cycle through face " + std::to_string(b));
        }
      }
    }
  }
  std::vector<DualColor> out;
  out.reserve(color.size());
  for (int c : color) out.push_back(c == 0 ? DualColor::Purple : DualColor::Teal);
  return out;
}

ColorClasses color_classes(const std::vector<DualColor>& colors) {
  ColorClasses cc;
  for (std::size_t f = 0; f < colors.size(); ++f)
    (colors[f] == DualColor::Purple ? cc.purple : cc.teal).push_back(static_cast<FaceId>(f));
  return cc;
}

FlipSequence min_flip_set(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p) {
  auto cc = color_classes(two_color(weighted_dual(mu1, mu2, p)));
  // face 0 is always purple
  return cc.teal.size() < cc.purple.size() ? cc.teal : cc.purple;
}

FlipSequence twist_flip_set(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p) {
  require_pair(mu1, mu2, p, Family::SquareTwist);
  FlipSequence seq;
  for (const auto& f : p.faces()) {
    if (f.cls != FaceClass::ParallelogramOrTrapezoid) continue;
    bool any = false, all = true;
    for (EdgeId e : f.edges) {
      if (!p.edge(e).constrained) continue;
      any = true;
      if (mu1[e] == mu2[e]) all = false;
    }
    if (any && all) seq.push_back(f.id);
  }
  if (!equal_on_constrained(apply_sequence(mu1, p, seq, false), mu2, p))
    throw MinFlipError("assignments differ by more than whole parallelogram flips");
  return seq;
}

}  // namespace faceflip
