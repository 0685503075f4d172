#include "faceflip/triangle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>

#include "faceflip/flip_graph.hpp"
#include "faceflip/validity.hpp"

namespace faceflip {

namespace {

void require_triangle(const CreasePattern& p) {
  if (p.family() != Family::TriangleRegion) throw TriangleError("pattern is not a triangle-lattice region");
}

int lattice_int(const Rational& r) { return static_cast<int>(r.numerator() / r.denominator()); }

// Lattice lookups for the sweep.
class Lattice {
 public:
  explicit Lattice(const CreasePattern& p) : p_(p) {
    for (const auto& f : p.faces()) {
      auto key = f.cycle;
      std::sort(key.begin(), key.end());
      faces_.emplace(key, f.id);
    }
    for (const auto& v : p.vertices()) {
      int i = lattice_int(v.lattice.x);
      lo_ = std::min(lo_, i);
      hi_ = std::max(hi_, i);
      jlo_ = std::min(jlo_, lattice_int(v.lattice.y));
      jhi_ = std::max(jhi_, lattice_int(v.lattice.y));
    }
  }

  std::optional<VertexId> vertex(int i, int j) const { return p_.find_vertex({Rational(i), Rational(j)}); }

  std::optional<EdgeId> edge(int i0, int j0, int i1, int j1) const {
    auto a = vertex(i0, j0), b = vertex(i1, j1);
    if (!a || !b) return std::nullopt;
    return p_.find_edge(*a, *b);
  }

  std::optional<FaceId> face(std::array<std::pair<int, int>, 3> corners) const {
    std::vector<VertexId> key;
    for (auto [i, j] : corners) {
      auto v = vertex(i, j);
      if (!v) return std::nullopt;
      key.push_back(*v);
    }
    std::sort(key.begin(), key.end());
    auto it = faces_.find(key);
    if (it == faces_.end()) return std::nullopt;
    return it->second;
  }

  int imin() const { return lo_; }
  int imax() const { return hi_; }
  int jmin() const { return jlo_; }
  int jmax() const { return jhi_; }

 private:
  const CreasePattern& p_;
  std::map<std::vector<VertexId>, FaceId> faces_;
  int lo_ = 1 << 30, hi_ = -(1 << 30), jlo_ = 1 << 30, jhi_ = -(1 << 30);
};

class Sweep {
 public:
  Sweep(const MVAssignment& mu, const CreasePattern& p)
      : p_(p), lat_(p), mu_(mu), goal_(canonical_config(p)), locked_(p.num_edges(), false) {}

  FlipSequence run() {
    for (int i = lat_.imin(); i < lat_.imax(); ++i) {
      // diagonal creases at the vertices of line i, top to bottom
      for (int j = lat_.jmax(); j >= lat_.jmin(); --j) {
        if (!lat_.vertex(i, j)) continue;
        std::vector<EdgeId> targets;
        for (auto e : {lat_.edge(i, j, i + 1, j), lat_.edge(i, j, i + 1, j - 1)})
          if (e) targets.push_back(*e);
        std::vector<std::optional<FaceId>> cands{
            lat_.face({{{i, j}, {i + 1, j}, {i + 1, j - 1}}}),
            lat_.face({{{i, j - 1}, {i + 1, j - 1}, {i, j}}}),
            lat_.face({{{i, j}, {i + 1, j}, {i, j + 1}}}),
        };
        fix(targets, cands, i, j);
      }
      // vertical creases of line i + 1, top to bottom
      for (int j = lat_.jmax(); j > lat_.jmin(); --j) {
        auto e = lat_.edge(i + 1, j, i + 1, j - 1);
        if (!e) continue;
        std::vector<std::optional<FaceId>> cands{
            lat_.face({{{i + 1, j - 1}, {i + 2, j - 1}, {i + 1, j}}}),
            lat_.face({{{i + 1, j - 1}, {i + 1, j}, {i, j}}}),
        };
        fix({*e}, cands, i + 1, j);
      }
    }
    if (!equal_on_constrained(mu_, goal_, p_)) throw std::logic_error("sweep ended away from the canonical state");
    return seq_;
  }

 private:
  bool wrong(EdgeId e) const { return p_.edge(e).constrained && mu_[e] != goal_[e]; }

  bool touches_locked(FaceId f) const {
    for (EdgeId e : p_.face(f).edges)
      if (locked_[e] && p_.edge(e).constrained) return true;
    return false;
  }

  std::vector<EdgeId> toggled(const std::vector<FaceId>& faces, const std::vector<EdgeId>& targets) const {
    std::vector<EdgeId> out;
    for (EdgeId t : targets) {
      if (!p_.edge(t).constrained) continue;
      int count = 0;
      for (FaceId f : faces)
        for (EdgeId e : p_.face(f).edges) count += e == t ? 1 : 0;
      if (count % 2 == 1) out.push_back(t);
    }
    return out;
  }

  void flip(FaceId f) {
    flip_face_in_place(mu_, p_, f);
    seq_.push_back(f);
  }

  // Flip f, first clearing the vertex that blocks it.
  void flip_unblocked(FaceId f, int i, int j) {
    for (int attempt = 0; attempt < 3; ++attempt) {
      if (flip_keeps_valid(mu_, p_, f)) {
        flip(f);
        return;
      }
      auto t = triangle_flippable(mu_, p_, f);
      if (!t.blocker || !p_.vertex(*t.blocker).interior) break;
      std::optional<FaceId> pick;
      for (FaceId g : unblock_candidates(mu_, p_, f, *t.blocker)) {
        if (touches_locked(g) || !flip_keeps_valid(mu_, p_, g)) continue;
        if (!pick || g < *pick) pick = g;
      }
      if (!pick) break;
      flip(*pick);
    }
    throw std::logic_error("face " + std::to_string(f) + " stays blocked at frontier (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
  }

  void fix(const std::vector<EdgeId>& targets, const std::vector<std::optional<FaceId>>& cands, int i, int j) {
    std::vector<EdgeId> bad;
    for (EdgeId t : targets)
      if (wrong(t)) bad.push_back(t);
    if (!bad.empty()) {
      std::vector<FaceId> pool;
      for (const auto& c : cands)
        if (c && !touches_locked(*c)) pool.push_back(*c);
      std::optional<std::vector<FaceId>> choice;
      for (std::size_t a = 0; a < pool.size() && !choice; ++a)
        if (toggled({pool[a]}, targets) == bad) choice = std::vector<FaceId>{pool[a]};
      for (std::size_t a = 0; a < pool.size() && !choice; ++a)
        for (std::size_t b = a + 1; b < pool.size() && !choice; ++b)
          if (toggled({pool[a], pool[b]}, targets) == bad) choice = std::vector<FaceId>{pool[a], pool[b]};
      if (!choice)
        throw std::logic_error("no face fixes the frontier at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      for (FaceId f : *choice) flip_unblocked(f, i, j);
      for (EdgeId t : targets)
        if (wrong(t))
          throw std::logic_error("frontier at (" + std::to_string(i) + ", " + std::to_string(j) + ") not fixed");
    }
    for (EdgeId t : targets) locked_[t] = true;
  }

  const CreasePattern& p_;
  Lattice lat_;
  MVAssignment mu_;
  MVAssignment goal_;
  std::vector<bool> locked_;
  FlipSequence seq_;
};

}  // namespace

VertexClass vertex_class(const MVAssignment& mu, const CreasePattern& p, VertexId v) {
  return maekawa_sum(mu, p, v) > 0 ? VertexClass::MountainVertex : VertexClass::ValleyVertex;
}

MVAssignment canonical_config(const CreasePattern& p) {
  require_triangle(p);
  MVAssignment mu(p.num_edges(), kValley);
  for (const auto& e : p.edges())
    if (e.cls == EdgeClass::Minus30) mu.set(e.id, kMountain);
  return mu;
}

bool blocks(const MVAssignment& mu, const CreasePattern& p, FaceId f, VertexId v) {
  if (!p.vertex(v).interior) return false;
  auto [a, b] = face_edges_at(p, f, v);
  int type = vertex_class(mu, p, v) == VertexClass::MountainVertex ? kMountain : kValley;
  return mu[a] == mu[b] && mu[a] == -type;
}

std::vector<FaceId> unblock_candidates(const MVAssignment& mu, const CreasePattern& p, FaceId f, VertexId v) {
  require_triangle(p);
  if (!blocks(mu, p, f, v)) throw TriangleError("vertex " + std::to_string(v) + " does not block face " + std::to_string(f));
  const auto& star = p.star(v);
  if (star.size() != 6) throw TriangleError("blocking vertex must have six faces");
  std::size_t k = 0;
  while (k < star.size() && star[k].face != f) ++k;
  if (k == star.size()) throw TriangleError("face is not incident to the vertex");
  return {star[(k + 2) % 6].face, star[(k + 3) % 6].face, star[(k + 4) % 6].face};
}

FlipSequence reconfigure_to_canonical(const MVAssignment& mu, const CreasePattern& p) {
  require_triangle(p);
  if (!is_locally_valid(mu, p)) throw TriangleError("assignment must be locally valid");
  return Sweep(mu, p).run();
}

FlipSequence reconfigure(const MVAssignment& a, const MVAssignment& b, const CreasePattern& p) {
  FlipSequence seq = reconfigure_to_canonical(a, p);
  FlipSequence back = reconfigure_to_canonical(b, p);
  seq.insert(seq.end(), back.rbegin(), back.rend());
  return seq;
}

FlipSequence exact_min_flips_triangle(const MVAssignment& a, const MVAssignment& b, const CreasePattern& p,
                                      std::size_t max_states) {
  require_triangle(p);
  return shortest_flip_sequence(p, a, b, max_states);
}

}  // namespace faceflip
