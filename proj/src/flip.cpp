#include "faceflip/flip.hpp"
#include <algorithm>

#include "faceflip/validity.hpp"

namespace faceflip {

void flip_face_in_place(MVAssignment& mu, const CreasePattern& p, FaceId f) {
  for (EdgeId e : p.face(f).edges) mu.negate(e);
}

MVAssignment flip_face(const MVAssignment& mu, const CreasePattern& p, FaceId f) {
  MVAssignment out = mu;
  flip_face_in_place(out, p, f);
  return out;
}

bool flip_keeps_valid(const MVAssignment& mu, const CreasePattern& p, FaceId f) {
  const MVAssignment flipped = flip_face(mu, p, f);
  for (VertexId v : p.face(f).cycle) {
    if (p.vertex(v).interior && !check_vertex(flipped, p, v).valid) return false;
  }
  return true;
}

bool is_flippable(const MVAssignment& mu, const CreasePattern& p, FaceId f) {
  p.face(f);
  if (!is_locally_valid(mu, p)) throw FlipError("flippability is defined only on valid assignments");
  const bool local = flip_keeps_valid(mu, p, f);
#ifndef NDEBUG
  if (local != is_locally_valid(flip_face(mu, p, f), p))
    throw std::logic_error("local flip recheck disagrees with whole-pattern check");
#endif
  return local;
}

std::pair<EdgeId, EdgeId> face_edges_at(const CreasePattern& p, FaceId f, VertexId v) {
  const Face& face = p.face(f);
  const std::size_t k = face.cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (face.cycle[i] == v) return {face.edges[(i + k - 1) % k], face.edges[i]};
  }
  throw FlipError("vertex " + std::to_string(v) + " is not on face " + std::to_string(f));
}

TriangleFlippability triangle_flippable(const MVAssignment& mu, const CreasePattern& p, FaceId f) {
  if (p.family() != Family::TriangleRegion) throw FlipError("triangle_flippable needs a triangle region");
  p.face(f);
  if (!is_locally_valid(mu, p)) throw FlipError("flippability is defined only on valid assignments");
  TriangleFlippability out;
  std::vector<VertexId> corners = p.face(f).cycle;
  std::sort(corners.begin(), corners.end());
  for (VertexId v : corners) {
    if (!p.vertex(v).interior) continue;
    auto [a, b] = face_edges_at(p, f, v);
    const int vertex_type = maekawa_sum(mu, p, v) > 0 ? kMountain : kValley;
    if (mu[a] == mu[b] && mu[a] == -vertex_type) {
      out.flippable = false;
      out.blocker = v;
      break;
    }
  }
  return out;
}

MVAssignment apply_sequence(const MVAssignment& mu, const CreasePattern& p, const FlipSequence& seq,
                            bool require_valid) {
  for (FaceId f : seq) p.face(f);
  MVAssignment cur = mu;
  if (require_valid && !is_locally_valid(cur, p))
    throw SequenceError(0, "starting assignment is not locally valid");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    flip_face_in_place(cur, p, seq[i]);
    if (require_valid && !is_locally_valid(cur, p))
      throw SequenceError(i + 1, "state after " + std::to_string(i + 1) + " flips is not locally valid");
  }
  return cur;
}

}  // namespace faceflip
