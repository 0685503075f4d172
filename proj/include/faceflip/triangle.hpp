#pragma once

#include <stdexcept>
#include <vector>

#include "faceflip/assignment.hpp"
#include "faceflip/flip.hpp"
#include "faceflip/pattern.hpp"

namespace faceflip {

class TriangleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class VertexClass { MountainVertex, ValleyVertex };

/// Four mountains and two valleys make a mountain vertex, and vice versa.
VertexClass vertex_class(const MVAssignment& mu, const CreasePattern& p, VertexId v);

/// Mountains on every -30 degree crease, valleys elsewhere.
MVAssignment canonical_config(const CreasePattern& p);

/// Whether v alone prevents f from flipping: f's two creases at v agree and
/// have the opposite kind to v.
bool blocks(const MVAssignment& mu, const CreasePattern& p, FaceId f, VertexId v);

/// The three faces around v that share no crease with f, counterclockwise
/// from f; the middle one is opposite f. Throws TriangleError unless v
/// blocks f.
std::vector<FaceId> unblock_candidates(const MVAssignment& mu, const CreasePattern& p, FaceId f, VertexId v);

/// Column sweep to the canonical configuration: the diagonal creases at each
/// vertex of a column top to bottom, then the vertical creases of the next
/// line top to bottom, never touching creases already fixed. Every prefix is
/// valid and the result equals the canonical configuration on constrained
/// creases.
FlipSequence reconfigure_to_canonical(const MVAssignment& mu, const CreasePattern& p);

/// A to canonical, then back along the reversed sequence of B.
FlipSequence reconfigure(const MVAssignment& a, const MVAssignment& b, const CreasePattern& p);

/// Shortest sequence by breadth-first search (exponential; small regions).
FlipSequence exact_min_flips_triangle(const MVAssignment& a, const MVAssignment& b, const CreasePattern& p,
                                      std::size_t max_states = 1'000'000);

}  // namespace faceflip
