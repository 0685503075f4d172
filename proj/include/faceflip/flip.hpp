#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "faceflip/assignment.hpp"
#include "faceflip/pattern.hpp"

namespace faceflip {

/// Faces flipped one after another, left to right.
using FlipSequence = std::vector<FaceId>;

class FlipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by apply_sequence when an intermediate state is invalid.
class SequenceError : public std::runtime_error {
 public:
  SequenceError(std::size_t prefix_length, const std::string& what)
      : std::runtime_error(what), prefix_length_(prefix_length) {}
  /// Number of flips applied when the invalid state appeared.
  std::size_t prefix_length() const { return prefix_length_; }

 private:
  std::size_t prefix_length_;
};

/// mu with every crease bordering face f negated.
MVAssignment flip_face(const MVAssignment& mu, const CreasePattern& p, FaceId f);
void flip_face_in_place(MVAssignment& mu, const CreasePattern& p, FaceId f);

/// Whether flipping f keeps a locally valid mu locally valid. Only the
/// vertices of f are rechecked. Throws FlipError if mu itself is invalid.
bool is_flippable(const MVAssignment& mu, const CreasePattern& p, FaceId f);

/// Same test without the validity precondition check; for callers that
/// already know mu is valid.
bool flip_keeps_valid(const MVAssignment& mu, const CreasePattern& p, FaceId f);

struct TriangleFlippability {
  bool flippable = true;
  /// Lowest-id interior vertex of f whose two creases in f agree with each
  /// other and disagree with the vertex's own type.
  std::optional<VertexId> blocker;
};

/// Flippability of a triangle-lattice face by the mountain/valley vertex
/// criterion. Boundary vertices never block.
TriangleFlippability triangle_flippable(const MVAssignment& mu, const CreasePattern& p, FaceId f);

/// Applies seq left to right. With require_valid, every intermediate state
/// (and the result) must be locally valid, otherwise SequenceError reports
/// how many flips had been applied.
MVAssignment apply_sequence(const MVAssignment& mu, const CreasePattern& p, const FlipSequence& seq,
                            bool require_valid);

/// The two creases of face f incident to vertex v.
std::pair<EdgeId, EdgeId> face_edges_at(const CreasePattern& p, FaceId f, VertexId v);

}  // namespace faceflip
