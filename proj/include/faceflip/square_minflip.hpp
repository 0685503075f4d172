#pragma once

#include <stdexcept>
#include <vector>

#include "faceflip/assignment.hpp"
#include "faceflip/flip.hpp"
#include "faceflip/pattern.hpp"

namespace faceflip {

class MinFlipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by two_color when the weights admit no consistent coloring.
class OddCycle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WeightedDual {
  DualGraph dual;
  /// |mu1(e) + mu2(e)| per dual edge: 2 where the assignments agree, 0 where
  /// they differ.
  std::vector<int> weights;
};

WeightedDual weighted_dual(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p);

/// Number of creases at v on which the assignments agree. Two valid grid
/// assignments agree on 0, 2 or 4; anything else throws std::logic_error.
int parity_lemma_check(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p, VertexId v);

enum class DualColor { Purple, Teal };

/// Coloring of the dual nodes after subdividing every weight-2 edge: weight-0
/// neighbours get different colors, weight-2 neighbours the same one. Face 0
/// of every connected piece is purple.
std::vector<DualColor> two_color(const WeightedDual& wd);

struct ColorClasses {
  std::vector<FaceId> purple;
  std::vector<FaceId> teal;
};

ColorClasses color_classes(const std::vector<DualColor>& colors);

/// Fewest face flips taking mu1 to mu2 on a square grid, in ascending face
/// order. Ties go to the class holding face 0. Only creases between two
/// faces are matched; outer boundary creases are free and may end up either
/// way.
FlipSequence min_flip_set(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p);

/// Square twists: the flippable faces are edge-disjoint, so the only way to
/// change an assignment is to flip the parallelograms whose constrained
/// creases all differ. Throws MinFlipError when the difference is not of
/// that form.
FlipSequence twist_flip_set(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p);

}  // namespace faceflip
