#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "faceflip/assignment.hpp"
#include "faceflip/flip.hpp"
#include "faceflip/pattern.hpp"

namespace faceflip {

class MiuraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One color in {0,1,2} per parallelogram, row-major (face ids of the grid).
struct GridColoring {
  int m = 0;
  int n = 0;
  std::vector<int> colors;

  int at(int r, int c) const { return colors.at(static_cast<std::size_t>(r * n + c)); }
  friend bool operator==(const GridColoring&, const GridColoring&) = default;
};

struct HeightFunction {
  int m = 0;
  int n = 0;
  std::vector<int> values;
  int base_vertex = 0;
  int base_value = 0;
  friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

/// Walks the boustrophedon path from the top-left parallelogram (color 0),
/// adding mu of each crossed crease mod 3. Crossings point right in even
/// rows, left in odd rows, and down across every parallel line. Throws
/// MiuraError when a crease off the path disagrees (mu is not valid).
GridColoring mv_to_coloring(const MVAssignment& mu, const CreasePattern& p);

/// Inverse of mv_to_coloring. Outer boundary creases come out as valleys.
MVAssignment coloring_to_mv(const GridColoring& c, const CreasePattern& p);

/// Heights from face 0: +1 across an edge where the color goes up by one
/// mod 3, -1 where it goes down.
HeightFunction height_function(const GridColoring& c, int base_value = 0);

/// Even translation t minimizing sum |h1 - h2 - t|; the smallest |t| wins
/// ties, then the negative one.
int best_translation(const HeightFunction& h1, const HeightFunction& h2);

int min_flip_distance(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p);

/// Shortest flip sequence from mu1 to mu2 (equal on constrained creases),
/// every prefix locally valid.
FlipSequence min_flip_sequence(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p);

/// Zigzag lines alternately all mountain and all valley, with the parallel
/// creases that make every vertex valid.
MVAssignment classical_miura(const CreasePattern& p);

/// Rows of digits, one line per row of parallelograms.
std::string coloring_rows(const GridColoring& c);

}  // namespace faceflip
