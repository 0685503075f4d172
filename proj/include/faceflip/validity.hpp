#pragma once

#include <span>
#include <string>
#include <vector>

#include "faceflip/assignment.hpp"
#include "faceflip/pattern.hpp"

namespace faceflip {

enum class Rule { None, Maekawa, BigLittleBig, GenMaekawa, MiuraFarthestEdge };

std::string rule_name(Rule r);

struct VertexVerdict {
  VertexId vertex = 0;
  bool valid = true;
  Rule violated_rule = Rule::None;
  int maekawa_sum = 0;
  int mountains = 0;
  int valleys = 0;
};

class ValidityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Kawasaki's condition on a cyclic list of sector angles: an even number of
/// sectors whose alternating sum vanishes. Throws unless the angles are
/// positive and sum to 360 degrees.
bool kawasaki_check(std::span<const Degrees> angles);

/// Sum of mu over the creases at interior vertex v (passes Maekawa iff +-2).
int maekawa_sum(const MVAssignment& mu, const CreasePattern& p, VertexId v);

/// Creases around every strictly locally minimal sector must disagree.
bool big_little_big_check(const MVAssignment& mu, const CreasePattern& p, VertexId v);

/// Generalized Maekawa condition on runs of equal, locally minimal sectors.
/// Necessary for flat-foldability only; never used as the deciding rule.
bool gen_maekawa_check(const MVAssignment& mu, const CreasePattern& p, VertexId v);

/// Miura vertex rule: three of one kind, and if both zigzag creases are in
/// the majority then the third majority crease is the parallel crease
/// farthest (by angle) from them.
bool miura_vertex_check(const MVAssignment& mu, const CreasePattern& p, VertexId v);

/// Family-specific verdict for one interior vertex. Reports the first
/// violated rule in the order Maekawa, BigLittleBig, MiuraFarthestEdge.
VertexVerdict check_vertex(const MVAssignment& mu, const CreasePattern& p, VertexId v);

/// Verdicts for all interior vertices, ordered by vertex id.
std::vector<VertexVerdict> vertex_verdicts(const MVAssignment& mu, const CreasePattern& p);

bool is_locally_valid(const MVAssignment& mu, const CreasePattern& p);

}  // namespace faceflip
