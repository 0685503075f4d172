#pragma once

#include <cstdint>
#include <vector>

#include "faceflip/pattern.hpp"

namespace faceflip {

constexpr int kMountain = 1;
constexpr int kValley = -1;

/// Dense mountain (+1) / valley (-1) labels indexed by edge id.
class MVAssignment {
 public:
  MVAssignment() = default;
  explicit MVAssignment(std::size_t num_edges, int fill = kValley)
      : values_(num_edges, static_cast<std::int8_t>(fill)) {}
  explicit MVAssignment(const std::vector<int>& values);

  static MVAssignment all(const CreasePattern& p, int value) {
    return MVAssignment(p.num_edges(), value);
  }

  int operator[](EdgeId e) const { return values_[e]; }
  void set(EdgeId e, int value) { values_[e] = static_cast<std::int8_t>(value); }
  void negate(EdgeId e) { values_[e] = static_cast<std::int8_t>(-values_[e]); }
  std::size_t size() const { return values_.size(); }

  MVAssignment operator-() const;

  friend bool operator==(const MVAssignment&, const MVAssignment&) = default;

 private:
  std::vector<std::int8_t> values_;
};

/// Equality restricted to constrained edges (edges with an interior endpoint).
bool equal_on_constrained(const MVAssignment& a, const MVAssignment& b, const CreasePattern& p);

/// Copy of mu with every free (unconstrained) edge set to valley.
MVAssignment normalize_free_edges(const MVAssignment& mu, const CreasePattern& p);

}  // namespace faceflip
