#include "faceflip/assignment.hpp"

#include <stdexcept>

namespace faceflip {

MVAssignment::MVAssignment(const std::vector<int>& values) {
  values_.reserve(values.size());
  for (int v : values) {
    if (v != kMountain && v != kValley) throw std::invalid_argument("MV values must be +1 or -1");
    values_.push_back(static_cast<std::int8_t>(v));
  }
}

MVAssignment MVAssignment::operator-() const {
  MVAssignment out = *this;
  for (auto& v : out.values_) v = static_cast<std::int8_t>(-v);
  return out;
}

bool equal_on_constrained(const MVAssignment& a, const MVAssignment& b, const CreasePattern& p) {
  for (const auto& e : p.edges())
    if (e.constrained && a[e.id] != b[e.id]) return false;
  return true;
}

MVAssignment normalize_free_edges(const MVAssignment& mu, const CreasePattern& p) {
  MVAssignment out = mu;
  for (const auto& e : p.edges())
    if (!e.constrained) out.set(e.id, kValley);
  return out;
}

}  // namespace faceflip
