#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "faceflip/assignment.hpp"
#include "faceflip/flip.hpp"
#include "faceflip/pattern.hpp"

namespace faceflip {

/// Bit-packed assignment: bit e is set iff edge e is a mountain.
using StateKey = std::vector<std::uint64_t>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept;
};

StateKey encode(const MVAssignment& mu);
MVAssignment decode(const StateKey& key, std::size_t num_edges);
/// Hex digits of the key, most significant edge first.
std::string to_hex(const StateKey& key, std::size_t num_edges);

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t count, const std::string& what) : std::runtime_error(what), count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

struct OracleOptions {
  /// Enumerate only constrained edges; free edges are fixed to valley.
  bool projected = true;
  std::size_t max_edges = 40;
  std::size_t max_nodes = 1'000'000;
};

struct ValidCount {
  std::uint64_t projected = 0;   // distinct restrictions to constrained edges
  std::size_t free_edges = 0;    // each multiplies the full count by two
  /// projected * 2^free_edges; nullopt if that overflows 64 bits.
  std::optional<std::uint64_t> full() const;
};

/// All locally valid assignments, sorted by encoding. Backtracks over edges
/// in id order, pruning a vertex as soon as its Maekawa sum can no longer
/// reach +-2 and checking its full rule once all its creases are set.
std::vector<MVAssignment> enumerate_valid(const CreasePattern& p, const OracleOptions& opts = {});

/// Streams every projected valid assignment (free edges valley) in search
/// order without storing them or applying any cap. Returns the count.
std::size_t for_each_valid(const CreasePattern& p, const std::function<void(const MVAssignment&)>& fn);

ValidCount count_valid(const CreasePattern& p, const OracleOptions& opts = {});

/// First valid assignment in search order (valleys before mountains).
std::optional<MVAssignment> first_valid(const CreasePattern& p);

/// A locally valid assignment found by the same backtracking with a random
/// value order (free edges are random too). Reproducible for a given seed
/// but not uniformly distributed.
MVAssignment random_valid(const CreasePattern& p, std::mt19937_64& rng);

/// Naive 2^E filter; test oracle for enumerate_valid on small patterns.
std::vector<MVAssignment> enumerate_valid_naive(const CreasePattern& p, bool projected);

struct FlipGraph {
  bool projected = true;
  std::vector<MVAssignment> nodes;  // sorted by encoding
  std::vector<StateKey> keys;
  /// (neighbour node, flipped face) pairs, ascending by face.
  std::vector<std::vector<std::pair<int, FaceId>>> adjacency;
  std::unordered_map<StateKey, int, StateKeyHash> index;

  std::size_t num_nodes() const { return nodes.size(); }
  std::size_t num_edges() const;
  /// Node of an assignment (free edges are normalized in projected mode).
  std::optional<int> find(const MVAssignment& mu, const CreasePattern& p) const;
};

FlipGraph build_flip_graph(const CreasePattern& p, const OracleOptions& opts = {});

/// Shortest number of flips, or nullopt when the nodes are disconnected.
/// Throws std::invalid_argument for assignments that are not nodes.
std::optional<int> bfs_distance(const FlipGraph& g, const CreasePattern& p, const MVAssignment& a,
                                const MVAssignment& b);

/// Distances from one node to every node (-1 = unreachable).
std::vector<int> bfs_distances(const FlipGraph& g, int source);

struct ComponentSummary {
  std::size_t count = 0;
  std::vector<int> component_of;     // per node
  std::vector<int> diameters;        // per component, in order of first node
  std::vector<std::size_t> sizes;
};

ComponentSummary components_and_diameter(const FlipGraph& g);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t explored, const std::string& what)
      : std::runtime_error(what), explored_(explored) {}
  std::size_t explored() const { return explored_; }

 private:
  std::size_t explored_;
};

/// Shortest flip sequence from a to b (equality on constrained edges) by
/// breadth-first search over valid states, exploring at most max_states.
FlipSequence shortest_flip_sequence(const CreasePattern& p, const MVAssignment& a, const MVAssignment& b,
                                    std::size_t max_states = 1'000'000);

}  // namespace faceflip
