#include "faceflip/flip_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>

#include "faceflip/validity.hpp"

namespace faceflip {

std::size_t StateKeyHash::operator()(const StateKey& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : k) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

StateKey encode(const MVAssignment& mu) {
  StateKey key((mu.size() + 63) / 64, 0);
  for (std::size_t e = 0; e < mu.size(); ++e)
    if (mu[static_cast<EdgeId>(e)] == kMountain) key[e / 64] |= std::uint64_t{1} << (e % 64);
  return key;
}

MVAssignment decode(const StateKey& key, std::size_t num_edges) {
  if (key.size() != (num_edges + 63) / 64) throw std::invalid_argument("state key has the wrong length");
  MVAssignment mu(num_edges, kValley);
  for (std::size_t e = 0; e < num_edges; ++e)
    if ((key[e / 64] >> (e % 64)) & 1U) mu.set(static_cast<EdgeId>(e), kMountain);
  return mu;
}

std::string to_hex(const StateKey& key, std::size_t num_edges) {
  static const char* digits = "0123456789abcdef";
  std::size_t n = std::max<std::size_t>(1, (num_edges + 3) / 4);
  std::string out;
  out.reserve(n);
  for (std::size_t d = n; d-- > 0;) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      std::size_t e = d * 4 + b;
      if (e < num_edges && ((key[e / 64] >> (e % 64)) & 1U)) nibble |= 1U << b;
    }
    out.push_back(digits[nibble]);
  }
  return out;
}

std::optional<std::uint64_t> ValidCount::full() const {
  if (projected == 0) return 0;
  if (free_edges >= 64) return std::nullopt;
  std::uint64_t limit = ~std::uint64_t{0} >> free_edges;
  if (projected > limit) return std::nullopt;
  return projected << free_edges;
}

namespace {

std::vector<EdgeId> constrained_edges(const CreasePattern& p) {
  std::vector<EdgeId> out;
  for (const auto& e : p.edges())
    if (e.constrained) out.push_back(e.id);
  return out;
}

std::vector<EdgeId> free_edges(const CreasePattern& p) {
  std::vector<EdgeId> out;
  for (const auto& e : p.edges())
    if (!e.constrained) out.push_back(e.id);
  return out;
}

// Backtracking over the constrained edges. Every vertex whose creases are
// all set is checked completely; partially set vertices must still be able
// to reach a Maekawa sum of +-2.
class Enumerator {
 public:
  Enumerator(const CreasePattern& p, std::size_t max_nodes, std::mt19937_64* rng = nullptr)
      : p_(p), order_(constrained_edges(p)), max_nodes_(max_nodes), rng_(rng) {
    degree_.assign(p.num_vertices(), 0);
    for (VertexId v : p.interior_vertices()) degree_[v] = static_cast<int>(p.star(v).size());
    sum_.assign(p.num_vertices(), 0);
    assigned_.assign(p.num_vertices(), 0);
  }

  std::vector<MVAssignment> run() {
    mu_ = MVAssignment(p_.num_edges(), kValley);
    recurse(0);
    return std::move(out_);
  }

  std::size_t visit(const std::function<void(const MVAssignment&)>& fn) {
    mu_ = MVAssignment(p_.num_edges(), kValley);
    visitor_ = &fn;
    recurse(0);
    return visited_;
  }

  // With an rng the value order at each edge is a coin flip and the search
  // stops at the first complete assignment.
  std::optional<MVAssignment> first() {
    mu_ = MVAssignment(p_.num_edges(), kValley);
    max_nodes_ = 1;
    stop_ = true;
    recurse(0);
    if (out_.empty()) return std::nullopt;
    return out_.front();
  }

 private:
  bool feasible(VertexId v) const {
    int r = degree_[v] - assigned_[v];
    int s = sum_[v];
    if (degree_[v] % 2 != 0) return false;
    if (r == 0) return check_vertex(mu_, p_, v).valid;
    return std::abs(2 - s) <= r || std::abs(-2 - s) <= r;
  }

  void recurse(std::size_t i) {
    if (i == order_.size()) {
      if (visitor_ != nullptr) {
        ++visited_;
        (*visitor_)(mu_);
        return;
      }
      out_.push_back(mu_);
      if (stop_) return;
      if (out_.size() > max_nodes_)
        throw CapExceeded(out_.size(), "more than " + std::to_string(max_nodes_) + " valid assignments");
      return;
    }
    const Edge& e = p_.edge(order_[i]);
    std::array<int, 2> values{kValley, kMountain};
    if (rng_ != nullptr && ((*rng_)() & 1U)) std::swap(values[0], values[1]);
    for (int value : values) {
      if (stop_ && !out_.empty()) break;
      mu_.set(e.id, value);
      bool ok = true;
      for (VertexId v : {e.v0, e.v1}) {
        if (!p_.vertex(v).interior) continue;
        sum_[v] += value;
        ++assigned_[v];
      }
      for (VertexId v : {e.v0, e.v1})
        if (p_.vertex(v).interior && !feasible(v)) ok = false;
      if (ok) recurse(i + 1);
      for (VertexId v : {e.v0, e.v1}) {
        if (!p_.vertex(v).interior) continue;
        sum_[v] -= value;
        --assigned_[v];
      }
    }
    mu_.set(e.id, kValley);
  }

  const CreasePattern& p_;
  std::vector<EdgeId> order_;
  std::size_t max_nodes_;
  std::mt19937_64* rng_ = nullptr;
  bool stop_ = false;
  const std::function<void(const MVAssignment&)>* visitor_ = nullptr;
  std::size_t visited_ = 0;
  std::vector<int> degree_;
  std::vector<int> sum_;
  std::vector<int> assigned_;
  MVAssignment mu_;
  std::vector<MVAssignment> out_;
};

void sort_by_encoding(std::vector<MVAssignment>& list) {
  std::vector<std::pair<StateKey, std::size_t>> keyed;
  keyed.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) keyed.emplace_back(encode(list[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<MVAssignment> sorted;
  sorted.reserve(list.size());
  for (const auto& [key, i] : keyed) sorted.push_back(std::move(list[i]));
  list = std::move(sorted);
}

}  // namespace

std::vector<MVAssignment> enumerate_valid(const CreasePattern& p, const OracleOptions& opts) {
  std::size_t enumerated = opts.projected ? constrained_edges(p).size() : p.num_edges();
  if (enumerated > opts.max_edges)
    throw CapExceeded(enumerated, std::to_string(enumerated) + " edges to enumerate exceeds the cap of " +
                                      std::to_string(opts.max_edges));
  auto list = Enumerator(p, opts.max_nodes).run();
  if (!opts.projected) {
    // free edges never affect validity, so expand every projected state
    auto free = free_edges(p);
    std::vector<MVAssignment> full;
    for (const auto& mu : list) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
        MVAssignment x = mu;
        for (std::size_t k = 0; k < free.size(); ++k)
          if ((bits >> k) & 1U) x.set(free[k], kMountain);
        full.push_back(std::move(x));
        if (full.size() > opts.max_nodes)
          throw CapExceeded(full.size(), "more than " + std::to_string(opts.max_nodes) + " valid assignments");
      }
    }
    list = std::move(full);
  }
  sort_by_encoding(list);
  return list;
}

std::size_t for_each_valid(const CreasePattern& p, const std::function<void(const MVAssignment&)>& fn) {
  return Enumerator(p, 0).visit(fn);
}

ValidCount count_valid(const CreasePattern& p, const OracleOptions& opts) {
  OracleOptions projected = opts;
  projected.projected = true;
  ValidCount c;
  c.projected = enumerate_valid(p, projected).size();
  c.free_edges = free_edges(p).size();
  return c;
}

std::optional<MVAssignment> first_valid(const CreasePattern& p) { return Enumerator(p, 1).first(); }

MVAssignment random_valid(const CreasePattern& p, std::mt19937_64& rng) {
  auto mu = Enumerator(p, 1, &rng).first();
  if (!mu) throw std::runtime_error("pattern has no locally valid assignment");
  for (const auto& e : p.edges())
    if (!e.constrained && (rng() & 1U)) mu->set(e.id, kMountain);
  return *mu;
}

std::vector<MVAssignment> enumerate_valid_naive(const CreasePattern& p, bool projected) {
  std::vector<EdgeId> edges;
  if (projected) {
    edges = constrained_edges(p);
  } else {
    for (const auto& e : p.edges()) edges.push_back(e.id);
  }
  if (edges.size() > 24) throw CapExceeded(edges.size(), "naive enumeration is limited to 24 edges");
  std::vector<MVAssignment> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges.size()); ++bits) {
    MVAssignment mu(p.num_edges(), kValley);
    for (std::size_t k = 0; k < edges.size(); ++k)
      if ((bits >> k) & 1U) mu.set(edges[k], kMountain);
    if (is_locally_valid(mu, p)) out.push_back(std::move(mu));
  }
  sort_by_encoding(out);
  return out;
}

std::size_t FlipGraph::num_edges() const {
  std::size_t twice = 0;
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    std::set<int> distinct;
    for (const auto& [j, f] : adjacency[i]) distinct.insert(j);
    twice += distinct.size();
  }
  return twice / 2;
}

std::optional<int> FlipGraph::find(const MVAssignment& mu, const CreasePattern& p) const {
  if (mu.size() != p.num_edges()) return std::nullopt;
  auto it = index.find(encode(projected ? normalize_free_edges(mu, p) : mu));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

FlipGraph build_flip_graph(const CreasePattern& p, const OracleOptions& opts) {
  FlipGraph g;
  g.projected = opts.projected;
  g.nodes = enumerate_valid(p, opts);
  g.keys.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    g.keys.push_back(encode(g.nodes[i]));
    g.index.emplace(g.keys.back(), static_cast<int>(i));
  }
  g.adjacency.assign(g.nodes.size(), {});
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& face : p.faces()) {
      if (!flip_keeps_valid(g.nodes[i], p, face.id)) continue;
      MVAssignment next = flip_face(g.nodes[i], p, face.id);
      if (g.projected) next = normalize_free_edges(next, p);
      auto it = g.index.find(encode(next));
      if (it == g.index.end()) throw std::logic_error("flip produced a state outside the enumeration");
      if (it->second == static_cast<int>(i)) continue;
      g.adjacency[i].emplace_back(it->second, face.id);
    }
  }
  return g;
}

std::vector<int> bfs_distances(const FlipGraph& g, int source) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::deque<int> queue{source};
  dist.at(static_cast<std::size_t>(source)) = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& [w, f] : g.adjacency[u]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::optional<int> bfs_distance(const FlipGraph& g, const CreasePattern& p, const MVAssignment& a,
                                const MVAssignment& b) {
  auto ia = g.find(a, p);
  auto ib = g.find(b, p);
  if (!ia || !ib) throw std::invalid_argument("assignment is not a node of the flip graph");
  int d = bfs_distances(g, *ia)[*ib];
  if (d < 0) return std::nullopt;
  return d;
}

ComponentSummary components_and_diameter(const FlipGraph& g) {
  ComponentSummary s;
  s.component_of.assign(g.num_nodes(), -1);
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    if (s.component_of[i] >= 0) continue;
    int c = static_cast<int>(s.count++);
    auto dist = bfs_distances(g, static_cast<int>(i));
    std::vector<int> members;
    for (std::size_t j = 0; j < dist.size(); ++j)
      if (dist[j] >= 0) {
        s.component_of[j] = c;
        members.push_back(static_cast<int>(j));
      }
    int diameter = 0;
    for (int m : members) {
      auto dm = bfs_distances(g, m);
      for (int x : members) diameter = std::max(diameter, dm[x]);
    }
    s.diameters.push_back(diameter);
    s.sizes.push_back(members.size());
  }
  return s;
}

FlipSequence shortest_flip_sequence(const CreasePattern& p, const MVAssignment& a, const MVAssignment& b,
                                    std::size_t max_states) {
  if (!is_locally_valid(a, p) || !is_locally_valid(b, p))
    throw std::invalid_argument("both assignments must be locally valid");
  MVAssignment start = normalize_free_edges(a, p);
  MVAssignment goal = normalize_free_edges(b, p);
  struct Visit {
    StateKey parent;
    FaceId face;
  };
  std::unordered_map<StateKey, Visit, StateKeyHash> seen;
  StateKey start_key = encode(start);
  StateKey goal_key = encode(goal);
  seen.emplace(start_key, Visit{{}, -1});
  std::deque<StateKey> queue{start_key};
  bool found = start_key == goal_key;
  while (!queue.empty() && !found) {
    StateKey key = queue.front();
    queue.pop_front();
    MVAssignment mu = decode(key, p.num_edges());
    for (const auto& face : p.faces()) {
      if (!flip_keeps_valid(mu, p, face.id)) continue;
      StateKey next = encode(normalize_free_edges(flip_face(mu, p, face.id), p));
      if (seen.count(next)) continue;
      seen.emplace(next, Visit{key, face.id});
      if (seen.size() > max_states)
        throw BudgetExceeded(seen.size(), "search explored more than " + std::to_string(max_states) + " states");
      if (next == goal_key) {
        found = true;
        break;
      }
      queue.push_back(std::move(next));
    }
  }
  if (!found) throw std::runtime_error("target is not reachable by valid face flips");
  FlipSequence seq;
  for (StateKey k = goal_key; k != start_key;) {
    const Visit& v = seen.at(k);
    seq.push_back(v.face);
    k = v.parent;
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace faceflip
