#include "faceflip/miura.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>

#include "faceflip/validity.hpp"

namespace faceflip {

namespace {

void require_miura(const CreasePattern& p) {
  if (p.family() != Family::Miura) throw MiuraError("pattern is not a Miura-ori");
}

int mod3(int x) { return ((x % 3) + 3) % 3; }

struct Crossing {
  FaceId from;
  FaceId to;
  EdgeId crease;
};

// Every dual edge of the grid, directed the way the path crosses its line.
std::vector<Crossing> crossings(const CreasePattern& p) {
  const int m = p.params().m, n = p.params().n;
  std::vector<Crossing> out;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c + 1 < n; ++c) {
      EdgeId e = *p.find_edge(p.grid_vertex(r, c + 1), p.grid_vertex(r + 1, c + 1));
      FaceId left = p.grid_face(r, c), right = p.grid_face(r, c + 1);
      if (r % 2 == 0)
        out.push_back({left, right, e});
      else
        out.push_back({right, left, e});
    }
  for (int r = 0; r + 1 < m; ++r)
    for (int c = 0; c < n; ++c) {
      EdgeId e = *p.find_edge(p.grid_vertex(r + 1, c), p.grid_vertex(r + 1, c + 1));
      out.push_back({p.grid_face(r, c), p.grid_face(r + 1, c), e});
    }
  return out;
}

std::vector<std::vector<FaceId>> grid_neighbours(int m, int n) {
  std::vector<std::vector<FaceId>> nb(static_cast<std::size_t>(m * n));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      auto& list = nb[r * n + c];
      if (r > 0) list.push_back((r - 1) * n + c);
      if (c > 0) list.push_back(r * n + c - 1);
      if (c + 1 < n) list.push_back(r * n + c + 1);
      if (r + 1 < m) list.push_back((r + 1) * n + c);
    }
  return nb;
}

}  // namespace

GridColoring mv_to_coloring(const MVAssignment& mu, const CreasePattern& p) {
  require_miura(p);
  if (mu.size() != p.num_edges()) throw MiuraError("assignment size does not match the pattern");
  const int m = p.params().m, n = p.params().n;
  GridColoring col{m, n, std::vector<int>(static_cast<std::size_t>(m * n), -1)};
  auto all = crossings(p);
  // path: along each row, then down at the row end
  col.colors[0] = 0;
  for (int r = 0; r < m; ++r) {
    for (int k = 1; k < n; ++k) {
      int c = r % 2 == 0 ? k : n - 1 - k;
      int prev = r % 2 == 0 ? c - 1 : c + 1;
      EdgeId e = *p.find_edge(p.grid_vertex(r, std::max(c, prev)), p.grid_vertex(r + 1, std::max(c, prev)));
      col.colors[r * n + c] = mod3(col.colors[r * n + prev] + mu[e]);
    }
    if (r + 1 < m) {
      int c = r % 2 == 0 ? n - 1 : 0;
      EdgeId e = *p.find_edge(p.grid_vertex(r + 1, c), p.grid_vertex(r + 1, c + 1));
      col.colors[(r + 1) * n + c] = mod3(col.colors[r * n + c] + mu[e]);
    }
  }
  for (const auto& x : all)
    if (mod3(col.colors[x.to] - col.colors[x.from]) != mod3(mu[x.crease]))
      throw MiuraError("assignment is not locally valid: crease " + std::to_string(x.crease) +
                       " breaks the coloring");
  return col;
}

MVAssignment coloring_to_mv(const GridColoring& c, const CreasePattern& p) {
  require_miura(p);
  if (c.m != p.params().m || c.n != p.params().n || c.colors.size() != p.num_faces())
    throw MiuraError("coloring dimensions do not match the pattern");
  for (int x : c.colors)
    if (x < 0 || x > 2) throw MiuraError("colors must be 0, 1 or 2");
  if (c.colors[0] != 0) throw MiuraError("the start parallelogram must have color 0");
  MVAssignment mu(p.num_edges(), kValley);
  for (const auto& x : crossings(p)) {
    int d = mod3(c.colors[x.to] - c.colors[x.from]);
    if (d == 0) throw MiuraError("coloring is not proper across crease " + std::to_string(x.crease));
    mu.set(x.crease, d == 1 ? kMountain : kValley);
  }
  return mu;
}

HeightFunction height_function(const GridColoring& c, int base_value) {
  if (c.colors.empty()) throw MiuraError("empty coloring");
  if (mod3(base_value) != mod3(c.colors[0])) throw MiuraError("base value must match the base color mod 3");
  HeightFunction h{c.m, c.n, std::vector<int>(c.colors.size(), std::numeric_limits<int>::min()), 0, base_value};
  auto nb = grid_neighbours(c.m, c.n);
  h.values[0] = base_value;
  std::deque<FaceId> queue{0};
  while (!queue.empty()) {
    FaceId a = queue.front();
    queue.pop_front();
    for (FaceId b : nb[a]) {
      int d = mod3(c.colors[b] - c.colors[a]);
      if (d == 0) throw MiuraError("coloring is not proper");
      int want = h.values[a] + (d == 1 ? 1 : -1);
      if (h.values[b] == std::numeric_limits<int>::min()) {
        h.values[b] = want;
        queue.push_back(b);
      } else if (h.values[b] != want) {
        throw MiuraError("coloring has no consistent height function");
      }
    }
  }
  return h;
}

int best_translation(const HeightFunction& h1, const HeightFunction& h2) {
  if (h1.values.size() != h2.values.size()) throw MiuraError("height functions have different sizes");
  int spread = 0;
  for (std::size_t i = 0; i < h1.values.size(); ++i) spread = std::max(spread, std::abs(h1.values[i] - h2.values[i]));
  auto cost = [&](int t) {
    long total = 0;
    for (std::size_t i = 0; i < h1.values.size(); ++i) total += std::abs(h1.values[i] - h2.values[i] - t);
    return total;
  };
  int limit = spread + 2;
  int best = 0;
  long best_cost = cost(0);
  for (int t = 2; t <= limit; t += 2)
    for (int cand : {-t, t}) {
      long c = cost(cand);
      if (c < best_cost) {
        best = cand;
        best_cost = c;
      }
    }
  return best;
}

int min_flip_distance(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p) {
  auto h1 = height_function(mv_to_coloring(mu1, p));
  auto h2 = height_function(mv_to_coloring(mu2, p));
  int t = best_translation(h1, h2);
  long total = 0;
  for (std::size_t i = 0; i < h1.values.size(); ++i) total += std::abs(h1.values[i] - h2.values[i] - t);
  return static_cast<int>(total / 2);
}

FlipSequence min_flip_sequence(const MVAssignment& mu1, const MVAssignment& mu2, const CreasePattern& p) {
  auto h = height_function(mv_to_coloring(mu1, p)).values;
  auto h2 = height_function(mv_to_coloring(mu2, p));
  int t = best_translation(HeightFunction{h2.m, h2.n, h, 0, 0}, h2);
  std::vector<int> goal(h2.values.size());
  for (std::size_t i = 0; i < goal.size(); ++i) goal[i] = h2.values[i] + t;
  auto nb = grid_neighbours(h2.m, h2.n);
  FlipSequence seq;
  for (;;) {
    bool done = true;
    int moved = -1;
    for (std::size_t v = 0; v < h.size(); ++v) {
      if (h[v] == goal[v]) continue;
      done = false;
      int target = h[v] + (goal[v] > h[v] ? 2 : -2);
      bool ok = true;
      for (FaceId w : nb[v]) ok = ok && std::abs(target - h[w]) == 1;
      if (ok) {
        h[v] = target;
        moved = static_cast<int>(v);
        break;
      }
    }
    if (done) break;
    if (moved < 0) throw std::logic_error("no movable vertex while heights still differ");
    seq.push_back(moved);
  }
  return seq;
}

MVAssignment classical_miura(const CreasePattern& p) {
  require_miura(p);
  const int m = p.params().m, n = p.params().n;
  MVAssignment mu(p.num_edges(), kValley);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      mu.set(*p.find_edge(p.grid_vertex(r, i), p.grid_vertex(r + 1, i)), i % 2 == 0 ? kMountain : kValley);
  // each parallel line alternates; pick the phase its vertices accept
  for (int j = 0; j <= m; ++j) {
    bool found = false;
    for (int phase : {kMountain, kValley}) {
      for (int c = 0; c < n; ++c)
        mu.set(*p.find_edge(p.grid_vertex(j, c), p.grid_vertex(j, c + 1)), c % 2 == 0 ? phase : -phase);
      bool ok = true;
      for (int i = 1; i < n && j > 0 && j < m; ++i) ok = ok && check_vertex(mu, p, p.grid_vertex(j, i)).valid;
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("parallel line admits no classical phase");
  }
  return mu;
}

std::string coloring_rows(const GridColoring& c) {
  std::string out;
  for (int r = 0; r < c.m; ++r) {
    for (int k = 0; k < c.n; ++k) out.push_back(static_cast<char>('0' + c.at(r, k)));
    out.push_back('\n');
  }
  return out;
}

}  // namespace faceflip
