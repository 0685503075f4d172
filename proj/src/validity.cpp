#include "faceflip/validity.hpp"

#include <algorithm>

namespace faceflip {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::None: return "None";
    case Rule::Maekawa: return "Maekawa";
    case Rule::BigLittleBig: return "BigLittleBig";
    case Rule::GenMaekawa: return "GenMaekawa";
    case Rule::MiuraFarthestEdge: return "MiuraFarthestEdge";
  }
  return "?";
}

bool kawasaki_check(std::span<const Degrees> angles) {
  Degrees total(0);
  for (const auto& a : angles) {
    if (a <= Degrees(0)) throw ValidityError("sector angles must be positive");
    total += a;
  }
  if (total != Degrees(360)) throw ValidityError("sector angles must sum to 360 degrees");
  if (angles.size() % 2 != 0) return false;
  Degrees alternating(0);
  for (std::size_t i = 0; i < angles.size(); ++i) alternating += (i % 2 == 0) ? angles[i] : -angles[i];
  return alternating == Degrees(0);
}

int maekawa_sum(const MVAssignment& mu, const CreasePattern& p, VertexId v) {
  int sum = 0;
  for (const auto& s : p.star(v)) sum += mu[s.edge];
  return sum;
}

bool big_little_big_check(const MVAssignment& mu, const CreasePattern& p, VertexId v) {
  const Star& star = p.star(v);
  const std::size_t k = star.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Degrees& here = star[i].sector;
    const Degrees& before = star[(i + k - 1) % k].sector;
    const Degrees& after = star[(i + 1) % k].sector;
    if (here < before && here < after && mu[star[i].edge] == mu[star[(i + 1) % k].edge])
      return false;
  }
  return true;
}

bool gen_maekawa_check(const MVAssignment& mu, const CreasePattern& p, VertexId v) {
  const Star& star = p.star(v);
  const std::size_t k = star.size();
  // Start scanning just after a change in angle so that runs do not wrap.
  std::size_t start = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (star[i].sector != star[(i + k - 1) % k].sector) {
      start = i;
      break;
    }
  }
  if (start == k) return true;  // all sectors equal: no local minimum run
  std::size_t i = 0;
  while (i < k) {
    const std::size_t s = (start + i) % k;
    std::size_t len = 1;
    while (len < k && star[(s + len) % k].sector == star[s].sector) ++len;
    const Degrees& run = star[s].sector;
    const Degrees& before = star[(s + k - 1) % k].sector;
    const Degrees& after = star[(s + len) % k].sector;
    if (run < before && run < after) {
      // Sectors s .. s+len-1 are bounded by creases s .. s+len.
      int sum = 0;
      for (std::size_t j = 0; j <= len; ++j) sum += mu[star[(s + j) % k].edge];
      const bool even_k = (len - 1) % 2 == 0;
      if (even_k ? sum != 0 : std::abs(sum) != 1) return false;
    }
    i += len;
  }
  return true;
}

namespace {

bool miura_farthest_rule(const MVAssignment& mu, const CreasePattern& p, VertexId v) {
  const Star& star = p.star(v);
  std::vector<std::size_t> zig, par;
  for (std::size_t i = 0; i < star.size(); ++i)
    (p.is_zigzag(star[i].edge) ? zig : par).push_back(i);
  if (zig.size() != 2 || par.size() != 2) throw ValidityError("malformed Miura vertex star");
  const int sum = maekawa_sum(mu, p, v);
  const int majority = sum > 0 ? kMountain : kValley;
  if (mu[star[zig[0]].edge] != majority || mu[star[zig[1]].edge] != majority) return true;
  auto ccw = [&](std::size_t from, std::size_t to) {
    Degrees d(0);
    for (std::size_t i = from; i != to; i = (i + 1) % star.size()) d += star[i].sector;
    return d;
  };
  auto distance = [&](std::size_t a, std::size_t b) {
    Degrees d = ccw(a, b);
    return std::min(d, Degrees(360) - d);
  };
  auto spread = [&](std::size_t q) { return distance(q, zig[0]) + distance(q, zig[1]); };
  const std::size_t far = spread(par[0]) > spread(par[1]) ? par[0] : par[1];
  return mu[star[far].edge] == majority;
}

}  // namespace

bool miura_vertex_check(const MVAssignment& mu, const CreasePattern& p, VertexId v) {
  if (p.family() != Family::Miura) throw ValidityError("miura_vertex_check needs a Miura pattern");
  const int sum = maekawa_sum(mu, p, v);
  if (sum != 2 && sum != -2) return false;
  return miura_farthest_rule(mu, p, v);
}

VertexVerdict check_vertex(const MVAssignment& mu, const CreasePattern& p, VertexId v) {
  VertexVerdict out;
  out.vertex = v;
  for (const auto& s : p.star(v)) (mu[s.edge] == kMountain ? out.mountains : out.valleys)++;
  out.maekawa_sum = out.mountains - out.valleys;
  auto fail = [&](Rule r) {
    out.valid = false;
    out.violated_rule = r;
    return out;
  };
  if (out.maekawa_sum != 2 && out.maekawa_sum != -2) return fail(Rule::Maekawa);
  switch (p.family()) {
    case Family::SquareGrid:
    case Family::TriangleRegion:
      break;
    case Family::HuffmanGrid:
    case Family::SquareTwist:
      if (!big_little_big_check(mu, p, v)) return fail(Rule::BigLittleBig);
      break;
    case Family::Miura:
      if (!miura_farthest_rule(mu, p, v)) return fail(Rule::MiuraFarthestEdge);
      break;
  }
  return out;
}

std::vector<VertexVerdict> vertex_verdicts(const MVAssignment& mu, const CreasePattern& p) {
  std::vector<VertexVerdict> out;
  out.reserve(p.interior_vertices().size());
  for (VertexId v : p.interior_vertices()) out.push_back(check_vertex(mu, p, v));
  return out;
}

bool is_locally_valid(const MVAssignment& mu, const CreasePattern& p) {
  if (mu.size() != p.num_edges()) throw ValidityError("assignment does not cover the pattern");
  for (VertexId v : p.interior_vertices())
    if (!check_vertex(mu, p, v).valid) return false;
  return true;
}

}  // namespace faceflip
