#include "faceflip/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace faceflip {

std::string family_name(Family f) {
  switch (f) {
    case Family::SquareGrid: return "square";
    case Family::Miura: return "miura";
    case Family::TriangleRegion: return "triangle";
    case Family::HuffmanGrid: return "huffman";
    case Family::SquareTwist: return "twist";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::SquareGrid, Family::Miura, Family::TriangleRegion,
                   Family::HuffmanGrid, Family::SquareTwist}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::Horizontal: return "horizontal";
    case EdgeClass::Vertical: return "vertical";
    case EdgeClass::Plus30: return "plus30";
    case EdgeClass::Minus30: return "minus30";
    case EdgeClass::Parallel: return "parallel";
    case EdgeClass::Zigzag: return "zigzag";
    case EdgeClass::TwistSide: return "twist_side";
    case EdgeClass::PleatLine: return "pleat_line";
  }
  return "?";
}

std::string face_class_name(FaceClass c) {
  switch (c) {
    case FaceClass::Square: return "square";
    case FaceClass::Parallelogram: return "parallelogram";
    case FaceClass::Triangle: return "triangle";
    case FaceClass::Kite: return "kite";
    case FaceClass::SquareOrRectangle: return "square_or_rectangle";
    case FaceClass::ParallelogramOrTrapezoid: return "parallelogram_or_trapezoid";
  }
  return "?";
}

const Vertex& CreasePattern::vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size())
    throw PatternError("unknown vertex id " + std::to_string(v));
  return vertices_[v];
}

const Edge& CreasePattern::edge(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= edges_.size())
    throw PatternError("unknown edge id " + std::to_string(e));
  return edges_[e];
}

const Face& CreasePattern::face(FaceId f) const {
  if (f < 0 || static_cast<std::size_t>(f) >= faces_.size())
    throw PatternError("unknown face id " + std::to_string(f));
  return faces_[f];
}

const Star& CreasePattern::star(VertexId v) const {
  if (!vertex(v).interior)
    throw PatternError("vertex " + std::to_string(v) + " is on the boundary");
  return stars_[v];
}

std::optional<EdgeId> CreasePattern::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vertices_.size()) return std::nullopt;
  for (const auto& e : edges_) {
    if ((e.v0 == a && e.v1 == b) || (e.v0 == b && e.v1 == a)) return e.id;
  }
  return std::nullopt;
}

std::optional<VertexId> CreasePattern::find_vertex(const Point& lattice) const {
  for (const auto& v : vertices_) {
    if (v.lattice == lattice) return v.id;
  }
  return std::nullopt;
}

FaceId CreasePattern::grid_face(int row, int col) const {
  if (grid_cols_ == 0 || row < 0 || col < 0 || row >= grid_rows_ || col >= grid_cols_)
    throw PatternError("grid face out of range");
  return row * grid_cols_ + col;
}

VertexId CreasePattern::grid_vertex(int row, int col) const {
  if (grid_cols_ == 0 || row < 0 || col < 0 || row > grid_rows_ || col > grid_cols_)
    throw PatternError("grid vertex out of range");
  return row * (grid_cols_ + 1) + col;
}

std::vector<std::vector<EdgeId>> CreasePattern::short_rows() const {
  if (family_ != Family::HuffmanGrid) throw PatternError("short rows exist only on Huffman grids");
  const Degrees wide = Degrees(180) - params_.alpha;
  std::vector<bool> is_short(edges_.size(), false);
  for (const auto& f : faces_) {
    const std::size_t k = f.cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (f.corners[i] == wide) {
        is_short[f.edges[i]] = true;
        is_short[f.edges[(i + k - 1) % k]] = true;
      }
    }
  }
  std::vector<int> parent(edges_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (VertexId v : interior_) {
    std::vector<EdgeId> here;
    for (const auto& s : stars_[v])
      if (is_short[s.edge]) here.push_back(s.edge);
    for (std::size_t i = 1; i < here.size(); ++i) parent[find(here[i])] = find(here[0]);
  }
  std::map<int, std::vector<EdgeId>> groups;
  for (const auto& e : edges_)
    if (is_short[e.id]) groups[find(e.id)].push_back(e.id);
  std::vector<std::vector<EdgeId>> rows;
  for (auto& [root, g] : groups) rows.push_back(std::move(g));
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Assembles vertices and counterclockwise faces into a pattern: derives
// edges, canonical edge ids, interior flags and vertex stars.
class PatternBuilder {
 public:
  using EdgeKey = std::tuple<int, Rational, Rational, Rational, Rational>;
  using EdgeClassifier = std::function<EdgeClass(const Vertex&, const Vertex&)>;

  PatternBuilder(Family family, PatternParams params) {
    p_.family_ = family;
    p_.params_ = params;
  }

  VertexId add_vertex(Point lattice, std::array<double, 2> xy) {
    auto key = std::make_pair(lattice.x, lattice.y);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    Vertex v;
    v.id = static_cast<VertexId>(p_.vertices_.size());
    v.lattice = lattice;
    v.xy = xy;
    p_.vertices_.push_back(v);
    index_.emplace(key, v.id);
    return v.id;
  }

  const std::vector<Vertex>& peek_vertices() const { return p_.vertices_; }

  std::optional<VertexId> lookup(const Point& lattice) const {
    auto it = index_.find(std::make_pair(lattice.x, lattice.y));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void add_face(std::vector<VertexId> cycle, std::vector<Degrees> corners, FaceClass cls) {
    Face f;
    f.id = static_cast<FaceId>(p_.faces_.size());
    f.cycle = std::move(cycle);
    f.corners = std::move(corners);
    f.cls = cls;
    p_.faces_.push_back(std::move(f));
  }

  void set_grid(int rows, int cols) {
    p_.grid_rows_ = rows;
    p_.grid_cols_ = cols;
  }

  CreasePattern finish(const EdgeClassifier& classify) {
    check_orientation();
    // Collect undirected edges with their canonical sort keys.
    std::map<std::pair<VertexId, VertexId>, int> slot;
    struct Proto {
      VertexId a, b;
      EdgeClass cls;
      EdgeKey key;
    };
    std::vector<Proto> protos;
    for (const auto& f : p_.faces_) {
      const std::size_t k = f.cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        VertexId a = f.cycle[i], b = f.cycle[(i + 1) % k];
        auto pr = std::minmax(a, b);
        if (slot.count(pr)) continue;
        slot.emplace(pr, static_cast<int>(protos.size()));
        const Vertex& va = p_.vertices_[pr.first];
        const Vertex& vb = p_.vertices_[pr.second];
        EdgeClass cls = classify(va, vb);
        // Lower endpoint first: by lattice row (y) then column (x).
        Point lo = va.lattice, hi = vb.lattice;
        if (std::tie(hi.y, hi.x) < std::tie(lo.y, lo.x)) std::swap(lo, hi);
        protos.push_back({pr.first, pr.second, cls,
                          EdgeKey{static_cast<int>(cls), lo.y, lo.x, hi.y, hi.x}});
      }
    }
    std::vector<int> order(protos.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return protos[x].key < protos[y].key; });
    std::map<std::pair<VertexId, VertexId>, EdgeId> edge_of;
    for (std::size_t id = 0; id < order.size(); ++id) {
      const Proto& pr = protos[order[id]];
      Edge e;
      e.id = static_cast<EdgeId>(id);
      e.v0 = pr.a;
      e.v1 = pr.b;
      e.cls = pr.cls;
      p_.edges_.push_back(e);
      edge_of.emplace(std::make_pair(pr.a, pr.b), e.id);
    }
    for (auto& f : p_.faces_) {
      const std::size_t k = f.cycle.size();
      f.edges.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        auto pr = std::minmax(f.cycle[i], f.cycle[(i + 1) % k]);
        EdgeId e = edge_of.at(pr);
        f.edges[i] = e;
        p_.edges_[e].faces.push_back(f.id);
      }
    }
    compute_interior_and_stars();
    for (auto& e : p_.edges_)
      e.constrained = p_.vertices_[e.v0].interior || p_.vertices_[e.v1].interior;
    return std::move(p_);
  }

 private:
  void check_orientation() const {
    for (const auto& f : p_.faces_) {
      double area = 0;
      const std::size_t k = f.cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        const auto& a = p_.vertices_[f.cycle[i]].xy;
        const auto& b = p_.vertices_[f.cycle[(i + 1) % k]].xy;
        area += a[0] * b[1] - a[1] * b[0];
      }
      if (!(area > 0)) throw std::logic_error("face cycle is not counterclockwise");
    }
  }

  void compute_interior_and_stars() {
    const std::size_t nv = p_.vertices_.size();
    std::vector<std::vector<EdgeId>> incident(nv);
    for (const auto& e : p_.edges_) {
      incident[e.v0].push_back(e.id);
      incident[e.v1].push_back(e.id);
    }
    p_.stars_.assign(nv, {});
    for (auto& v : p_.vertices_) {
      bool closed = !incident[v.id].empty();
      for (EdgeId e : incident[v.id]) closed = closed && p_.edges_[e].faces.size() == 2;
      v.interior = closed;
      if (!closed) continue;
      p_.interior_.push_back(v.id);

      auto direction = [&](EdgeId e) {
        const Edge& ed = p_.edges_[e];
        const auto& o = p_.vertices_[ed.v0 == v.id ? ed.v1 : ed.v0].xy;
        return std::atan2(o[1] - v.xy[1], o[0] - v.xy[0]);
      };
      std::vector<EdgeId> ring = incident[v.id];
      std::sort(ring.begin(), ring.end(),
                [&](EdgeId a, EdgeId b) { return direction(a) < direction(b); });
      Star star;
      Degrees total(0);
      for (std::size_t i = 0; i < ring.size(); ++i) {
        EdgeId a = ring[i], b = ring[(i + 1) % ring.size()];
        // The face whose corner at v lies between crease a and crease b.
        const Face* between = nullptr;
        std::size_t corner = 0;
        for (FaceId fid : p_.edges_[a].faces) {
          const Face& f = p_.faces_[fid];
          for (std::size_t c = 0; c < f.cycle.size(); ++c) {
            if (f.cycle[c] != v.id) continue;
            const std::size_t k = f.cycle.size();
            EdgeId out = f.edges[c], in = f.edges[(c + k - 1) % k];
            if (out == a && in == b) {
              between = &f;
              corner = c;
            }
          }
        }
        if (between == nullptr) throw std::logic_error("vertex star is not closed");
        star.push_back({a, between->corners[corner], between->id});
        total += between->corners[corner];
      }
      if (total != Degrees(360)) throw std::logic_error("sector angles do not sum to 360");
      p_.stars_[v.id] = std::move(star);
    }
  }

  CreasePattern p_;
  std::map<std::pair<Rational, Rational>, VertexId> index_;
};

namespace {

constexpr double kPi = 3.14159265358979323846;

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

void require_dims(int a, int b, const char* what) {
  if (a < 1 || b < 1) throw PatternError(std::string(what) + ": dimensions must be >= 1");
}

void require_alpha(const Degrees& alpha) {
  if (alpha <= Degrees(0) || alpha >= Degrees(90))
    throw PatternError("alpha must lie strictly between 0 and 90 degrees");
}

// Grid-like families share the (row, col) vertex layout. Rows grow downward.
EdgeClass grid_class(const Vertex& a, const Vertex& b, EdgeClass along_row, EdgeClass across) {
  return a.lattice.y == b.lattice.y ? along_row : across;
}

// Exact interior angle (45, 90 or 135 degrees) between integer-valued
// vectors; used for the square twist whose coordinates are integral.
Degrees octant_angle(Rational ux, Rational uy, Rational vx, Rational vy) {
  Rational dot = ux * vx + uy * vy;
  Rational cross = ux * vy - uy * vx;
  if (cross > Rational(0)) {
    if (dot == Rational(0)) return Degrees(90);
    if (dot == cross) return Degrees(45);
    if (-dot == cross) return Degrees(135);
  }
  throw std::logic_error("square twist corner is not a multiple of 45 degrees");
}

}  // namespace

CreasePattern build_square_grid(int m, int n) {
  require_dims(m, n, "square grid");
  PatternParams params;
  params.m = m;
  params.n = n;
  PatternBuilder b(Family::SquareGrid, params);
  for (int r = 0; r <= m; ++r)
    for (int c = 0; c <= n; ++c)
      b.add_vertex({Rational(c), Rational(r)}, {double(c), -double(r)});
  auto vid = [n](int r, int c) { return r * (n + 1) + c; };
  const Degrees right(90);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      b.add_face({vid(r, c), vid(r + 1, c), vid(r + 1, c + 1), vid(r, c + 1)},
                 {right, right, right, right}, FaceClass::Square);
  b.set_grid(m, n);
  return b.finish([](const Vertex& x, const Vertex& y) {
    return grid_class(x, y, EdgeClass::Horizontal, EdgeClass::Vertical);
  });
}

CreasePattern build_miura(int m, int n, Degrees alpha) {
  require_dims(m, n, "miura");
  require_alpha(alpha);
  PatternParams params;
  params.m = m;
  params.n = n;
  params.alpha = alpha;
  PatternBuilder b(Family::Miura, params);
  // Parallel fold lines are horizontal. Even lines are shifted right by
  // cot(alpha), so parallelograms reflect across every parallel line.
  const double shift = 1.0 / std::tan(to_double(alpha) * kPi / 180.0);
  for (int r = 0; r <= m; ++r)
    for (int c = 0; c <= n; ++c)
      b.add_vertex({Rational(c), Rational(r)}, {c + (r % 2 == 0 ? shift : 0.0), -double(r)});
  auto vid = [n](int r, int c) { return r * (n + 1) + c; };
  const Degrees acute = alpha, obtuse = Degrees(180) - alpha;
  for (int r = 0; r < m; ++r) {
    // corners listed as TL, BL, BR, TR
    std::vector<Degrees> corners =
        r % 2 == 0 ? std::vector<Degrees>{obtuse, acute, obtuse, acute}
                   : std::vector<Degrees>{acute, obtuse, acute, obtuse};
    for (int c = 0; c < n; ++c)
      b.add_face({vid(r, c), vid(r + 1, c), vid(r + 1, c + 1), vid(r, c + 1)}, corners,
                 FaceClass::Parallelogram);
  }
  b.set_grid(m, n);
  return b.finish([](const Vertex& x, const Vertex& y) {
    return grid_class(x, y, EdgeClass::Parallel, EdgeClass::Zigzag);
  });
}

CreasePattern build_huffman(int m, int n, Degrees alpha) {
  require_dims(m, n, "huffman");
  require_alpha(alpha);
  PatternParams params;
  params.m = m;
  params.n = n;
  params.alpha = alpha;
  PatternBuilder b(Family::HuffmanGrid, params);

  // Base tile A(TL, 90) B(TR, alpha) C(BR, 90) D(BL, 180-alpha); neighbours
  // across an edge are half-turns about the edge midpoint.
  const double a = to_double(alpha) * kPi / 180.0;
  using V2 = std::array<double, 2>;
  const V2 D{0.0, 0.0}, A{0.0, 1.0}, B{1.0 + 1.0 / std::tan(a), 1.0};
  const V2 C{std::sin(a) * std::sin(a), -std::sin(a) * std::cos(a)};
  auto add = [](V2 p, V2 q) { return V2{p[0] + q[0], p[1] + q[1]}; };
  auto sub = [](V2 p, V2 q) { return V2{p[0] - q[0], p[1] - q[1]}; };
  auto scale = [](double s, V2 p) { return V2{s * p[0], s * p[1]}; };
  auto even_shift = [&](int r, int c) {
    // (r + c) even
    return add(scale((c + r) / 2.0, sub(C, A)), scale((c - r) / 2.0, sub(B, D)));
  };
  // Embedded corners (TL, TR, BR, BL) of face (r, c).
  auto corners_of = [&](int r, int c) -> std::array<V2, 4> {
    if ((r + c) % 2 == 0) {
      V2 t = even_shift(r, c);
      return {add(A, t), add(B, t), add(C, t), add(D, t)};
    }
    V2 t = even_shift(r, c - 1);
    V2 bc = add(add(B, C), t);
    return {add(B, t), sub(bc, D), sub(bc, A), add(C, t)};
  };
  std::vector<std::array<double, 2>> pos((m + 1) * (n + 1));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      auto q = corners_of(r, c);
      pos[r * (n + 1) + c] = q[0];
      pos[r * (n + 1) + c + 1] = q[1];
      pos[(r + 1) * (n + 1) + c + 1] = q[2];
      pos[(r + 1) * (n + 1) + c] = q[3];
    }
  for (int r = 0; r <= m; ++r)
    for (int c = 0; c <= n; ++c) b.add_vertex({Rational(c), Rational(r)}, pos[r * (n + 1) + c]);
  auto vid = [n](int r, int c) { return r * (n + 1) + c; };
  const Degrees right(90), acute = alpha, obtuse = Degrees(180) - alpha;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      // TL, BL, BR, TR
      std::vector<Degrees> corners = (r + c) % 2 == 0
                                         ? std::vector<Degrees>{right, obtuse, right, acute}
                                         : std::vector<Degrees>{right, acute, right, obtuse};
      b.add_face({vid(r, c), vid(r + 1, c), vid(r + 1, c + 1), vid(r, c + 1)}, corners,
                 FaceClass::Kite);
    }
  b.set_grid(m, n);
  return b.finish([](const Vertex& x, const Vertex& y) {
    return grid_class(x, y, EdgeClass::Horizontal, EdgeClass::Vertical);
  });
}

namespace {

// Triangle lattice in axial coordinates (i, j): position i*(sqrt3/2, 1/2) + j*(0, 1).
// Lattice edges: vertical (0,1), plus30 (1,0), minus30 (1,-1).
CreasePattern build_triangle(PatternParams params, const std::function<bool(int, int)>& inside,
                             int lo, int hi) {
  PatternBuilder b(Family::TriangleRegion, params);
  const double h = std::sqrt(3.0) / 2.0;
  auto add = [&](int i, int j) {
    return b.add_vertex({Rational(i), Rational(j)}, {i * h, 0.5 * i + j});
  };
  const Degrees sixty(60);
  // Faces sweep columns left to right, each column top to bottom.
  for (int i = lo; i < hi; ++i) {
    for (int j = hi; j >= lo - 1; --j) {
      // Upper (down-pointing apex on the left) triangle of rhombus (i, j).
      if (inside(i + 1, j) && inside(i + 1, j + 1) && inside(i, j + 1))
        b.add_face({add(i + 1, j), add(i + 1, j + 1), add(i, j + 1)}, {sixty, sixty, sixty},
                   FaceClass::Triangle);
      if (inside(i, j) && inside(i + 1, j) && inside(i, j + 1))
        b.add_face({add(i, j), add(i + 1, j), add(i, j + 1)}, {sixty, sixty, sixty},
                   FaceClass::Triangle);
    }
  }
  return b.finish([](const Vertex& x, const Vertex& y) {
    if (x.lattice.x == y.lattice.x) return EdgeClass::Vertical;
    if (x.lattice.y == y.lattice.y) return EdgeClass::Plus30;
    return EdgeClass::Minus30;
  });
}

}  // namespace

CreasePattern build_triangle_region(int rows, int cols) {
  require_dims(rows, cols, "triangle region");
  PatternParams params;
  params.rows = rows;
  params.cols = cols;
  return build_triangle(
      params, [=](int i, int j) { return i >= 0 && i <= cols && j >= 0 && j <= rows; }, 0,
      std::max(rows, cols) + 1);
}

CreasePattern build_triangle_hexagon(int radius) {
  if (radius < 1) throw PatternError("triangle hexagon: radius must be >= 1");
  PatternParams params;
  params.radius = radius;
  return build_triangle(
      params,
      [=](int i, int j) { return std::abs(i) <= radius && std::abs(j) <= radius && std::abs(i + j) <= radius; },
      -radius - 1, radius + 1);
}

CreasePattern build_square_twist(int k, int l) {
  require_dims(k, l, "square twist");
  PatternParams params;
  params.k = k;
  params.l = l;
  PatternBuilder b(Family::SquareTwist, params);
  // Twist (r, c) is a unit square with lower-left corner c*(2,-1) + r*(-1,-2).
  // Corner index: 0 = P1 (0,0), 1 = P2 (1,0), 2 = P3 (1,1), 3 = P4 (0,1).
  auto corner = [&](int r, int c, int q) {
    static constexpr int dx[4] = {0, 1, 1, 0};
    static constexpr int dy[4] = {0, 0, 1, 1};
    const int x = 2 * c - r + dx[q], y = -c - 2 * r + dy[q];
    return b.add_vertex({Rational(x), Rational(y)}, {double(x), double(y)});
  };
  struct Pending {
    std::vector<VertexId> cycle;
    FaceClass cls;
  };
  std::vector<Pending> faces;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < l; ++c)
      faces.push_back({{corner(r, c, 0), corner(r, c, 1), corner(r, c, 2), corner(r, c, 3)},
                       FaceClass::SquareOrRectangle});
  for (int r = 0; r < k; ++r)
    for (int c = -1; c < l; ++c)  // pleat between (r, c) and (r, c + 1)
      faces.push_back({{corner(r, c, 1), corner(r, c + 1, 0), corner(r, c + 1, 3), corner(r, c, 2)},
                       FaceClass::ParallelogramOrTrapezoid});
  for (int r = -1; r < k; ++r)
    for (int c = 0; c < l; ++c)  // pleat between (r, c) and (r + 1, c)
      faces.push_back({{corner(r, c, 0), corner(r + 1, c, 3), corner(r + 1, c, 2), corner(r, c, 1)},
                       FaceClass::ParallelogramOrTrapezoid});
  for (int r = -1; r < k; ++r)
    for (int c = -1; c < l; ++c)  // big square enclosed by a 2x2 block of twists
      faces.push_back({{corner(r, c + 1, 0), corner(r, c, 1), corner(r + 1, c, 2), corner(r + 1, c + 1, 3)},
                       FaceClass::SquareOrRectangle});
  const auto& verts = b.peek_vertices();
  for (auto& f : faces) {
    const std::size_t n = f.cycle.size();
    std::vector<Degrees> corners(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point& cur = verts[f.cycle[i]].lattice;
      const Point& next = verts[f.cycle[(i + 1) % n]].lattice;
      const Point& prev = verts[f.cycle[(i + n - 1) % n]].lattice;
      corners[i] = octant_angle(next.x - cur.x, next.y - cur.y, prev.x - cur.x, prev.y - cur.y);
    }
    b.add_face(f.cycle, corners, f.cls);
  }
  return b.finish([](const Vertex& x, const Vertex& y) {
    return (x.lattice.x == y.lattice.x || x.lattice.y == y.lattice.y) ? EdgeClass::TwistSide
                                                                      : EdgeClass::PleatLine;
  });
}

CreasePattern build_pattern(Family family, const PatternParams& p) {
  switch (family) {
    case Family::SquareGrid: return build_square_grid(p.m, p.n);
    case Family::Miura: return build_miura(p.m, p.n, p.alpha);
    case Family::HuffmanGrid: return build_huffman(p.m, p.n, p.alpha);
    case Family::SquareTwist: return build_square_twist(p.k, p.l);
    case Family::TriangleRegion:
      return p.radius > 0 ? build_triangle_hexagon(p.radius) : build_triangle_region(p.rows, p.cols);
  }
  throw PatternError("unknown family");
}

DualGraph dual_graph(const CreasePattern& p) {
  DualGraph g;
  g.num_nodes = p.num_faces();
  g.adjacency.resize(g.num_nodes);
  for (const auto& e : p.edges()) {
    if (e.faces.size() != 2) continue;
    g.edges.push_back({e.faces[0], e.faces[1], e.id});
    g.adjacency[e.faces[0]].push_back({e.faces[1], e.id});
    g.adjacency[e.faces[1]].push_back({e.faces[0], e.id});
  }
  return g;
}

const Star& vertex_star(const CreasePattern& p, VertexId v) { return p.star(v); }

}  // namespace faceflip
