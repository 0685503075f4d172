#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace faceflip {

using Rational = boost::rational<std::int64_t>;
/// Angles are exact rational degrees.
using Degrees = Rational;

using VertexId = int;
using EdgeId = int;
using FaceId = int;

enum class Family { SquareGrid, Miura, TriangleRegion, HuffmanGrid, SquareTwist };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Thrown for out-of-range generator parameters and bad ids.
class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EdgeClass {
  Horizontal,
  Vertical,
  // triangle lattice
  Plus30,
  Minus30,
  // Miura
  Parallel,
  Zigzag,
  // square twist
  TwistSide,
  PleatLine,
};

enum class FaceClass {
  Square,
  Parallelogram,       // Miura
  Triangle,
  Kite,                // Huffman tile
  SquareOrRectangle,   // square twist: twist squares and big squares
  ParallelogramOrTrapezoid,
};

std::string edge_class_name(EdgeClass c);
std::string face_class_name(FaceClass c);

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Vertex {
  VertexId id = 0;
  Point lattice;                 // exact coordinates in the family frame
  std::array<double, 2> xy{};    // Euclidean embedding (rendering, star ordering)
  bool interior = false;
};

struct Edge {
  EdgeId id = 0;
  VertexId v0 = 0;
  VertexId v1 = 0;
  EdgeClass cls = EdgeClass::Horizontal;
  std::vector<FaceId> faces;     // one or two
  /// At least one endpoint is interior; validity never looks at other edges.
  bool constrained = false;
};

struct Face {
  FaceId id = 0;
  std::vector<VertexId> cycle;   // counterclockwise
  std::vector<EdgeId> edges;     // edges[k] joins cycle[k] and cycle[k+1]
  std::vector<Degrees> corners;  // interior angle at cycle[k]
  FaceClass cls = FaceClass::Square;
};

/// One crease of a vertex star together with the sector that follows it
/// counterclockwise (between this crease and the next one).
struct StarEntry {
  EdgeId edge = 0;
  Degrees sector;
  FaceId face = 0;               // the face filling that sector
};

using Star = std::vector<StarEntry>;

struct PatternParams {
  int m = 0;
  int n = 0;
  Degrees alpha{0};
  // triangle regions: either a rows x cols parallelogram or a hexagon
  int rows = 0;
  int cols = 0;
  int radius = 0;
  // square twist
  int k = 0;
  int l = 0;
  friend bool operator==(const PatternParams&, const PatternParams&) = default;
};

class CreasePattern {
 public:
  Family family() const { return family_; }
  const PatternParams& params() const { return params_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  const Vertex& vertex(VertexId v) const;
  const Edge& edge(EdgeId e) const;
  const Face& face(FaceId f) const;

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_faces() const { return faces_.size(); }

  const std::vector<VertexId>& interior_vertices() const { return interior_; }

  /// Counterclockwise star of an interior vertex. Throws for boundary vertices.
  const Star& star(VertexId v) const;

  /// Edge joining two vertices, if any.
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  /// Vertex at exact lattice coordinates, if any.
  std::optional<VertexId> find_vertex(const Point& lattice) const;

  /// Identifies faces/edges by grid position for the grid-like families
  /// (SquareGrid, Miura, HuffmanGrid). Row 0 is the top row.
  FaceId grid_face(int row, int col) const;
  VertexId grid_vertex(int row, int col) const;

  /// Miura: whether a crease belongs to a zigzag path.
  bool is_zigzag(EdgeId e) const { return edges_.at(e).cls == EdgeClass::Zigzag; }

  /// Huffman: edges that never border an alpha sector, grouped into short
  /// rows (maximal chains linked through interior vertices).
  std::vector<std::vector<EdgeId>> short_rows() const;

  friend class PatternBuilder;

 private:
  Family family_ = Family::SquareGrid;
  PatternParams params_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<VertexId> interior_;
  std::vector<Star> stars_;  // indexed by vertex id; empty for boundary
  int grid_rows_ = 0;
  int grid_cols_ = 0;
};

CreasePattern build_square_grid(int m, int n);
CreasePattern build_miura(int m, int n, Degrees alpha);
CreasePattern build_triangle_region(int rows, int cols);
CreasePattern build_triangle_hexagon(int radius);
CreasePattern build_huffman(int m, int n, Degrees alpha);
CreasePattern build_square_twist(int k, int l);

/// Regenerates a pattern from its family and parameters.
CreasePattern build_pattern(Family family, const PatternParams& params);

struct DualEdge {
  FaceId a = 0;
  FaceId b = 0;
  EdgeId primal = 0;
};

struct DualGraph {
  std::size_t num_nodes = 0;
  std::vector<DualEdge> edges;
  std::vector<std::vector<std::pair<FaceId, EdgeId>>> adjacency;
};

/// Inner dual graph: one node per face, one dual edge per primal edge that
/// borders two faces. The outer face is not represented.
DualGraph dual_graph(const CreasePattern& p);

/// Star of an interior vertex, as in CreasePattern::star.
const Star& vertex_star(const CreasePattern& p, VertexId v);

}  // namespace faceflip
