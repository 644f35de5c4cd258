#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tqftdef/coefficient.hpp"

namespace tqftdef {

using Triangle = std::array<int, 3>;

struct Vertex {
  int id = 0;
  bool on_curve = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Closed oriented triangulated surface with an embedded oriented curve.
///
/// Triangles list their vertices counterclockwise with respect to the surface
/// orientation and are kept rotated so that the smallest id comes first.
/// Every curve cycle lists its vertices in the direction of the curve.
/// `off_curve_order` ranks the off-curve vertices; it orients the edges that do
/// not touch the curve.
struct CurveSurfaceComplex {
  std::vector<Vertex> vertices;
  std::vector<int> off_curve_order;
  std::vector<Triangle> triangles;
  std::vector<std::vector<int>> curve_cycles;

  friend bool operator==(const CurveSurfaceComplex&, const CurveSurfaceComplex&) = default;
};

/// Rotates a triangle so that its smallest vertex id is first.
Triangle canonical_rotation(Triangle t);

struct Violation {
  std::string kind;          ///< short machine-readable tag, e.g. "flag-like"
  std::vector<int> simplex;  ///< offending vertex ids
  std::string message;
};

/// Empty iff the complex is a closed oriented simplicial surface, the curve is
/// a disjoint union of embedded cycles, and the triangulation is flag-like.
std::vector<Violation> validate(const CurveSurfaceComplex& complex);

/// Directed edge with its kind; tail -> head is the edge orientation:
/// curve edges follow the curve, B-edges leave the curve, A-edges run from
/// lower to higher off-curve rank.
struct Edge {
  int tail = 0;
  int head = 0;
  EdgeKind kind = EdgeKind::A;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Sign : unsigned char { Plus, Minus };

struct TriangleClass {
  int k = 0;  ///< number of on-curve vertices
  Sign sign = Sign::Plus;
  Coefficient tag = Coefficient::a;

  friend bool operator==(const TriangleClass&, const TriangleClass&) = default;
};

/// Argument order fed to barred coefficients. `Path` is the convention the
/// invariance equations are written in; `Reversed` swaps the two superscript
/// arguments and exists only to show that the fuzz suite detects it.
enum class BarredOrder : unsigned char { Path, Reversed };

struct Classification {
  TriangleClass cls;
  std::array<int, 3> edge_ids;  ///< argument order of the coefficient tensor
  std::array<Edge, 3> edges;
};

/// Derived adjacency data of a complex. Construction throws InvalidSurface if
/// edges cannot be oriented (unknown vertex, edge not shared by exactly two
/// triangles, or an off-curve chord between two curve vertices).
class Topology {
 public:
  explicit Topology(const CurveSurfaceComplex& complex);

  const CurveSurfaceComplex& complex() const noexcept { return *complex_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Edge ids of (v0v1, v1v2, v2v0) for triangle t.
  const std::array<int, 3>& triangle_edges(std::size_t t) const { return tri_edges_[t]; }
  /// The (one or two) triangles incident to an edge.
  const std::array<int, 2>& edge_triangles(std::size_t e) const { return edge_tris_[e]; }

  std::optional<int> find_edge(int u, int v) const;
  bool has_vertex(int id) const { return index_.contains(id); }
  bool on_curve(int id) const;
  /// Position in off_curve_order; -1 for curve vertices.
  int rank(int id) const;
  int degree(int id) const;
  /// Triangle indices around a vertex.
  const std::vector<int>& star(int id) const;

 private:
  const CurveSurfaceComplex* complex_;
  std::unordered_map<int, int> index_;
  std::vector<bool> on_curve_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> star_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::vector<std::array<int, 3>> tri_edges_;
  std::vector<std::array<int, 2>> edge_tris_;
};

/// Throws OrientationContradiction when the triangle's edges all agree or all
/// disagree with its boundary orientation.
Classification classify_triangle(const Topology& topology, std::size_t triangle,
                                 BarredOrder order = BarredOrder::Path);

TriangleClass triangle_class(int on_curve_vertices, Sign sign);

/// Standard barycentric subdivision. Midpoints of curve edges join the curve;
/// new off-curve vertices rank after the existing ones, edge midpoints before
/// face barycenters. Throws InvalidSurface unless the input is a closed
/// oriented surface carrying the curve (flag-likeness is not required).
CurveSurfaceComplex barycentric_subdivide(const CurveSurfaceComplex& complex);

long euler_characteristic(const CurveSurfaceComplex& complex);
std::size_t curve_components(const CurveSurfaceComplex& complex);
std::size_t count_edges(const CurveSurfaceComplex& complex);

/// plain_sphere, plain_torus, sphere_equator, torus_meridian.
CurveSurfaceComplex seed_complex(std::string_view name);
const std::vector<std::string>& seed_names();

/// Copy of `complex` with a different ranking of its off-curve vertices.
CurveSurfaceComplex with_off_curve_order(const CurveSurfaceComplex& complex,
                                         std::vector<int> order);

/// Relabeling-invariant code of a connected complex: curve flags, curve
/// directions and the oriented triangle structure, ignoring vertex ids and
/// off-curve ranks.
std::vector<int> canonical_form(const CurveSurfaceComplex& complex);
bool isomorphic(const CurveSurfaceComplex& lhs, const CurveSurfaceComplex& rhs);

}  // namespace tqftdef
