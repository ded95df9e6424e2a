#ifndef CDG_GEOMETRY_HPP
#define CDG_GEOMETRY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cdg {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

/// Axis-aligned rectangle, x0 < x1 and y0 < y1.
struct Rect {
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  bool contains(double x, double y, double tol = 0.0) const {
    return x >= x0 - tol && x <= x1 + tol && y >= y0 - tol && y <= y1 + tol;
  }
};

enum class EdgeKind { Unclassified, Dirichlet, Neumann, Interface };

/// One full side of a subdomain rectangle. Interface edges are shared by
/// exactly two subdomains; boundary edges belong to one.
///
/// Normal convention: for an interface e = bd(Omega_i) & bd(Omega_j) with
/// i < j the normal points from Omega_i into Omega_j, so the jump
/// [u] = u_i - u_j has a fixed sign. Boundary normals point out of the
/// domain.
struct CoarseEdge {
  Vec2 p0, p1;              // endpoints, ordered by increasing coordinate
  EdgeKind kind = EdgeKind::Unclassified;
  int owner_a = -1;         // smaller subdomain index
  int owner_b = -1;         // larger index for interfaces, -1 on the boundary
  Vec2 normal;
  std::string dirichlet_label; // value label from the boundary spec

  bool is_interface() const { return owner_b >= 0; }
  bool horizontal() const { return p0.y == p1.y; }
  double length() const;
  /// Point at parameter t in [0,1] along p0 -> p1.
  Vec2 at(double t) const;
};

/// Rectangular partition of the domain forming a conforming coarse mesh:
/// any two subdomains meet in a full common edge, a corner, or not at all.
struct CoarseGrid {
  Rect domain;
  std::vector<Rect> subdomains;          // ordered by (y0, x0)
  std::vector<CoarseEdge> edges;
  std::vector<std::vector<int>> neighbors;    // subdomain -> adjacent subdomains
  std::vector<std::vector<int>> edges_of;     // subdomain -> incident edge ids

  int n_subdomains() const { return static_cast<int>(subdomains.size()); }
  bool classified() const;
  int count(EdgeKind k) const;
};

/// Uniform right-triangle mesh of one subdomain. Every cell is split along
/// the same diagonal, from the lower-right to the upper-left cell corner;
/// all triangles are congruent and positively oriented.
struct SubdomainMesh {
  int owner = -1;
  Rect rect;
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;
  double h = 0.0; // mesh parameter: max element diameter = cell hypotenuse

  int n_vertices() const { return (nx + 1) * (ny + 1); }
  int n_triangles() const { return 2 * nx * ny; }
  int vertex_id(int i, int j) const { return j * (nx + 1) + i; }
  Vec2 vertex(int v) const;

  /// Triangles of cell (i,j): 2*(j*nx+i) is the lower triangle
  /// (v00,v10,v01), +1 the upper one (v10,v11,v01).
  std::array<int, 3> triangle(int t) const;
  double triangle_area() const { return 0.5 * dx * dy; }
};

enum class Side { Bottom, Right, Top, Left };

/// Piece of a coarse edge on which the traces of both adjacent meshes are
/// single linear polynomials, so trace products integrate exactly.
struct InterfaceSegment {
  int edge = -1;        // index into CoarseGrid::edges
  double t0 = 0.0, t1 = 0.0;
  int tri_a = -1;       // fine triangle of the owner_a mesh touching the piece
  int tri_b = -1;       // same for owner_b; -1 on boundary edges
};

/// Boundary condition request for one stretch of one side of the domain.
struct SideInterval {
  Side side = Side::Bottom;
  double from = 0.0, to = 0.0; // coordinates along the side (x or y)
  EdgeKind kind = EdgeKind::Neumann;
  std::string dirichlet_label;
};

/// Builds the coarse partition from tensor-product cuts, optionally merging
/// blocks of cells into larger rectangles. Throws OverlapError if a merge
/// is not a cut-aligned rectangle or merges overlap, HangingEdgeError if
/// the resulting partition is not conforming.
CoarseGrid build_coarse_grid(const Rect& domain,
                             const std::vector<double>& x_cuts,
                             const std::vector<double>& y_cuts,
                             const std::vector<Rect>& merge_spec = {});

/// Tags every boundary edge Dirichlet or Neumann. Every boundary edge must
/// lie wholly inside one declared interval; otherwise StraddleError.
CoarseGrid classify_edges(const CoarseGrid& grid,
                          const std::vector<SideInterval>& boundary_spec);

SubdomainMesh build_subdomain_mesh(const Rect& rect, int nx, int ny, int owner = 0);

/// Merged breakpoints of the fine vertices both meshes place on edge e;
/// mesh_b is null for boundary edges. Breakpoints closer than 1e-12*|e|
/// are considered equal.
std::vector<InterfaceSegment> merge_interface_breakpoints(
    const CoarseGrid& grid, int edge_id,
    const SubdomainMesh& mesh_a, const SubdomainMesh* mesh_b);

/// Which side of its owner's rectangle an edge is, from either owner's view.
Side side_of(const CoarseEdge& e, const Rect& owner_rect);

} // namespace cdg

#endif
