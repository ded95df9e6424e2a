#ifndef CDG_SPACE_HPP
#define CDG_SPACE_HPP

#include <cdg/field.hpp>
#include <cdg/geometry.hpp>

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace cdg {

/// Nodal values of a composite function, subdomain-major then row-major
/// within each structured mesh.
using CoefficientVector = Eigen::VectorXd;

/// Values and gradients of the three nodal basis functions of one triangle
/// at a point.
struct P1Basis {
  std::array<int, 3> vid;   // mesh-local vertex ids
  std::array<double, 3> val;
  std::array<Vec2, 3> grad; // constant per triangle
};

/// Composite P1 space: continuous piecewise-linears inside each subdomain,
/// no continuity across interfaces. Vertices that coincide geometrically on
/// an interface still carry distinct degrees of freedom. Immutable after
/// build; evaluation is pure.
class CompositeSpace {
 public:
  /// subdivisions[i] = (nx, ny) of subdomain i. The grid must be classified.
  static CompositeSpace build(const CoarseGrid& grid,
                              const std::vector<std::pair<int, int>>& subdivisions);

  const CoarseGrid& grid() const { return grid_; }
  const std::vector<SubdomainMesh>& meshes() const { return meshes_; }
  const SubdomainMesh& mesh(int sub) const { return meshes_[sub]; }
  int total_dofs() const { return total_dofs_; }
  int dof_offset(int sub) const { return dof_offset_[sub]; }
  int dof(int sub, int local) const { return dof_offset_[sub] + local; }
  bool nested_mode() const { return nested_mode_; }

  /// Segments of edge e (nonempty for interface and Dirichlet edges).
  const std::vector<InterfaceSegment>& segments(int edge) const { return segments_[edge]; }

 private:
  CoarseGrid grid_;
  std::vector<SubdomainMesh> meshes_;
  std::vector<int> dof_offset_;
  int total_dofs_ = 0;
  bool nested_mode_ = false;
  std::vector<std::vector<InterfaceSegment>> segments_;
};

/// Triangle of the mesh containing (x, y); points within 1e-12 of the
/// closure are accepted, anything farther raises OutOfSubdomainError.
int locate_triangle(const SubdomainMesh& m, double x, double y);

/// Basis data of triangle `tri` at (x, y).
P1Basis basis_at(const SubdomainMesh& m, int tri, double x, double y);

/// Nodal interpolation: result agrees with f at every vertex of every
/// subdomain mesh, one-sided for discontinuous f.
CoefficientVector interpolate(const CompositeSpace& space, const ScalarField& f);

double evaluate(const CompositeSpace& space, const CoefficientVector& coeffs,
                int sub, double x, double y);
Vec2 evaluate_gradient(const CompositeSpace& space, const CoefficientVector& coeffs,
                       int sub, double x, double y);

/// One-sided traces on an interface segment at edge parameter t.
struct TracePair {
  double a = 0.0;       // trace from owner_a
  double b = 0.0;       // trace from owner_b (boundary edges: unused)
  bool two_sided = false;

  double jump() const { return two_sided ? a - b : a; }
  double average() const { return two_sided ? 0.5 * (a + b) : a; }
};

TracePair trace_pair(const CompositeSpace& space, const CoefficientVector& coeffs,
                     const InterfaceSegment& seg, double t);

/// True iff on every interface the coarser side's trace nodes are a subset
/// of the finer side's, the sufficient condition for a globally continuous
/// subspace of the composite space.
bool build_nested_conforming_check(const CompositeSpace& space);

/// Wraps a coefficient vector as a field (with gradients), evaluated
/// per subdomain.
ScalarField as_field(const CompositeSpace& space, CoefficientVector coeffs);

} // namespace cdg

#endif
