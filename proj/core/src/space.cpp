#include <cdg/space.hpp>
#include <cdg/errors.hpp>
#include <cdg/problem.hpp>

#include <algorithm>
#include <cmath>
#include <memory>

namespace cdg {

CompositeSpace CompositeSpace::build(
    const CoarseGrid& grid, const std::vector<std::pair<int, int>>& subdivisions) {
  if (!grid.classified())
    throw Error("CompositeSpace: classify_edges must run before building the space");
  if (static_cast<int>(subdivisions.size()) != grid.n_subdomains())
    throw Error("CompositeSpace: one (nx, ny) pair per subdomain required");

  CompositeSpace s;
  s.grid_ = grid;
  for (int i = 0; i < grid.n_subdomains(); ++i) {
    const auto [nx, ny] = subdivisions[i];
    s.meshes_.push_back(build_subdomain_mesh(grid.subdomains[i], nx, ny, i));
  }
  s.dof_offset_.resize(s.meshes_.size());
  int off = 0;
  for (std::size_t i = 0; i < s.meshes_.size(); ++i) {
    s.dof_offset_[i] = off;
    off += s.meshes_[i].n_vertices();
  }
  s.total_dofs_ = off;

  s.segments_.resize(grid.edges.size());
  for (std::size_t e = 0; e < grid.edges.size(); ++e) {
    const CoarseEdge& edge = grid.edges[e];
    if (edge.kind == EdgeKind::Neumann) continue;
    const SubdomainMesh& ma = s.meshes_[edge.owner_a];
    const SubdomainMesh* mb = edge.is_interface() ? &s.meshes_[edge.owner_b] : nullptr;
    s.segments_[e] = merge_interface_breakpoints(grid, static_cast<int>(e), ma, mb);
  }

  s.nested_mode_ = build_nested_conforming_check(s);
  return s;
}

int locate_triangle(const SubdomainMesh& m, double x, double y) {
  const double tol = 1e-12 * std::max(m.rect.width(), m.rect.height());
  if (!m.rect.contains(x, y, tol))
    throw OutOfSubdomainError("evaluate: point outside the subdomain closure");
  const double xi = (x - m.rect.x0) / m.dx;
  const double eta = (y - m.rect.y0) / m.dy;
  const int i = std::clamp(static_cast<int>(xi), 0, m.nx - 1);
  const int j = std::clamp(static_cast<int>(eta), 0, m.ny - 1);
  const double lx = xi - i, ly = eta - j;
  const int cell = j * m.nx + i;
  return (lx + ly <= 1.0) ? 2 * cell : 2 * cell + 1;
}

P1Basis basis_at(const SubdomainMesh& m, int tri, double x, double y) {
  const int cell = tri / 2;
  const int i = cell % m.nx;
  const int j = cell / m.nx;
  const double xi = (x - m.rect.x0) / m.dx - i;
  const double eta = (y - m.rect.y0) / m.dy - j;
  const double gx = 1.0 / m.dx, gy = 1.0 / m.dy;

  P1Basis b;
  b.vid = m.triangle(tri);
  if (tri % 2 == 0) { // lower triangle (v00, v10, v01)
    b.val = {1.0 - xi - eta, xi, eta};
    b.grad = {Vec2{-gx, -gy}, Vec2{gx, 0.0}, Vec2{0.0, gy}};
  } else { // upper triangle (v10, v11, v01)
    b.val = {1.0 - eta, xi + eta - 1.0, 1.0 - xi};
    b.grad = {Vec2{0.0, -gy}, Vec2{gx, gy}, Vec2{-gx, 0.0}};
  }
  return b;
}

CoefficientVector interpolate(const CompositeSpace& space, const ScalarField& f) {
  CoefficientVector u(space.total_dofs());
  for (int sub = 0; sub < space.grid().n_subdomains(); ++sub) {
    const SubdomainMesh& m = space.mesh(sub);
    const int off = space.dof_offset(sub);
    for (int v = 0; v < m.n_vertices(); ++v) {
      const Vec2 p = m.vertex(v);
      u[off + v] = f.value(sub, p.x, p.y);
    }
  }
  return u;
}

double evaluate(const CompositeSpace& space, const CoefficientVector& coeffs,
                int sub, double x, double y) {
  const SubdomainMesh& m = space.mesh(sub);
  const P1Basis b = basis_at(m, locate_triangle(m, x, y), x, y);
  const int off = space.dof_offset(sub);
  double v = 0.0;
  for (int k = 0; k < 3; ++k) v += coeffs[off + b.vid[k]] * b.val[k];
  return v;
}

Vec2 evaluate_gradient(const CompositeSpace& space, const CoefficientVector& coeffs,
                       int sub, double x, double y) {
  const SubdomainMesh& m = space.mesh(sub);
  const P1Basis b = basis_at(m, locate_triangle(m, x, y), x, y);
  const int off = space.dof_offset(sub);
  Vec2 g{0.0, 0.0};
  for (int k = 0; k < 3; ++k) {
    g.x += coeffs[off + b.vid[k]] * b.grad[k].x;
    g.y += coeffs[off + b.vid[k]] * b.grad[k].y;
  }
  return g;
}

TracePair trace_pair(const CompositeSpace& space, const CoefficientVector& coeffs,
                     const InterfaceSegment& seg, double t) {
  if (t < seg.t0 - 1e-12 || t > seg.t1 + 1e-12)
    throw Error("trace_pair: parameter outside the segment");
  const CoarseEdge& e = space.grid().edges[seg.edge];
  const Vec2 p = e.at(t);

  auto side_value = [&](int sub, int tri) {
    const SubdomainMesh& m = space.mesh(sub);
    const P1Basis b = basis_at(m, tri, p.x, p.y);
    const int off = space.dof_offset(sub);
    double v = 0.0;
    for (int k = 0; k < 3; ++k) v += coeffs[off + b.vid[k]] * b.val[k];
    return v;
  };

  TracePair tp;
  tp.a = side_value(e.owner_a, seg.tri_a);
  if (seg.tri_b >= 0) {
    tp.b = side_value(e.owner_b, seg.tri_b);
    tp.two_sided = true;
  }
  return tp;
}

bool build_nested_conforming_check(const CompositeSpace& space) {
  for (std::size_t e = 0; e < space.grid().edges.size(); ++e) {
    const CoarseEdge& edge = space.grid().edges[e];
    if (!edge.is_interface()) continue;
    const SubdomainMesh& ma = space.mesh(edge.owner_a);
    const SubdomainMesh& mb = space.mesh(edge.owner_b);
    const int na = edge.horizontal() ? ma.nx : ma.ny;
    const int nb = edge.horizontal() ? mb.nx : mb.ny;
    const int fine = std::max(na, nb), coarse = std::min(na, nb);
    if (fine % coarse != 0) return false;
  }
  return true;
}

ScalarField as_field(const CompositeSpace& space, CoefficientVector coeffs) {
  auto held = std::make_shared<CoefficientVector>(std::move(coeffs));
  auto spc = std::make_shared<CompositeSpace>(space);
  return ScalarField(
      [spc, held](int sub, double x, double y) { return evaluate(*spc, *held, sub, x, y); },
      [spc, held](int sub, double x, double y) {
        return evaluate_gradient(*spc, *held, sub, x, y);
      });
}

} // namespace cdg
