#include <cdg/geometry.hpp>
#include <cdg/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace cdg {

namespace {

double scale_of(const Rect& r) { return std::max(r.width(), r.height()); }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Index of v in the sorted coordinate list, -1 if absent.
int find_coord(const std::vector<double>& coords, double v, double tol) {
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (close(coords[k], v, tol)) return static_cast<int>(k);
  return -1;
}

} // namespace

double CoarseEdge::length() const {
  return std::hypot(p1.x - p0.x, p1.y - p0.y);
}

Vec2 CoarseEdge::at(double t) const {
  return {p0.x + t * (p1.x - p0.x), p0.y + t * (p1.y - p0.y)};
}

bool CoarseGrid::classified() const {
  for (const auto& e : edges)
    if (e.kind == EdgeKind::Unclassified) return false;
  return true;
}

int CoarseGrid::count(EdgeKind k) const {
  int n = 0;
  for (const auto& e : edges) n += (e.kind == k) ? 1 : 0;
  return n;
}

Vec2 SubdomainMesh::vertex(int v) const {
  const int i = v % (nx + 1);
  const int j = v / (nx + 1);
  const double x = (i == nx) ? rect.x1 : rect.x0 + i * dx;
  const double y = (j == ny) ? rect.y1 : rect.y0 + j * dy;
  return {x, y};
}

std::array<int, 3> SubdomainMesh::triangle(int t) const {
  const int cell = t / 2;
  const int i = cell % nx;
  const int j = cell / nx;
  const int v00 = vertex_id(i, j);
  const int v10 = vertex_id(i + 1, j);
  const int v01 = vertex_id(i, j + 1);
  const int v11 = vertex_id(i + 1, j + 1);
  if (t % 2 == 0) return {v00, v10, v01};
  return {v10, v11, v01};
}

Side side_of(const CoarseEdge& e, const Rect& r) {
  const double tol = 1e-12 * scale_of(r);
  if (e.horizontal()) {
    if (close(e.p0.y, r.y0, tol)) return Side::Bottom;
    if (close(e.p0.y, r.y1, tol)) return Side::Top;
  } else {
    if (close(e.p0.x, r.x0, tol)) return Side::Left;
    if (close(e.p0.x, r.x1, tol)) return Side::Right;
  }
  throw Error("side_of: edge does not lie on a side of the rectangle");
}

CoarseGrid build_coarse_grid(const Rect& domain,
                             const std::vector<double>& x_cuts,
                             const std::vector<double>& y_cuts,
                             const std::vector<Rect>& merge_spec) {
  if (!(domain.x0 < domain.x1 && domain.y0 < domain.y1))
    throw Error("build_coarse_grid: degenerate domain rectangle");
  const double tol = 1e-12 * scale_of(domain);

  auto check_cuts = [&](const std::vector<double>& cuts, double lo, double hi,
                        const char* name) {
    double prev = lo;
    for (double c : cuts) {
      if (!(c > prev + tol && c < hi - tol)) {
        std::ostringstream os;
        os << "build_coarse_grid: " << name
           << " cuts must be strictly increasing and strictly inside the domain";
        throw Error(os.str());
      }
      prev = c;
    }
  };
  check_cuts(x_cuts, domain.x0, domain.x1, "x");
  check_cuts(y_cuts, domain.y0, domain.y1, "y");

  std::vector<double> xs, ys;
  xs.push_back(domain.x0);
  xs.insert(xs.end(), x_cuts.begin(), x_cuts.end());
  xs.push_back(domain.x1);
  ys.push_back(domain.y0);
  ys.insert(ys.end(), y_cuts.begin(), y_cuts.end());
  ys.push_back(domain.y1);
  const int ncx = static_cast<int>(xs.size()) - 1;
  const int ncy = static_cast<int>(ys.size()) - 1;

  // -1: unmerged cell, otherwise the merge group the cell belongs to.
  std::vector<int> group(static_cast<std::size_t>(ncx) * ncy, -1);
  auto cell = [&](int i, int j) -> int& { return group[static_cast<std::size_t>(j) * ncx + i]; };

  std::vector<Rect> merged_rects;
  for (const Rect& m : merge_spec) {
    const int ix0 = find_coord(xs, m.x0, tol);
    const int ix1 = find_coord(xs, m.x1, tol);
    const int iy0 = find_coord(ys, m.y0, tol);
    const int iy1 = find_coord(ys, m.y1, tol);
    if (ix0 < 0 || ix1 < 0 || iy0 < 0 || iy1 < 0 || ix0 >= ix1 || iy0 >= iy1)
      throw OverlapError("build_coarse_grid: merge is not a cut-aligned rectangle");
    const int id = static_cast<int>(merged_rects.size());
    for (int j = iy0; j < iy1; ++j)
      for (int i = ix0; i < ix1; ++i) {
        if (cell(i, j) != -1)
          throw OverlapError("build_coarse_grid: merges overlap");
        cell(i, j) = id;
      }
    // snap to the matched cut coordinates
    merged_rects.push_back({xs[ix0], xs[ix1], ys[iy0], ys[iy1]});
  }

  CoarseGrid g;
  g.domain = domain;
  for (int j = 0; j < ncy; ++j)
    for (int i = 0; i < ncx; ++i)
      if (cell(i, j) == -1)
        g.subdomains.push_back({xs[i], xs[i + 1], ys[j], ys[j + 1]});
  g.subdomains.insert(g.subdomains.end(), merged_rects.begin(), merged_rects.end());

  std::sort(g.subdomains.begin(), g.subdomains.end(), [](const Rect& a, const Rect& b) {
    if (a.y0 != b.y0) return a.y0 < b.y0;
    return a.x0 < b.x0;
  });

  double area = 0.0;
  for (const Rect& r : g.subdomains) area += r.area();
  if (std::abs(area - domain.area()) > 1e-12 * domain.area())
    throw Error("build_coarse_grid: subdomain areas do not sum to the domain area");

  const int n = g.n_subdomains();

  // A side is matched if some other subdomain shares it as its full side.
  auto facing = [&](int i, Side s) -> int {
    const Rect& a = g.subdomains[i];
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rect& b = g.subdomains[j];
      bool touch = false, full = false;
      switch (s) {
        case Side::Right:
          touch = close(a.x1, b.x0, tol) && std::min(a.y1, b.y1) - std::max(a.y0, b.y0) > tol;
          full = touch && close(a.y0, b.y0, tol) && close(a.y1, b.y1, tol);
          break;
        case Side::Left:
          touch = close(a.x0, b.x1, tol) && std::min(a.y1, b.y1) - std::max(a.y0, b.y0) > tol;
          full = touch && close(a.y0, b.y0, tol) && close(a.y1, b.y1, tol);
          break;
        case Side::Top:
          touch = close(a.y1, b.y0, tol) && std::min(a.x1, b.x1) - std::max(a.x0, b.x0) > tol;
          full = touch && close(a.x0, b.x0, tol) && close(a.x1, b.x1, tol);
          break;
        case Side::Bottom:
          touch = close(a.y0, b.y1, tol) && std::min(a.x1, b.x1) - std::max(a.x0, b.x0) > tol;
          full = touch && close(a.x0, b.x0, tol) && close(a.x1, b.x1, tol);
          break;
      }
      if (touch && !full)
        throw HangingEdgeError(
            "build_coarse_grid: partition is not conforming (partial side contact)");
      if (full) return j;
    }
    return -1;
  };

  auto on_boundary = [&](int i, Side s) {
    const Rect& a = g.subdomains[i];
    switch (s) {
      case Side::Bottom: return close(a.y0, domain.y0, tol);
      case Side::Top:    return close(a.y1, domain.y1, tol);
      case Side::Left:   return close(a.x0, domain.x0, tol);
      case Side::Right:  return close(a.x1, domain.x1, tol);
    }
    return false;
  };

  auto side_edge = [&](int i, Side s) {
    const Rect& a = g.subdomains[i];
    CoarseEdge e;
    switch (s) {
      case Side::Bottom: e.p0 = {a.x0, a.y0}; e.p1 = {a.x1, a.y0}; e.normal = {0, -1}; break;
      case Side::Top:    e.p0 = {a.x0, a.y1}; e.p1 = {a.x1, a.y1}; e.normal = {0, 1};  break;
      case Side::Left:   e.p0 = {a.x0, a.y0}; e.p1 = {a.x0, a.y1}; e.normal = {-1, 0}; break;
      case Side::Right:  e.p0 = {a.x1, a.y0}; e.p1 = {a.x1, a.y1}; e.normal = {1, 0};  break;
    }
    return e;
  };

  g.neighbors.assign(n, {});
  g.edges_of.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (Side s : {Side::Bottom, Side::Right, Side::Top, Side::Left}) {
      const int j = facing(i, s);
      if (j < 0) {
        if (!on_boundary(i, s))
          throw HangingEdgeError("build_coarse_grid: interior side with no facing subdomain");
        CoarseEdge e = side_edge(i, s);
        e.owner_a = i;
        const int id = static_cast<int>(g.edges.size());
        g.edges.push_back(e);
        g.edges_of[i].push_back(id);
      } else if (i < j) {
        // emit each interface once, owned by the lower index; the sort by
        // (y0, x0) guarantees the normal points in the +x / +y direction
        CoarseEdge e = side_edge(i, s);
        e.kind = EdgeKind::Interface;
        e.owner_a = i;
        e.owner_b = j;
        e.normal = e.horizontal() ? Vec2{0, 1} : Vec2{1, 0};
        const int id = static_cast<int>(g.edges.size());
        g.edges.push_back(e);
        g.edges_of[i].push_back(id);
        g.edges_of[j].push_back(id);
        g.neighbors[i].push_back(j);
        g.neighbors[j].push_back(i);
      }
    }
  }
  return g;
}

CoarseGrid classify_edges(const CoarseGrid& grid,
                          const std::vector<SideInterval>& boundary_spec) {
  CoarseGrid g = grid;
  const double tol = 1e-12 * scale_of(g.domain);

  auto domain_side = [&](const CoarseEdge& e) -> Side {
    return side_of(e, g.domain);
  };

  for (auto& e : g.edges) {
    if (e.is_interface()) continue;
    const Side s = domain_side(e);
    const bool horiz = e.horizontal();
    const double lo = horiz ? e.p0.x : e.p0.y;
    const double hi = horiz ? e.p1.x : e.p1.y;

    const SideInterval* cover = nullptr;
    for (const auto& iv : boundary_spec) {
      if (iv.side != s) continue;
      const bool inside = iv.from <= lo + tol && hi <= iv.to + tol;
      const bool disjoint = iv.to <= lo + tol || hi <= iv.from + tol;
      if (inside) {
        cover = &iv;
        break;
      }
      if (!disjoint)
        throw StraddleError(
            "classify_edges: a coarse edge crosses a boundary-condition breakpoint; "
            "add a matching cut to the grid");
    }
    if (!cover)
      throw StraddleError("classify_edges: boundary edge not covered by any declared interval");
    e.kind = cover->kind;
    if (cover->kind == EdgeKind::Dirichlet) e.dirichlet_label = cover->dirichlet_label;
  }
  return g;
}

SubdomainMesh build_subdomain_mesh(const Rect& rect, int nx, int ny, int owner) {
  if (nx < 1 || ny < 1)
    throw Error("build_subdomain_mesh: nx and ny must be positive");
  SubdomainMesh m;
  m.owner = owner;
  m.rect = rect;
  m.nx = nx;
  m.ny = ny;
  m.dx = rect.width() / nx;
  m.dy = rect.height() / ny;
  m.h = std::sqrt(m.dx * m.dx + m.dy * m.dy);
  return m;
}

std::vector<InterfaceSegment> merge_interface_breakpoints(
    const CoarseGrid& grid, int edge_id,
    const SubdomainMesh& mesh_a, const SubdomainMesh* mesh_b) {
  const CoarseEdge& e = grid.edges.at(edge_id);
  if (e.owner_a != mesh_a.owner)
    throw Error("merge_interface_breakpoints: mesh_a does not own the edge");
  if (e.is_interface() && (!mesh_b || e.owner_b != mesh_b->owner))
    throw Error("merge_interface_breakpoints: interface edge needs both owner meshes");

  const double len = e.length();
  const double tol = 1e-12;

  // The edge is a full side of each owner; verify the mesh rect agrees.
  auto check_span = [&](const SubdomainMesh& m) {
    const Side s = side_of(e, m.rect);
    Vec2 s0, s1;
    switch (s) {
      case Side::Bottom: s0 = {m.rect.x0, m.rect.y0}; s1 = {m.rect.x1, m.rect.y0}; break;
      case Side::Top:    s0 = {m.rect.x0, m.rect.y1}; s1 = {m.rect.x1, m.rect.y1}; break;
      case Side::Left:   s0 = {m.rect.x0, m.rect.y0}; s1 = {m.rect.x0, m.rect.y1}; break;
      case Side::Right:  s0 = {m.rect.x1, m.rect.y0}; s1 = {m.rect.x1, m.rect.y1}; break;
    }
    if (std::hypot(s0.x - e.p0.x, s0.y - e.p0.y) > tol * len ||
        std::hypot(s1.x - e.p1.x, s1.y - e.p1.y) > tol * len)
      throw AlignmentError("merge_interface_breakpoints: mesh side does not match the edge");
    return s;
  };

  const Side side_a = check_span(mesh_a);
  const int n_a = e.horizontal() ? mesh_a.nx : mesh_a.ny;

  std::vector<double> ts;
  for (int k = 0; k <= n_a; ++k) ts.push_back(static_cast<double>(k) / n_a);

  Side side_b = Side::Bottom;
  int n_b = 0;
  if (mesh_b) {
    side_b = check_span(*mesh_b);
    n_b = e.horizontal() ? mesh_b->nx : mesh_b->ny;
    for (int k = 0; k <= n_b; ++k) ts.push_back(static_cast<double>(k) / n_b);
  }

  std::sort(ts.begin(), ts.end());
  std::vector<double> bp;
  for (double t : ts)
    if (bp.empty() || t - bp.back() > tol) bp.push_back(t);
  // snap the exact endpoints
  bp.front() = 0.0;
  bp.back() = 1.0;

  auto owning_triangle = [](const SubdomainMesh& m, Side s, double tmid) -> int {
    const int n = (s == Side::Bottom || s == Side::Top) ? m.nx : m.ny;
    int c = static_cast<int>(tmid * n);
    c = std::clamp(c, 0, n - 1);
    switch (s) {
      case Side::Bottom: return 2 * c;                          // lower triangle of cell (c,0)
      case Side::Top:    return 2 * ((m.ny - 1) * m.nx + c) + 1; // upper of cell (c,ny-1)
      case Side::Left:   return 2 * (c * m.nx);                 // lower of cell (0,c)
      case Side::Right:  return 2 * (c * m.nx + m.nx - 1) + 1;  // upper of cell (nx-1,c)
    }
    return -1;
  };

  std::vector<InterfaceSegment> segs;
  segs.reserve(bp.size() - 1);
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    InterfaceSegment s;
    s.edge = edge_id;
    s.t0 = bp[k];
    s.t1 = bp[k + 1];
    const double mid = 0.5 * (s.t0 + s.t1);
    s.tri_a = owning_triangle(mesh_a, side_a, mid);
    if (mesh_b) s.tri_b = owning_triangle(*mesh_b, side_b, mid);
    segs.push_back(s);
  }
  return segs;
}

} // namespace cdg
