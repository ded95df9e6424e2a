#ifndef CDG_QUADRATURE_HPP
#define CDG_QUADRATURE_HPP

#include <array>
#include <vector>

namespace cdg {

/// Quadrature rule on the reference triangle {x,y >= 0, x+y <= 1}.
/// Weights sum to 1; a physical integral is |T| * sum_q w_q f(x_q).
struct TriangleRule {
  struct Point { double x, y; };
  std::vector<Point> points;
  std::vector<double> weights;
  int degree = 0; // all polynomials of total degree <= degree are exact
};

/// Gauss rule on [0,1]; weights sum to 1, integral = |e| * sum w_q f(t_q).
struct SegmentRule {
  std::vector<double> points;
  std::vector<double> weights;
  int degree = 0;
};

/// Supported degrees: 1, 2, 4, 6. Throws UnsupportedDegree otherwise.
const TriangleRule& triangle_rule(int degree);

/// Supported degrees: 1, 3, 5 (midpoint, 2-pt and 3-pt Gauss).
const SegmentRule& segment_rule(int degree);

} // namespace cdg

#endif
