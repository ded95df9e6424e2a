#include <cdg/quadrature.hpp>
#include <cdg/errors.hpp>

#include <cmath>

namespace cdg {

namespace {

TriangleRule make_triangle_rule(int degree) {
  TriangleRule r;
  r.degree = degree;
  auto orbit3 = [&r](double a, double w) {
    r.points.push_back({a, a});
    r.points.push_back({1.0 - 2.0 * a, a});
    r.points.push_back({a, 1.0 - 2.0 * a});
    r.weights.insert(r.weights.end(), 3, w);
  };
  auto orbit6 = [&r](double a, double b, double w) {
    const double c = 1.0 - a - b;
    r.points.push_back({a, b});
    r.points.push_back({b, a});
    r.points.push_back({a, c});
    r.points.push_back({c, a});
    r.points.push_back({b, c});
    r.points.push_back({c, b});
    r.weights.insert(r.weights.end(), 6, w);
  };
  switch (degree) {
    case 1:
      r.points.push_back({1.0 / 3.0, 1.0 / 3.0});
      r.weights.push_back(1.0);
      break;
    case 2:
      orbit3(1.0 / 6.0, 1.0 / 3.0);
      break;
    case 4: // Dunavant, 6 points
      orbit3(0.445948490915965, 0.223381589678011);
      orbit3(0.091576213509771, 0.109951743655322);
      break;
    case 6: // Dunavant, 12 points
      orbit3(0.249286745170910, 0.116786275726379);
      orbit3(0.063089014491502, 0.050844906370207);
      orbit6(0.310352451033785, 0.636502499121399, 0.082851075618374);
      break;
    default:
      throw UnsupportedDegree("triangle_rule: degree must be one of {1,2,4,6}");
  }
  return r;
}

SegmentRule make_segment_rule(int degree) {
  SegmentRule r;
  r.degree = degree;
  switch (degree) {
    case 1:
      r.points = {0.5};
      r.weights = {1.0};
      break;
    case 3: {
      const double d = 0.5 / std::sqrt(3.0);
      r.points = {0.5 - d, 0.5 + d};
      r.weights = {0.5, 0.5};
      break;
    }
    case 5: {
      const double d = 0.5 * std::sqrt(0.6);
      r.points = {0.5 - d, 0.5, 0.5 + d};
      r.weights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
      break;
    }
    default:
      throw UnsupportedDegree("segment_rule: degree must be one of {1,3,5}");
  }
  return r;
}

} // namespace

const TriangleRule& triangle_rule(int degree) {
  switch (degree) {
    case 1: { static const TriangleRule r = make_triangle_rule(1); return r; }
    case 2: { static const TriangleRule r = make_triangle_rule(2); return r; }
    case 4: { static const TriangleRule r = make_triangle_rule(4); return r; }
    case 6: { static const TriangleRule r = make_triangle_rule(6); return r; }
    default:
      throw UnsupportedDegree("triangle_rule: degree must be one of {1,2,4,6}");
  }
}

const SegmentRule& segment_rule(int degree) {
  switch (degree) {
    case 1: { static const SegmentRule r = make_segment_rule(1); return r; }
    case 3: { static const SegmentRule r = make_segment_rule(3); return r; }
    case 5: { static const SegmentRule r = make_segment_rule(5); return r; }
    default:
      throw UnsupportedDegree("segment_rule: degree must be one of {1,3,5}");
  }
}

} // namespace cdg
