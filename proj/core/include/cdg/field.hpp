#ifndef CDG_FIELD_HPP
#define CDG_FIELD_HPP

#include <cdg/errors.hpp>
#include <cdg/geometry.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace cdg {

/// Scalar function of position, evaluated one-sided per subdomain so that
/// discontinuous data (permittivity, doping) are unambiguous on interfaces.
/// The gradient callable is optional; error norms need it, assembly of the
/// problem data does not.
class ScalarField {
 public:
  using Value = std::function<double(int, double, double)>;
  using Gradient = std::function<Vec2(int, double, double)>;

  ScalarField() = default;
  explicit ScalarField(Value v, Gradient g = nullptr)
      : value_(std::move(v)), gradient_(std::move(g)) {}

  static ScalarField constant(double c) {
    return ScalarField([c](int, double, double) { return c; },
                       [](int, double, double) { return Vec2{0.0, 0.0}; });
  }

  /// Globally defined smooth function; the subdomain index is ignored.
  static ScalarField of(std::function<double(double, double)> f,
                        std::function<Vec2(double, double)> g = nullptr) {
    Gradient grad = nullptr;
    if (g) grad = [g](int, double x, double y) { return g(x, y); };
    return ScalarField([f](int, double x, double y) { return f(x, y); }, grad);
  }

  /// One constant per subdomain.
  static ScalarField per_subdomain(std::vector<double> vals) {
    return ScalarField(
        [vals](int sub, double, double) { return vals.at(sub); },
        [](int, double, double) { return Vec2{0.0, 0.0}; });
  }

  double value(int sub, double x, double y) const {
    if (!value_) throw EvaluationError("ScalarField: no value callable");
    return value_(sub, x, y);
  }
  Vec2 gradient(int sub, double x, double y) const {
    if (!gradient_) throw EvaluationError("ScalarField: no gradient callable");
    return gradient_(sub, x, y);
  }
  bool has_value() const { return static_cast<bool>(value_); }
  bool has_gradient() const { return static_cast<bool>(gradient_); }

 private:
  Value value_;
  Gradient gradient_;
};

} // namespace cdg

#endif
