#include <cdg/problem.hpp>
#include <cdg/errors.hpp>

#include <algorithm>
#include <cmath>

namespace cdg {

ProblemSpec make_layered_problem(const LayerStack& stack) {
  if (stack.layers.empty()) throw Error("make_layered_problem: no layers");

  const auto& ls = stack.layers;
  auto pick = [ls](int sub) -> const Layer& {
    if (sub < 0 || sub >= static_cast<int>(ls.size()))
      throw EvaluationError("layered field: subdomain index is not a layer");
    return ls[sub];
  };

  ProblemSpec p;
  p.epsilon = ScalarField([pick](int sub, double, double) { return pick(sub).eps; },
                          [](int, double, double) { return Vec2{0.0, 0.0}; });
  p.k1 = ScalarField([pick](int sub, double, double) { return pick(sub).k1; },
                     [](int, double, double) { return Vec2{0.0, 0.0}; });
  p.v_hat = ScalarField([pick](int sub, double, double) { return pick(sub).v_hat; });
  p.w_hat = ScalarField([pick](int sub, double, double) { return pick(sub).w_hat; });

  const double y_mid = 0.5 * (ls.front().lo + ls.back().hi);
  const double u_lo = stack.u_lo, u_hi = stack.u_hi;
  p.u_hat = ScalarField([y_mid, u_lo, u_hi](int, double, double y) {
    return (y < y_mid) ? u_lo : u_hi;
  });

  p.eps_min = ls.front().eps;
  p.eps_max = ls.front().eps;
  for (const Layer& l : ls) {
    p.eps_min = std::min(p.eps_min, l.eps);
    p.eps_max = std::max(p.eps_max, l.eps);
  }
  p.layered = stack;
  return p;
}

} // namespace cdg
