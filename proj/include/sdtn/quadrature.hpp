// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace sdtn {

// Gauss-Legendre rule on [-1, 1], nodes ascending. Rules are computed by
// Newton iteration on the Legendre recurrence and cached per node count.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(int n);

// Integrate f over [a, b] with an n-point Gauss-Legendre rule.
template <class F>
auto integrate(F&& f, double a, double b, int n) {
  const GaussLegendre& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto sum = f(mid + half * rule.nodes[0]) * (half * rule.weights[0]);
  for (int i = 1; i < n; ++i)
    sum += f(mid + half * rule.nodes[i]) * (half * rule.weights[i]);
  return sum;
}

// Composite rule over consecutive panels given by breakpoints.
template <class F>
auto integrate_panels(F&& f, const std::vector<double>& breaks, int n) {
  auto sum = integrate(f, breaks[0], breaks[1], n);
  for (std::size_t i = 1; i + 1 < breaks.size(); ++i)
    sum += integrate(f, breaks[i], breaks[i + 1], n);
  return sum;
}

}  // namespace sdtn
