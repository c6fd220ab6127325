// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sdtn/bessel.hpp"

namespace sdtn {

// Squared modulus M_mu^2(x) = J_mu^2(x) + Y_mu^2(x) of the Hankel function
// H^(1)_mu on the positive real axis, together with its x-derivative.
struct ModulusPoint {
  double x;
  double mu;
  double m_sq;   // M_mu^2(x) > 0
  double dm_sq;  // d/dx M_mu^2(x) < 0
};

ModulusPoint hankel_modulus_sq(const Order& mu, double x);

// Quadrature budget for the Nicholson integral.
struct QuadratureSpec {
  int panel_nodes = 24;      // Gauss-Legendre nodes per panel
  double truncation_u = 0;   // upper limit in u = sinh t; 0 selects it from the tail bound
  double tolerance = 1e-10;  // certified absolute error target, scaled by max(1, result)
};

// Independent oracle for hankel_modulus_sq:
//   M_mu^2(x) = (8/pi^2) Integral_0^inf cosh(2 mu t) K_0(2 x sinh t) dt.
// Substitutes u = sinh t, splits at u = 1, and uses composite Gauss-Legendre
// panels (dyadic toward the logarithmic endpoint, exponentially mapped on
// the tail). The internal K_0 evaluation is a dedicated real-axis routine,
// not the complex-argument machinery the direct path uses.
double nicholson_modulus_sq(const Order& mu, double x, const QuadratureSpec& spec = {});

// Real-axis K_0, used by the Nicholson oracle; exposed for tests.
double bessel_k0_real(double x);

}  // namespace sdtn
