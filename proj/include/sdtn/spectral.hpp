// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sdtn/bessel.hpp"

namespace sdtn {

// One spherical-harmonic frequency: angular degree m in ambient dimension n.
struct Mode {
  int m;
  int n;
  Mode(int m_, int n_);
  double nu() const { return 0.5 * (n - 2); }
  double mu() const { return m + nu(); }
  Order order() const { return Order(mu()); }
  bool is_zero_mode() const { return m == 0 && n == 2; }  // (m, nu) == (0, 0)
};

// Diagonal DtN coefficient z_{m,nu}(s) = m - s K_{mu+1}(s)/K_mu(s) for
// Re s >= 0, with the continuous extension z_{m,nu}(0) = -(m + 2 nu).
cplx z_coefficient(const Mode& mode, cplx s);

// Logarithmic derivative of the Hankel function on the positive real axis:
// w_mu(k) = k (H^(1)_mu)'(k) / H^(1)_mu(k), computed from the Hankel modulus
// as Re w = (k/2) (M^2)'/M^2 and Im w = 2/(pi M^2).
cplx w_mu(const Order& mu, double k);

// c_2 = k_0/(8 k_0^2 - 1) + 2/(pi M_0^2(k_0)) for any k_0 > 2^{-3/2}; the
// witness constant in the imaginary-part bound for the (0,0) mode.
double calibrate_c2(double k0);

// Margins for the coefficient bounds: for (m,nu) != (0,0),
//   nu + 1/2 <= -Re z <= m + 2 nu + Re s   and  0 < -+Im z <= |Im s|,
// and for the (0,0) mode the relaxed variants with the constant c2.
struct BoundReport {
  Mode mode;
  cplx s;
  cplx z;
  double c2;
  double re_low_margin;   // -Re z minus its lower bound
  double re_high_margin;  // upper bound minus -Re z
  bool im_checked;        // false when Im s == 0
  double im_strict;       // -+Im z, must be positive when im_checked
  double im_high_margin;  // upper bound minus -+Im z
};

BoundReport check_bounds(const Mode& mode, cplx s, double c2);

// Margin computation on a caller-supplied coefficient value (used by the
// sweep drivers and by fault-injection hooks).
BoundReport check_bounds_value(const Mode& mode, cplx s, cplx z, double c2);

}  // namespace sdtn
