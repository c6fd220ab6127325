// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sdtn/dtn.hpp"

namespace sdtn {

// Radial factor of one mode of the exterior solution, normalized to 1 at
// r = R: (R/r)^nu K_mu(sr)/K_mu(sR) for Helmholtz, (R/r)^{m+2nu} for
// Laplace, log r / log R for the logarithmic n = 2 constant mode.
struct RadialEval {
  cplx value;
  cplx derivative;        // d/dr
  bool underflow = false;  // true when e^{-s(r-R)} is below the double range
};

RadialEval radial_factor(const Mode& mode, const DtnKind& kind, double R, double r);

// Same factor with the e^{-s(r-R)} decay removed (Helmholtz only; identical
// to radial_factor otherwise). Both fields carry the common scaling:
// true value = e^{-s(r-R)} * value, true derivative = e^{-s(r-R)} * derivative.
RadialEval radial_factor_scaled(const Mode& mode, const DtnKind& kind, double R, double r);

struct ExteriorField {
  BoundaryCoefficients g;  // Dirichlet data on S_R
  DtnKind kind;
};

struct ExteriorPoint {
  double r;
  double theta;
  double phi = 0.0;
};

// u(r xi) = sum radial_factor(m) g_{m,j} Y_{m,j}(xi); n in {2, 3}.
std::vector<cplx> evaluate_exterior(const ExteriorField& field,
                                    const std::vector<ExteriorPoint>& points);

// Max norm of the centered-difference residual of
//   -r^{1-n} (r^{n-1} u')' + (m(m+n-2)/r^2 + s^2) u
// applied to the radial factor on a uniform grid of npts points in
// [r0, r1]; second order in the spacing.
double ode_residual(const Mode& mode, const DtnKind& kind, double R, double r0, double r1,
                    int npts);

// Radiation quantity q(r) = r^{(n-1)/2} |u' + s u| per mode, reported in
// log form so wide ranges of r stay representable.
struct DecaySample {
  double r;
  double log_q;
};

std::vector<DecaySample> radiation_check(const Mode& mode, const DtnKind& kind, double R,
                                         const std::vector<double>& radii);

// Per-mode weights of the annulus H^1 norm of the Laplace exterior
// solution on B_R^+ intersected with B_d:
//   F^2 = int_R^d (R/r)^{2m+4nu} r^{n-1} dr,
//   G^2 = int_R^d |d/dr (R/r)^{m+2nu}|^2 r^{n-1} dr,
//   H^2 = int_R^d m^2/r^2 (R/r)^{2m+4nu} r^{n-1} dr.
struct ModeAnnulus {
  double f_sq;
  double g_sq;
  double h_sq;
  double sum() const { return f_sq + g_sq + h_sq; }
};

ModeAnnulus annulus_fgh(int m, int n, double R, double d);                  // antiderivatives
ModeAnnulus annulus_fgh_quadrature(int m, int n, double R, double d, int nodes);

struct AnnulusNorm {
  double d;
  std::vector<ModeAnnulus> per_mode;  // indexed by m = 0..band
  double total;                       // sqrt(sum (F^2+G^2+H^2) |g_{m,j}|^2)
};

AnnulusNorm annulus_h1_norm(const BoundaryCoefficients& g, double d);

}  // namespace sdtn
