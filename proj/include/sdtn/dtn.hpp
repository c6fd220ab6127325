// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sdtn/harmonics.hpp"
#include "sdtn/spectral.hpp"

namespace sdtn {

// Which exterior problem the operator belongs to. laplace_log is the n = 2
// Laplace variant whose solution may grow logarithmically; it requires
// R != 1.
struct DtnKind {
  enum class Variant { helmholtz, laplace, laplace_log };
  Variant variant = Variant::laplace;
  cplx s{0.0, 0.0};  // wavenumber, helmholtz only

  static DtnKind helmholtz(cplx s);
  static DtnKind laplace() { return {Variant::laplace, {0.0, 0.0}}; }
  static DtnKind laplace_log() { return {Variant::laplace_log, {0.0, 0.0}}; }
};

// Diagonal symbol of the operator on mode m: z_{m,nu}(sR)/R for Helmholtz,
// -(m + 2 nu)/R for Laplace, and 1/(R log R) on the constant mode for the
// logarithmic variant.
cplx dtn_multiplier(const DtnKind& kind, int m, int n, double R);

// The operator itself, acting diagonally on the coefficients.
BoundaryCoefficients apply_dtn(const DtnKind& kind, const BoundaryCoefficients& g);

// <DtN g, conj h>_{S_R} = R^{n-2} sum z_{m,nu}(sR) g_{m,j} conj(h_{m,j});
// symmetric in g and h under the bilinear pairing.
struct FormValue {
  cplx value;
  double re() const { return value.real(); }
  double im() const { return value.imag(); }
};

FormValue dtn_form(const DtnKind& kind, const BoundaryCoefficients& g,
                   const BoundaryCoefficients& h);

// L^2(S_R) pairing <a, conj b> = R^{n-1} sum a_{m,j} conj(b_{m,j}).
cplx surface_pairing(const BoundaryCoefficients& a, const BoundaryCoefficients& b);

// Sobolev norm of fractional order in {-1/2, 0, +1/2}:
//   ||g||^2 = R^{n-1} sum (1+m)^{2 order} |g_{m,j}|^2.
double sobolev_norm(const BoundaryCoefficients& g, double order);

// Wavenumber-indexed trace norm sqrt(||g||_{H^{1/2}}^2 + |s| ||g||_{L^2}^2).
double indexed_trace_norm(const BoundaryCoefficients& g, cplx s);

// Sign and boundedness data for the quadratic form at one g != 0.
struct DefinitenessReport {
  cplx form;              // <DtN g, conj g>
  double l2_sq;           // ||g||^2_{L^2(S_R)}
  double indexed_sq;      // ||g||^2_{H^{1/2}(S_R), s}
  double lower_constant;  // (n-2)/(2R), the scaling of the exact R = 1 constant
  double lower_margin;    // -Re form - lower_constant * l2_sq
  double upper_ratio;     // -Re form / indexed_sq, data for fitting C(n)
  double im_part;         // Im form
  int im_expected_sign;   // -sign(Im s), 0 for real s
};

DefinitenessReport definiteness_report(const DtnKind& kind, const BoundaryCoefficients& g);

}  // namespace sdtn
