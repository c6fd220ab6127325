// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "sdtn/spectral.hpp"

namespace sdtn {

enum class ModalFamily { polynomial, boundary_layer };

// Single-mode test function v = w(r) Y_{m,j} on the ball B_R satisfying the
// transparent boundary coupling w'(R) = (z_{m,nu}(sR)/R) w(R).
//
// polynomial:      w(r) = r^m (1 + c (r/R)^p), p = 2 (cubic escalation p = 3
//                  when the linear solve for c degenerates).
// boundary_layer:  w(r) = chi(r) * exterior radial profile, where the
//                  profile is Helmholtz-harmonic so the coupling holds by
//                  construction, and chi is a C^2 quintic cutoff that is 0
//                  on [0, R/2] and 1 on [3R/4, R].
struct ModalTestFunction {
  Mode mode;
  cplx s;
  double R;
  ModalFamily family;
  cplx z;  // z_{m,nu}(sR)
  cplx c = 0.0;
  int p = 2;

  cplx w(double r) const;
  cplx dw(double r) const;
  double coupling_residual() const;  // |w'(R) - z w(R)/R|
};

ModalTestFunction build_modal(const Mode& mode, cplx s, double R, ModalFamily family);

// Norms of v over B_R (or an annulus [a, b] x S_1 slice of it):
//   l2^2   = int |w|^2 r^{n-1} dr,
//   grad^2 = int (|w'|^2 + lambda_m |w|^2 / r^2) r^{n-1} dr.
struct RadialNorms {
  double l2_sq;
  double grad_sq;
};

RadialNorms radial_norms(const ModalTestFunction& v, double a, double b, int nodes);

struct VolumeNormBundle {
  double l2;
  double grad;
  double neumann_h_minus_half;  // (1+m)^{-1/2} R^{(n-1)/2} |w'(R)|
  double h1_indexed;            // sqrt(grad^2 + |s|^2 l2^2)
};

VolumeNormBundle volume_norms(const ModalTestFunction& v, int nodes = 64);

// ||v||_{L^2} / sqrt(||grad v||^2 + ||dr v||^2_{H^{-1/2}(S_R)}).
double friedrichs_ratio(const VolumeNormBundle& norms);
double friedrichs_ratio(const ModalTestFunction& v, int nodes = 64);

struct SweepRow {
  int n;
  double R;
  int m;
  ModalFamily family;
  cplx s;
  double ratio;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double max_ratio;
};

// Ratio sweep over modes, wavenumbers, and families; the max is an
// empirical witness for the Friedrichs constant. n = 2 runs are
// observe-only (the bound is asserted only for n >= 3).
SweepResult friedrichs_sweep(int n, double R, const std::vector<cplx>& s_grid, int m_max,
                             const std::vector<ModalFamily>& families, int nodes = 64,
                             bool observe_only = false);

struct CorollaryConstants {
  double c_f;       // Friedrichs witness from a sweep
  double c_omega1;  // normal-trace constant on the harmonic annulus
  double c_tr;      // trace constant witness
};

struct CorollaryReport {
  double l2;             // ||v||_{L^2(B_R)}
  double grad;           // ||grad v||
  double h1_indexed;     // ||v||_{H^1, s}
  double trace_indexed;  // ||v||_{H^{1/2}(S_R), s}
  double margin_l2;      // max{1, sqrt(1+Cw1^2) CF} ||v||_{H1,s} - ||v||_{L2}
  double margin_trace;   // C_tr ||v||_{H1,s} - ||v||_{H1/2,s}
  bool gradient_applicable;  // |s| <= 1/sqrt(2 max{1, Cw1 CF})
  double margin_gradient;    // 2 CF sqrt(1+Cw1^2) ||grad v|| - ||v||_{L2}
};

CorollaryReport corollary_check(const ModalTestFunction& v, const CorollaryConstants& constants,
                                int nodes = 64);

// max over the corpus of ||gamma_1 v||_{H^{-1/2}(S_R)} / |v|_{H^1(omega, Delta)}
// with omega the outer annulus [3R/4, R] where boundary-layer functions are
// Helmholtz-harmonic.
double measure_normal_trace_constant(const std::vector<ModalTestFunction>& corpus, int nodes = 64);

// max over the corpus of ||v||_{H^{1/2}(S_R), s} / ||v||_{H^1(B_R), s}
double measure_trace_constant(const std::vector<ModalTestFunction>& corpus, int nodes = 64);

}  // namespace sdtn
