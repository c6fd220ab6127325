// SPDX-License-Identifier: Apache-2.0

#include "sdtn/friedrichs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sdtn/exterior.hpp"
#include "sdtn/harmonics.hpp"
#include "sdtn/quadrature.hpp"

namespace sdtn {

namespace {

// C^2 quintic step: 0 below a, 1 above b, 6t^5 - 15t^4 + 10t^3 between.
double smoothstep(double r, double a, double b) {
  if (r <= a) return 0.0;
  if (r >= b) return 1.0;
  const double t = (r - a) / (b - a);
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double smoothstep_deriv(double r, double a, double b) {
  if (r <= a || r >= b) return 0.0;
  const double t = (r - a) / (b - a);
  return 30.0 * t * t * (1.0 + t * (-2.0 + t)) / (b - a);
}

// Exterior radial profile continued into r < R; Helmholtz-harmonic, equals
// 1 at r = R, with logarithmic derivative m/r - s K_{mu+1}(sr)/K_mu(sr).
cplx profile_value(const ModalTestFunction& v, double r) {
  if (v.s == cplx(0.0)) return std::pow(v.R / r, v.mode.m + 2.0 * v.mode.nu());
  const Order mu = v.mode.order();
  const cplx scale = std::exp(-v.s * (r - v.R));
  return std::pow(v.R / r, v.mode.nu()) * scale * bessel_k_scaled(mu, v.s * r) /
         bessel_k_scaled(mu, v.s * v.R);
}

cplx profile_dlog(const ModalTestFunction& v, double r) {
  if (v.s == cplx(0.0)) return cplx(-(v.mode.m + 2.0 * v.mode.nu()) / r);
  return cplx(v.mode.m, 0.0) / r - v.s * bessel_k_ratio(v.mode.order(), v.s * r);
}

}  // namespace

cplx ModalTestFunction::w(double r) const {
  if (family == ModalFamily::polynomial) {
    const cplx corr = 1.0 + c * std::pow(r / R, p);
    return std::pow(r, mode.m) * corr;
  }
  const double chi = smoothstep(r, 0.5 * R, 0.75 * R);
  if (chi == 0.0) return cplx(0.0);
  return chi * profile_value(*this, r);
}

cplx ModalTestFunction::dw(double r) const {
  if (family == ModalFamily::polynomial) {
    const double rm = std::pow(r, mode.m);
    const cplx corr = 1.0 + c * std::pow(r / R, p);
    cplx d = c * double(p) * std::pow(r / R, p) / r * rm;
    if (mode.m > 0) d += mode.m * rm / r * corr;
    return d;
  }
  const double chi = smoothstep(r, 0.5 * R, 0.75 * R);
  const double dchi = smoothstep_deriv(r, 0.5 * R, 0.75 * R);
  if (chi == 0.0 && dchi == 0.0) return cplx(0.0);
  const cplx pv = profile_value(*this, r);
  return dchi * pv + chi * pv * profile_dlog(*this, r);
}

double ModalTestFunction::coupling_residual() const {
  return std::abs(dw(R) - z * w(R) / R);
}

ModalTestFunction build_modal(const Mode& mode, cplx s, double R, ModalFamily family) {
  if (!(R > 0.0)) throw std::domain_error("build_modal: radius must be positive");
  ModalTestFunction v{mode, s, R, family, z_coefficient(mode, s * R)};
  if (family == ModalFamily::polynomial) {
    // coupling: m + c (m + p) = z (1 + c)  =>  c = (z - m)/(m + p - z)
    for (int p = 2; p <= 3; ++p) {
      const cplx denom = cplx(mode.m + p, 0.0) - v.z;
      if (std::abs(denom) < 1e-12) continue;
      v.p = p;
      v.c = (v.z - cplx(mode.m, 0.0)) / denom;
      return v;
    }
    throw std::runtime_error("build_modal: polynomial correction degenerated for both degrees");
  }
  return v;
}

RadialNorms radial_norms(const ModalTestFunction& v, double a, double b, int nodes) {
  const double lambda = eigenvalue(v.mode.m, v.mode.n);
  const double n1 = v.mode.n - 1.0;
  auto l2_density = [&](double r) { return std::norm(v.w(r)) * std::pow(r, n1); };
  auto grad_density = [&](double r) {
    return (std::norm(v.dw(r)) + lambda * std::norm(v.w(r)) / (r * r)) * std::pow(r, n1);
  };
  // split at the cutoff breakpoints so every panel is smooth
  std::vector<double> breaks{a};
  for (double x : {0.5 * v.R, 0.75 * v.R})
    if (x > a && x < b) breaks.push_back(x);
  breaks.push_back(b);
  return {integrate_panels(l2_density, breaks, nodes),
          integrate_panels(grad_density, breaks, nodes)};
}

VolumeNormBundle volume_norms(const ModalTestFunction& v, int nodes) {
  const double a = (v.family == ModalFamily::boundary_layer) ? 0.5 * v.R : 0.0;
  const RadialNorms rn = radial_norms(v, a, v.R, nodes);
  VolumeNormBundle out;
  out.l2 = std::sqrt(rn.l2_sq);
  out.grad = std::sqrt(rn.grad_sq);
  out.neumann_h_minus_half =
      std::pow(1.0 + v.mode.m, -0.5) * std::pow(v.R, 0.5 * (v.mode.n - 1)) * std::abs(v.dw(v.R));
  out.h1_indexed = std::sqrt(rn.grad_sq + std::norm(v.s) * rn.l2_sq);
  return out;
}

double friedrichs_ratio(const VolumeNormBundle& norms) {
  const double denom_sq =
      norms.grad * norms.grad + norms.neumann_h_minus_half * norms.neumann_h_minus_half;
  if (denom_sq == 0.0) {
    if (norms.l2 == 0.0)
      throw std::domain_error("friedrichs_ratio: zero test function");
    // nonzero function with vanishing gradient and Neumann trace: the n = 2
    // constant mode at s = 0, where the bound genuinely degenerates
    return std::numeric_limits<double>::infinity();
  }
  return norms.l2 / std::sqrt(denom_sq);
}

double friedrichs_ratio(const ModalTestFunction& v, int nodes) {
  return friedrichs_ratio(volume_norms(v, nodes));
}

SweepResult friedrichs_sweep(int n, double R, const std::vector<cplx>& s_grid, int m_max,
                             const std::vector<ModalFamily>& families, int nodes,
                             bool observe_only) {
  if (n < 3 && !observe_only)
    throw std::invalid_argument("friedrichs_sweep: the bound is asserted only for n >= 3");
  SweepResult result;
  result.max_ratio = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    for (const cplx& s : s_grid) {
      for (ModalFamily family : families) {
        const ModalTestFunction v = build_modal(Mode(m, n), s, R, family);
        const double ratio = friedrichs_ratio(v, nodes);
        result.rows.push_back({n, R, m, family, s, ratio});
        result.max_ratio = std::max(result.max_ratio, ratio);
      }
    }
  }
  return result;
}

CorollaryReport corollary_check(const ModalTestFunction& v, const CorollaryConstants& constants,
                                int nodes) {
  const VolumeNormBundle norms = volume_norms(v, nodes);
  CorollaryReport rep;
  rep.l2 = norms.l2;
  rep.grad = norms.grad;
  rep.h1_indexed = norms.h1_indexed;
  const double wR = std::abs(v.w(v.R));
  rep.trace_indexed = std::sqrt((1.0 + v.mode.m + std::abs(v.s)) *
                                std::pow(v.R, v.mode.n - 1.0)) * wR;
  const double cw1 = constants.c_omega1;
  rep.margin_l2 =
      std::max(1.0, std::sqrt(1.0 + cw1 * cw1) * constants.c_f) * rep.h1_indexed - rep.l2;
  rep.margin_trace = constants.c_tr * rep.h1_indexed - rep.trace_indexed;
  const double shat = 1.0 / std::sqrt(2.0 * std::max(1.0, cw1 * constants.c_f));
  rep.gradient_applicable = std::abs(v.s) <= shat;
  rep.margin_gradient =
      2.0 * constants.c_f * std::sqrt(1.0 + cw1 * cw1) * rep.grad - rep.l2;
  return rep;
}

double measure_normal_trace_constant(const std::vector<ModalTestFunction>& corpus, int nodes) {
  double worst = 0.0;
  for (const ModalTestFunction& v : corpus) {
    const RadialNorms rn = radial_norms(v, 0.75 * v.R, v.R, nodes);
    // |v|^2_{H^1(omega, Delta)} with Delta v = s^2 v on the annulus
    const double semi_sq = rn.grad_sq + std::norm(v.s * v.s) * rn.l2_sq;
    const double gamma1 = std::pow(1.0 + v.mode.m, -0.5) *
                          std::pow(v.R, 0.5 * (v.mode.n - 1)) * std::abs(v.dw(v.R));
    if (semi_sq > 0.0) worst = std::max(worst, gamma1 / std::sqrt(semi_sq));
  }
  return worst;
}

double measure_trace_constant(const std::vector<ModalTestFunction>& corpus, int nodes) {
  double worst = 0.0;
  for (const ModalTestFunction& v : corpus) {
    const VolumeNormBundle norms = volume_norms(v, nodes);
    const double trace = std::sqrt((1.0 + v.mode.m + std::abs(v.s)) *
                                   std::pow(v.R, v.mode.n - 1.0)) * std::abs(v.w(v.R));
    if (norms.h1_indexed > 0.0) worst = std::max(worst, trace / norms.h1_indexed);
  }
  return worst;
}

}  // namespace sdtn
