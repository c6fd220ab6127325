// SPDX-License-Identifier: Apache-2.0

#include "sdtn/exterior.hpp"

#include <cmath>
#include <stdexcept>

#include "sdtn/quadrature.hpp"

namespace sdtn {

namespace {

void require_radii(double R, double r) {
  if (!(R > 0.0)) throw std::domain_error("radial_factor: radius must be positive");
  if (!(r >= R)) throw std::domain_error("radial_factor: evaluation point must satisfy r >= R");
}

bool is_log_mode(const Mode& mode, const DtnKind& kind) {
  return kind.variant == DtnKind::Variant::laplace_log && mode.m == 0;
}

// Scaled Helmholtz factor: w(r) = (R/r)^nu Khat_mu(sr)/Khat_mu(sR) with
// Khat = e^z K; the true factor is e^{-s(r-R)} w(r) and w' folds in the
// derivative recurrence through the ratio K_{mu+1}/K_mu.
RadialEval helmholtz_scaled(const Mode& mode, cplx s, double R, double r) {
  const Order mu = mode.order();
  const cplx khat_r = bessel_k_scaled(mu, s * r);
  const cplx khat_R = bessel_k_scaled(mu, s * R);
  const cplx w = std::pow(R / r, mode.nu()) * khat_r / khat_R;
  const cplx dlog = cplx(mode.m, 0.0) / r - s * bessel_k_ratio(mu, s * r);
  return {w, w * dlog, false};
}

}  // namespace

RadialEval radial_factor_scaled(const Mode& mode, const DtnKind& kind, double R, double r) {
  require_radii(R, r);
  if (kind.variant == DtnKind::Variant::laplace_log && (mode.n != 2 || R == 1.0))
    throw std::invalid_argument("radial_factor: the logarithmic variant requires n = 2, R != 1");
  if (kind.variant == DtnKind::Variant::helmholtz && kind.s != cplx(0.0))
    return helmholtz_scaled(mode, kind.s, R, r);
  if (is_log_mode(mode, kind))
    return {cplx(std::log(r) / std::log(R)), cplx(1.0 / (r * std::log(R))), false};
  const double p = mode.m + 2.0 * mode.nu();
  const double v = std::pow(R / r, p);
  return {cplx(v), cplx(-p * v / r), false};
}

RadialEval radial_factor(const Mode& mode, const DtnKind& kind, double R, double r) {
  RadialEval eval = radial_factor_scaled(mode, kind, R, r);
  if (kind.variant == DtnKind::Variant::helmholtz && kind.s != cplx(0.0)) {
    const cplx s = kind.s;
    const double decay = -s.real() * (r - R);
    if (decay < -745.0) {
      return {cplx(0.0), cplx(0.0), true};
    }
    const cplx factor = std::exp(-s * (r - R));
    // true derivative: e^{-s(r-R)} (w' - s w) ... w' here already carries
    // the full logarithmic derivative of the unscaled factor.
    eval.value *= factor;
    eval.derivative *= factor;
  }
  return eval;
}

std::vector<cplx> evaluate_exterior(const ExteriorField& field,
                                    const std::vector<ExteriorPoint>& points) {
  const int n = field.g.n;
  if (n != 2 && n != 3)
    throw std::invalid_argument("evaluate_exterior: point evaluation needs n in {2, 3}");
  std::vector<cplx> values(points.size(), cplx(0.0));
  for (const auto& [idx, amp] : field.g.entries) {
    if (amp == cplx(0.0)) continue;
    const Mode mode(idx.m, n);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const RadialEval rad = radial_factor(mode, field.kind, field.g.R, points[i].r);
      values[i] +=
          rad.value * amp * harmonic_value(n, idx.m, idx.j, points[i].theta, points[i].phi);
    }
  }
  return values;
}

double ode_residual(const Mode& mode, const DtnKind& kind, double R, double r0, double r1,
                    int npts) {
  if (!(r0 > R) || !(r1 > r0)) throw std::invalid_argument("ode_residual: need R < r0 < r1");
  if (npts < 3) throw std::invalid_argument("ode_residual: need at least three points");
  const double h = (r1 - r0) / (npts - 1);
  if (h > r0 / 10.0) throw std::invalid_argument("ode_residual: grid too coarse");
  const cplx s = kind.variant == DtnKind::Variant::helmholtz ? kind.s : cplx(0.0);
  const double lambda = eigenvalue(mode.m, mode.n);
  std::vector<cplx> u(npts);
  for (int i = 0; i < npts; ++i)
    u[i] = radial_factor(mode, kind, R, r0 + i * h).value;
  double worst = 0.0;
  for (int i = 1; i + 1 < npts; ++i) {
    const double r = r0 + i * h;
    const cplx upp = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
    const cplx up = (u[i + 1] - u[i - 1]) / (2.0 * h);
    const cplx residual = -upp - (mode.n - 1.0) / r * up + (lambda / (r * r) + s * s) * u[i];
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

std::vector<DecaySample> radiation_check(const Mode& mode, const DtnKind& kind, double R,
                                         const std::vector<double>& radii) {
  if (kind.variant != DtnKind::Variant::helmholtz || kind.s == cplx(0.0))
    throw std::invalid_argument("radiation_check: requires a nonzero wavenumber");
  const cplx s = kind.s;
  std::vector<DecaySample> out;
  out.reserve(radii.size());
  for (double r : radii) {
    const RadialEval w = radial_factor_scaled(mode, kind, R, r);
    // u' + s u = e^{-s(r-R)} (w_deriv + s w_value)
    const double log_q = 0.5 * (mode.n - 1.0) * std::log(r) - s.real() * (r - R) +
                         std::log(std::abs(w.derivative + s * w.value));
    out.push_back({r, log_q});
  }
  return out;
}

namespace {

// int_R^d r^p dr
double power_integral(double p, double R, double d) {
  if (p == -1.0) return std::log(d / R);
  return (std::pow(d, p + 1.0) - std::pow(R, p + 1.0)) / (p + 1.0);
}

}  // namespace

ModeAnnulus annulus_fgh(int m, int n, double R, double d) {
  if (!(d > R) || !(R > 0.0)) throw std::invalid_argument("annulus_fgh: need 0 < R < d");
  const double nu = 0.5 * (n - 2);
  const double p = m + 2.0 * nu;
  const double lead = std::pow(R, 2.0 * p);
  ModeAnnulus a;
  a.f_sq = lead * power_integral(n - 1.0 - 2.0 * p, R, d);
  a.g_sq = p * p * lead * power_integral(n - 3.0 - 2.0 * p, R, d);
  a.h_sq = double(m) * m * lead * power_integral(n - 3.0 - 2.0 * p, R, d);
  return a;
}

ModeAnnulus annulus_fgh_quadrature(int m, int n, double R, double d, int nodes) {
  if (!(d > R) || !(R > 0.0)) throw std::invalid_argument("annulus_fgh: need 0 < R < d");
  const double nu = 0.5 * (n - 2);
  const double p = m + 2.0 * nu;
  ModeAnnulus a;
  a.f_sq = integrate(
      [&](double r) { return std::pow(R / r, 2.0 * p) * std::pow(r, n - 1.0); }, R, d, nodes);
  a.g_sq = integrate(
      [&](double r) {
        const double dv = -p * std::pow(R / r, p) / r;
        return dv * dv * std::pow(r, n - 1.0);
      },
      R, d, nodes);
  a.h_sq = integrate(
      [&](double r) {
        return double(m) * m / (r * r) * std::pow(R / r, 2.0 * p) * std::pow(r, n - 1.0);
      },
      R, d, nodes);
  return a;
}

AnnulusNorm annulus_h1_norm(const BoundaryCoefficients& g, double d) {
  if (!(d > g.R)) throw std::invalid_argument("annulus_h1_norm: need d > R");
  AnnulusNorm norm;
  norm.d = d;
  const int band = std::max(0, g.band());
  norm.per_mode.reserve(band + 1);
  for (int m = 0; m <= band; ++m) norm.per_mode.push_back(annulus_fgh(m, g.n, g.R, d));
  double total = 0.0;
  for (const auto& [idx, v] : g.entries) total += norm.per_mode[idx.m].sum() * std::norm(v);
  norm.total = std::sqrt(total);
  return norm;
}

}  // namespace sdtn
