// SPDX-License-Identifier: Apache-2.0

#include "sdtn/dtn.hpp"

#include <cmath>
#include <stdexcept>

namespace sdtn {

DtnKind DtnKind::helmholtz(cplx s) {
  if (s.real() < 0.0) throw std::domain_error("DtnKind: wavenumber must satisfy Re s >= 0");
  return {Variant::helmholtz, s};
}

namespace {

void require_admissible(const DtnKind& kind, int n, double R) {
  if (!(R > 0.0)) throw std::domain_error("dtn: radius must be positive");
  if (kind.variant == DtnKind::Variant::laplace_log && (n != 2 || R == 1.0))
    throw std::invalid_argument("dtn: the logarithmic variant requires n = 2 and R != 1");
}

// z_{m,nu}(sR) for the helmholtz variant, -(m + 2 nu) otherwise; the log
// variant replaces the constant-mode value by R/(R log R) * R ... handled
// in dtn_multiplier.
cplx diagonal_z(const DtnKind& kind, int m, int n, double R) {
  if (kind.variant == DtnKind::Variant::helmholtz) return z_coefficient(Mode(m, n), kind.s * R);
  return cplx(-(m + double(n) - 2.0), 0.0);  // -(m + 2 nu)
}

}  // namespace

cplx dtn_multiplier(const DtnKind& kind, int m, int n, double R) {
  require_admissible(kind, n, R);
  if (kind.variant == DtnKind::Variant::laplace_log && m == 0)
    return cplx(1.0 / (R * std::log(R)), 0.0);
  return diagonal_z(kind, m, n, R) / R;
}

BoundaryCoefficients apply_dtn(const DtnKind& kind, const BoundaryCoefficients& g) {
  require_admissible(kind, g.n, g.R);
  BoundaryCoefficients out;
  out.n = g.n;
  out.R = g.R;
  for (const auto& [idx, v] : g.entries)
    out.entries[idx] = dtn_multiplier(kind, idx.m, g.n, g.R) * v;
  return out;
}

cplx surface_pairing(const BoundaryCoefficients& a, const BoundaryCoefficients& b) {
  if (a.n != b.n || a.R != b.R) throw std::invalid_argument("surface_pairing: shape mismatch");
  cplx sum(0.0);
  for (const auto& [idx, v] : a.entries) sum += v * std::conj(b.get(idx.m, idx.j));
  return std::pow(a.R, a.n - 1) * sum;
}

FormValue dtn_form(const DtnKind& kind, const BoundaryCoefficients& g,
                   const BoundaryCoefficients& h) {
  if (g.n != h.n || g.R != h.R) throw std::invalid_argument("dtn_form: shape mismatch");
  require_admissible(kind, g.n, g.R);
  cplx sum(0.0);
  for (const auto& [idx, v] : g.entries) {
    const cplx hv = h.get(idx.m, idx.j);
    if (hv == cplx(0.0)) continue;
    sum += (dtn_multiplier(kind, idx.m, g.n, g.R) * g.R) * v * std::conj(hv);
  }
  return {std::pow(g.R, g.n - 2) * sum};
}

double sobolev_norm(const BoundaryCoefficients& g, double order) {
  if (order != 0.0 && order != 0.5 && order != -0.5)
    throw std::invalid_argument("sobolev_norm: order must be -1/2, 0, or +1/2");
  double sum = 0.0;
  for (const auto& [idx, v] : g.entries) sum += std::pow(1.0 + idx.m, 2.0 * order) * std::norm(v);
  return std::sqrt(std::pow(g.R, g.n - 1) * sum);
}

double indexed_trace_norm(const BoundaryCoefficients& g, cplx s) {
  const double h_half = sobolev_norm(g, 0.5);
  const double l2 = sobolev_norm(g, 0.0);
  return std::sqrt(h_half * h_half + std::abs(s) * l2 * l2);
}

DefinitenessReport definiteness_report(const DtnKind& kind, const BoundaryCoefficients& g) {
  if (g.entries.empty()) throw std::invalid_argument("definiteness_report: g must be nonzero");
  DefinitenessReport rep;
  rep.form = dtn_form(kind, g, g).value;
  const double l2 = sobolev_norm(g, 0.0);
  rep.l2_sq = l2 * l2;
  const cplx s = kind.variant == DtnKind::Variant::helmholtz ? kind.s : cplx(0.0);
  const double indexed = indexed_trace_norm(g, s);
  rep.indexed_sq = indexed * indexed;
  rep.lower_constant = (g.n - 2.0) / (2.0 * g.R);
  rep.lower_margin = -rep.form.real() - rep.lower_constant * rep.l2_sq;
  rep.upper_ratio = -rep.form.real() / rep.indexed_sq;
  rep.im_part = rep.form.imag();
  rep.im_expected_sign = s.imag() > 0.0 ? -1 : (s.imag() < 0.0 ? 1 : 0);
  return rep;
}

}  // namespace sdtn
