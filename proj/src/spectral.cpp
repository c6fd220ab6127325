// SPDX-License-Identifier: Apache-2.0

#include "sdtn/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "sdtn/modulus.hpp"

namespace sdtn {

Mode::Mode(int m_, int n_) : m(m_), n(n_) {
  if (m < 0) throw std::domain_error("Mode: angular frequency must be nonnegative");
  if (n < 2) throw std::domain_error("Mode: dimension must be at least 2");
}

cplx z_coefficient(const Mode& mode, cplx s) {
  if (s.real() < 0.0) throw std::domain_error("z_coefficient: wavenumber must satisfy Re s >= 0");
  if (s == cplx(0.0, 0.0)) return cplx(-(mode.m + 2.0 * mode.nu()), 0.0);
  return cplx(mode.m, 0.0) - s * bessel_k_ratio(mode.order(), s);
}

cplx w_mu(const Order& mu, double k) {
  if (!(k > 0.0)) throw std::domain_error("w_mu: argument must be positive");
  const ModulusPoint p = hankel_modulus_sq(mu, k);
  return cplx(0.5 * k * p.dm_sq / p.m_sq, 2.0 / (M_PI * p.m_sq));
}

double calibrate_c2(double k0) {
  if (!(k0 > std::pow(2.0, -1.5)))
    throw std::domain_error("calibrate_c2: k0 must exceed 2^(-3/2)");
  const ModulusPoint p = hankel_modulus_sq(Order(0.0), k0);
  return k0 / (8.0 * k0 * k0 - 1.0) + 2.0 / (M_PI * p.m_sq);
}

BoundReport check_bounds(const Mode& mode, cplx s, double c2) {
  return check_bounds_value(mode, s, z_coefficient(mode, s), c2);
}

BoundReport check_bounds_value(const Mode& mode, cplx s, cplx z, double c2) {
  BoundReport rep{mode, s, z, c2, 0, 0, false, 0, 0};
  const double neg_re = -rep.z.real();
  if (mode.is_zero_mode()) {
    rep.re_low_margin = neg_re;
    rep.re_high_margin = 0.5 + s.real() - neg_re;
  } else {
    rep.re_low_margin = neg_re - (mode.nu() + 0.5);
    rep.re_high_margin = mode.m + 2.0 * mode.nu() + s.real() - neg_re;
  }
  if (s.imag() != 0.0) {
    rep.im_checked = true;
    // -+ Im z with the sign matching +- Im s
    rep.im_strict = (s.imag() > 0.0) ? -rep.z.imag() : rep.z.imag();
    const double bound = (mode.is_zero_mode() ? c2 : 0.0) + std::abs(s.imag());
    rep.im_high_margin = bound - rep.im_strict;
  }
  return rep;
}

}  // namespace sdtn
