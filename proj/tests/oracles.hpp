// SPDX-License-Identifier: Apache-2.0
//
// Test-side reference implementations, independent of the library paths
// they are used to check.

#pragma once

#include <cmath>
#include <complex>

namespace oracles {

using cplxl = std::complex<long double>;
using cplx = std::complex<double>;

inline constexpr long double kGamma = 0.577215664901532860606512090082402431L;

// Ascending-series K_0 and K_1 in extended precision; valid for |z| <~ 4.
inline void k01_series(cplxl z, cplxl& k0, cplxl& k1) {
  const cplxl q = 0.25L * z * z;
  cplxl i0 = 1.0L, sum_h = 0.0L, term = 1.0L;
  long double hk = 0.0L;
  for (int k = 1; k < 120; ++k) {
    term *= q / static_cast<long double>(k) / static_cast<long double>(k);
    hk += 1.0L / k;
    i0 += term;
    sum_h += term * hk;
    if (std::abs(term) * (1.0L + hk) < 1e-24L * std::abs(i0)) break;
  }
  k0 = -(std::log(0.5L * z) + kGamma) * i0 + sum_h;

  cplxl i1s = 1.0L, s2 = 1.0L - 2.0L * kGamma;
  term = 1.0L;
  long double ha = 0.0L, hb = 1.0L;
  for (int k = 1; k < 120; ++k) {
    term *= q / static_cast<long double>(k) / static_cast<long double>(k + 1);
    ha += 1.0L / k;
    hb += 1.0L / (k + 1);
    i1s += term;
    s2 += term * (ha + hb - 2.0L * kGamma);
    if (std::abs(term) * (2.0L + ha + hb) < 1e-24L * std::abs(i1s)) break;
  }
  k1 = 1.0L / z + std::log(0.5L * z) * (0.5L * z * i1s) - 0.25L * z * s2;
}

inline cplx k0_series(cplx z) {
  cplxl k0, k1;
  k01_series(cplxl(z.real(), z.imag()), k0, k1);
  return {static_cast<double>(k0.real()), static_cast<double>(k0.imag())};
}

inline cplx k1_series(cplx z) {
  cplxl k0, k1;
  k01_series(cplxl(z.real(), z.imag()), k0, k1);
  return {static_cast<double>(k1.real()), static_cast<double>(k1.imag())};
}

// Truncated large-argument series e^z K_mu(z) / sqrt(pi/(2z)).
inline cplx k_asymptotic_tail(double mu, cplx z, int terms) {
  cplx sum = 1.0, term = 1.0;
  for (int k = 1; k < terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (4.0 * mu * mu - odd * odd) / (8.0 * k * z);
    sum += term;
  }
  return sum;
}

// Closed forms at half-integer order.
inline cplx k_half(cplx z) { return std::sqrt(M_PI / (2.0 * z)) * std::exp(-z); }
inline cplx k_three_half(cplx z) { return k_half(z) * (1.0 + 1.0 / z); }
inline cplx i_half(cplx z) { return std::sqrt(2.0 / (M_PI * z)) * std::sinh(z); }

}  // namespace oracles
