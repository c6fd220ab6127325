// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

namespace sdtn {

using cplx = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Default accuracy targets: direct evaluations aim for kDirectTolerance
// relative error inside the supported parameter box; independent-oracle
// cross checks compare at kOracleTolerance.
inline constexpr double kDirectTolerance = 1e-12;
inline constexpr double kOracleTolerance = 1e-8;

enum class OrderKind { integer, half_integer, other };

// Nonnegative real Bessel order. The evaluation routines below support
// integer and half-integer orders, which covers mu = m + (n-2)/2 for every
// angular frequency m >= 0 and ambient dimension n >= 2.
class Order {
 public:
  explicit Order(double mu);
  double value() const { return mu_; }
  OrderKind kind() const { return kind_; }
  static OrderKind classify(double mu);

 private:
  double mu_;
  OrderKind kind_;
};

// Leading correction coefficient a_1(mu) = (4 mu^2 - 1)/8 of the
// large-argument expansion K_mu(z) ~ sqrt(pi/(2z)) e^{-z} (1 + a_1/z + ...).
double bessel_k_asymptotic_a1(double mu);

struct ScaledKPair {
  cplx k_mu;     // e^z K_mu(z)
  cplx k_mu_p1;  // e^z K_{mu+1}(z)
};

// Exponentially scaled modified Bessel functions of the second kind for
// Re z >= 0, z != 0. The scaled values stay representable for large Re z
// where K itself underflows.
ScaledKPair bessel_k_scaled_pair(const Order& mu, cplx z);
cplx bessel_k_scaled(const Order& mu, cplx z);

// K_mu(z) = e^{-z} * bessel_k_scaled; underflows to zero for Re z large.
cplx bessel_k(const Order& mu, cplx z);

// K_{mu+1}(z) / K_mu(z) by forward recurrence in the ratio itself; never
// forms the (possibly underflowing) K values for mu above the seed order.
cplx bessel_k_ratio(const Order& mu, cplx z);

// Exponentially scaled modified Bessel function of the first kind,
// e^{-z} I_mu(z), via the ratio continued fraction and the Wronskian
// with K. bessel_i removes the scaling and may overflow for Re z > ~700.
cplx bessel_i_scaled(const Order& mu, cplx z);
cplx bessel_i(const Order& mu, cplx z);

// Truncated large-argument expansion of K_mu; cross-check oracle and the
// large-|z| regime of bessel_k. Requires |z| >= 10 (mu^2 + 1).
cplx bessel_k_asymptotic(const Order& mu, cplx z, int terms);
cplx bessel_k_asymptotic_scaled(const Order& mu, cplx z, int terms);

}  // namespace sdtn
