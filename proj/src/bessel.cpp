// SPDX-License-Identifier: Apache-2.0

#include "sdtn/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sdtn {

namespace {

constexpr double kSeriesRadius = 2.0;       // ascending series for |z| <= 2
constexpr double kAsymptoticRadius = 30.0;  // direct expansion beyond this, see pair_integer
constexpr int kMaxIter = 20000;

void require_right_half_plane(cplx z) {
  if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
    throw std::domain_error("bessel: argument must be finite");
  if (z.real() < 0.0) throw std::domain_error("bessel: argument must satisfy Re z >= 0");
  if (z == cplx(0.0, 0.0)) throw std::domain_error("bessel: argument must be nonzero");
}

cplx sqrt_pi_over_2z(cplx z) { return std::sqrt(M_PI / (2.0 * z)); }

// Ascending series for K_0(z), K_1(z), |z| <= kSeriesRadius.
void k01_series(cplx z, cplx& k0, cplx& k1) {
  const cplx q = 0.25 * z * z;
  const cplx lg = std::log(0.5 * z) + euler_gamma;

  cplx i0 = 1.0, sum_h = 0.0, term = 1.0;
  double hk = 0.0;
  for (int k = 1; k < 80; ++k) {
    term *= q / double(k * k);
    hk += 1.0 / k;
    i0 += term;
    sum_h += term * hk;
    if (std::abs(term) * (1.0 + hk) < 1e-18 * std::abs(i0)) break;
  }
  k0 = -lg * i0 + sum_h;

  cplx i1s = 1.0, s2 = 1.0 - 2.0 * euler_gamma;
  term = 1.0;
  double ha = 0.0, hb = 1.0;
  for (int k = 1; k < 80; ++k) {
    term *= q / double(k * (k + 1));
    ha += 1.0 / k;
    hb += 1.0 / (k + 1);
    i1s += term;
    s2 += term * (ha + hb - 2.0 * euler_gamma);
    if (std::abs(term) * (2.0 + ha + hb) < 1e-18 * std::abs(i1s)) break;
  }
  const cplx i1 = 0.5 * z * i1s;
  k1 = 1.0 / z + std::log(0.5 * z) * i1 - 0.25 * z * s2;
}

// Steed continued fraction (CF2) at order 0: yields e^z K_0(z) and the
// ratio K_1/K_0. Converges for |z| > ~2 away from the negative real axis.
void cf2_k01(cplx z, cplx& khat0, cplx& ratio01) {
  cplx b = 2.0 * (1.0 + z);
  cplx d = 1.0 / b;
  cplx delh = d, h = d;
  cplx q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  cplx q = a1, c = a1;
  double a = -a1;
  cplx s = 1.0 + q * delh;
  bool converged = false;
  for (int i = 2; i <= kMaxIter; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / double(i);
    const cplx qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const cplx dels = q * delh;
    s += dels;
    if (std::abs(dels) < 1e-17 * std::abs(s)) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("bessel_k: continued fraction failed to converge");
  h *= a1;
  khat0 = sqrt_pi_over_2z(z) / s;
  ratio01 = (z + 0.5 - h) / z;
}

cplx asymptotic_scaled_sum(double mu, cplx z, int terms) {
  cplx sum = 1.0, term = 1.0;
  const double fmu = 4.0 * mu * mu;
  for (int k = 1; k < terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (fmu - odd * odd) / (8.0 * k * z);
    sum += term;
  }
  return sqrt_pi_over_2z(z) * sum;
}

// Adaptive variant for internal seeding: stops at machine precision or at
// the smallest term of the (divergent) expansion.
cplx asymptotic_scaled_adaptive(double mu, cplx z) {
  cplx sum = 1.0, term = 1.0;
  const double fmu = 4.0 * mu * mu;
  double prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const cplx next = term * ((fmu - odd * odd) / (8.0 * k * z));
    const double an = std::abs(next);
    if (an >= prev) break;
    sum += next;
    term = next;
    prev = an;
    if (an < 1e-17 * std::abs(sum)) break;
  }
  return sqrt_pi_over_2z(z) * sum;
}

// Scaled pair at integer order, seeded at orders 0,1 and recurred upward.
ScaledKPair pair_integer(int mu, cplx z) {
  cplx a, b;
  const double az = std::abs(z);
  if (az <= kSeriesRadius) {
    cplx k0, k1;
    k01_series(z, k0, k1);
    const cplx e = std::exp(z);
    a = k0 * e;
    b = k1 * e;
  } else if (az >= kAsymptoticRadius) {
    a = asymptotic_scaled_adaptive(0.0, z);
    b = asymptotic_scaled_adaptive(1.0, z);
  } else {
    cplx r;
    cf2_k01(z, a, r);
    b = a * r;
  }
  for (int j = 1; j <= mu; ++j) {
    const cplx next = a + (2.0 * j / z) * b;
    a = b;
    b = next;
  }
  return {a, b};
}

// Scaled pair at half-integer order from the closed form at 1/2.
ScaledKPair pair_half_integer(double mu, cplx z) {
  const cplx seed = sqrt_pi_over_2z(z);
  cplx a = seed, b = seed;  // orders (rho - 1, rho) with rho = 1/2
  double rho = 0.5;
  while (rho < mu - 0.25) {
    const cplx next = a + (2.0 * rho / z) * b;
    a = b;
    b = next;
    rho += 1.0;
  }
  return {b, a + (2.0 * rho / z) * b};
}

}  // namespace

Order::Order(double mu) : mu_(mu), kind_(classify(mu)) {
  if (!(mu >= 0.0) || !std::isfinite(mu))
    throw std::domain_error("Order: order must be finite and nonnegative");
}

OrderKind Order::classify(double mu) {
  if (mu == std::floor(mu)) return OrderKind::integer;
  if (2.0 * mu == std::floor(2.0 * mu)) return OrderKind::half_integer;
  return OrderKind::other;
}

double bessel_k_asymptotic_a1(double mu) { return (4.0 * mu * mu - 1.0) / 8.0; }

ScaledKPair bessel_k_scaled_pair(const Order& mu, cplx z) {
  require_right_half_plane(z);
  switch (mu.kind()) {
    case OrderKind::integer:
      return pair_integer(static_cast<int>(mu.value()), z);
    case OrderKind::half_integer:
      return pair_half_integer(mu.value(), z);
    default:
      throw std::domain_error("bessel_k: only integer and half-integer orders are supported");
  }
}

cplx bessel_k_scaled(const Order& mu, cplx z) { return bessel_k_scaled_pair(mu, z).k_mu; }

cplx bessel_k(const Order& mu, cplx z) { return std::exp(-z) * bessel_k_scaled(mu, z); }

cplx bessel_k_ratio(const Order& mu, cplx z) {
  require_right_half_plane(z);
  cplx r;
  double rho;
  if (mu.kind() == OrderKind::half_integer) {
    r = 1.0 + 1.0 / z;
    rho = 0.5;
  } else if (mu.kind() == OrderKind::integer) {
    if (std::abs(z) <= kSeriesRadius) {
      cplx k0, k1;
      k01_series(z, k0, k1);
      r = k1 / k0;
    } else {
      cplx khat0;
      cf2_k01(z, khat0, r);
    }
    rho = 0.0;
  } else {
    throw std::domain_error("bessel_k_ratio: only integer and half-integer orders are supported");
  }
  while (rho < mu.value() - 0.25) {
    rho += 1.0;
    r = 2.0 * rho / z + 1.0 / r;
  }
  return r;
}

cplx bessel_i_scaled(const Order& mu, cplx z) {
  require_right_half_plane(z);
  if (mu.kind() == OrderKind::other)
    throw std::domain_error("bessel_i: only integer and half-integer orders are supported");
  // Descending continued fraction for I_{mu+1}/I_mu (modified Lentz).
  const double m = mu.value();
  const double tiny = 1e-290;
  cplx f = tiny, cc = f, dd = 0.0;
  bool converged = false;
  for (int k = 1; k <= kMaxIter; ++k) {
    const cplx bk = 2.0 * (m + k) / z;
    cc = bk + 1.0 / cc;
    if (cc == cplx(0.0)) cc = tiny;
    dd = bk + dd;
    if (dd == cplx(0.0)) dd = tiny;
    dd = 1.0 / dd;
    const cplx delta = cc * dd;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      converged = true;
      break;
    }
  }
  if (!converged) throw std::runtime_error("bessel_i: continued fraction failed to converge");
  // Wronskian I_mu K_{mu+1} + I_{mu+1} K_mu = 1/z in scaled form.
  const ScaledKPair k = bessel_k_scaled_pair(mu, z);
  return 1.0 / (z * (k.k_mu_p1 + f * k.k_mu));
}

cplx bessel_i(const Order& mu, cplx z) { return std::exp(z) * bessel_i_scaled(mu, z); }

cplx bessel_k_asymptotic_scaled(const Order& mu, cplx z, int terms) {
  require_right_half_plane(z);
  if (terms < 1) throw std::invalid_argument("bessel_k_asymptotic: need at least one term");
  const double m = mu.value();
  if (std::abs(z) < 10.0 * (m * m + 1.0))
    throw std::domain_error("bessel_k_asymptotic: argument too small for the expansion");
  return asymptotic_scaled_sum(m, z, terms);
}

cplx bessel_k_asymptotic(const Order& mu, cplx z, int terms) {
  return std::exp(-z) * bessel_k_asymptotic_scaled(mu, z, terms);
}

}  // namespace sdtn
