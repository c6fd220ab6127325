// SPDX-License-Identifier: Apache-2.0

#include "sdtn/modulus.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdtn/quadrature.hpp"

namespace sdtn {

namespace {

// Chebyshev expansions for the exponentially scaled K_0 on (2, 8] and
// (8, inf), from the SLATEC FNLIB tables (public domain).
const double kAk0Coeff[38] = {
    -0.07643947903327941424082978270088,
    -0.02235652605699819052023095550791,
    7.734181154693858235300618174047e-4,
    -4.281006688886099464452146435416e-5,
    3.08170017386297474365001482666e-6,
    -2.639367222009664974067448892723e-7,
    2.563713036403469206294088265742e-8,
    -2.742705549900201263857211915244e-9,
    3.169429658097499592080832873403e-10,
    -3.902353286962184141601065717962e-11,
    5.068040698188575402050092127286e-12,
    -6.889574741007870679541713557984e-13,
    9.744978497825917691388201336831e-14,
    -1.427332841884548505389855340122e-14,
    2.156412571021463039558062976527e-15,
    -3.34965425514956277218878205853e-16,
    5.335260216952911692145280392601e-17,
    -8.693669980890753807639622378837e-18,
    1.446404347862212227887763442346e-18,
    -2.452889825500129682404678751573e-19,
    4.2337545262321715728217063424e-20,
    -7.427946526454464195695341294933e-21,
    1.3231505293926668662779674624e-21,
    -2.390587164739649451335981465599e-22,
    4.376827585923226140165712554666e-23,
    -8.113700607345118059339011413333e-24,
    1.521819913832172958310378154666e-24,
    -2.886041941483397770235958613333e-25,
    5.530620667054717979992610133333e-26,
    -1.070377329249898728591633066666e-26,
    2.091086893142384300296328533333e-27,
    -4.121713723646203827410261333333e-28,
    8.19348397112130764013568e-29,
    -1.642000275459297726780757333333e-29,
    3.316143281480227195890346666666e-30,
    -6.746863644145295941085866666666e-31,
    1.382429146318424677635413333333e-31,
    -2.851874167359832570811733333333e-32,
};
const double kAk02Coeff[33] = {
    -0.01201869826307592239839346212452,
    -0.009174852691025695310652561075713,
    1.444550931775005821048843878057e-4,
    -4.013614175435709728671021077879e-6,
    1.567831810852310672590348990333e-7,
    -7.77011043852173771031579975446e-9,
    4.611182576179717882533130529586e-10,
    -3.158592997860565770526665803309e-11,
    2.435018039365041127835887814329e-12,
    -2.074331387398347897709853373506e-13,
    1.925787280589917084742736504693e-14,
    -1.927554805838956103600347182218e-15,
    2.062198029197818278285237869644e-16,
    -2.341685117579242402603640195071e-17,
    2.805902810643042246815178828458e-18,
    -3.530507631161807945815482463573e-19,
    4.645295422935108267424216337066e-20,
    -6.368625941344266473922053461333e-21,
    9.0695213109865155676223488e-22,
    -1.337974785423690739845005311999e-22,
    2.03983602185995231552208896e-23,
    -3.207027481367840500060869973333e-24,
    5.189744413662309963626359466666e-25,
    -8.629501497540572192964607999999e-26,
    1.4721611831025598552080384e-26,
    -2.573069023867011283812351999999e-27,
    4.60177408664351658737664e-28,
    -8.411555324201093737130666666666e-29,
    1.569806306635368939301546666666e-29,
    -2.988226453005757788979199999999e-30,
    5.796831375216836520618666666666e-31,
    -1.145035994347681332155733333333e-31,
    2.301266594249682802005333333333e-32,
};

double chebyshev_eval(double x, const double* cs, int n) {
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;
  const double twox = 2.0 * x;
  for (int i = n - 1; i >= 0; --i) {
    b2 = b1;
    b1 = b0;
    b0 = twox * b1 - b2 + cs[i];
  }
  return 0.5 * (b0 - b2);
}

// e^x K_0(x) for real x > 0.
double k0e_real(double x) {
  if (x <= 0.0) throw std::domain_error("bessel_k0_real: argument must be positive");
  if (x <= 2.0) {
    // ascending series
    double i0 = 1.0, sum_h = 0.0, term = 1.0, hk = 0.0;
    const double q = 0.25 * x * x;
    for (int k = 1; k < 40; ++k) {
      term *= q / double(k * k);
      hk += 1.0 / k;
      i0 += term;
      sum_h += term * hk;
      if (term * (1.0 + hk) < 1e-18 * i0) break;
    }
    return std::exp(x) * (-(std::log(0.5 * x) + euler_gamma) * i0 + sum_h);
  }
  if (x <= 8.0) return (chebyshev_eval((16.0 / x - 5.0) / 3.0, kAk0Coeff, 38) + 1.25) / std::sqrt(x);
  return (chebyshev_eval(16.0 / x - 1.0, kAk02Coeff, 33) + 1.25) / std::sqrt(x);
}

}  // namespace

double bessel_k0_real(double x) {
  const double k0e = k0e_real(x);
  return x > 700.0 ? 0.0 : std::exp(-x) * k0e;
}

ModulusPoint hankel_modulus_sq(const Order& mu, double x) {
  if (!(x > 0.0)) throw std::domain_error("hankel_modulus_sq: argument must be positive");
  // H^(1)_mu(x) = (2 / (pi i^{mu+1})) K_mu(-ix): on the imaginary axis the
  // scaling factor e^{-z} has unit modulus, so scaled values suffice.
  const cplx z(0.0, -x);
  const ScaledKPair k = bessel_k_scaled_pair(mu, z);
  const double scale = 4.0 / (M_PI * M_PI);
  const double m_sq = scale * std::norm(k.k_mu);
  // (M^2)'(x) = 2 Re(conj(H) H') with H' expressed through K_mu, K_{mu+1}.
  const cplx kprime = (mu.value() / z) * k.k_mu - k.k_mu_p1;
  const double dm_sq = 2.0 * scale * std::real(cplx(0.0, -1.0) * std::conj(k.k_mu) * kprime);
  return {x, mu.value(), m_sq, dm_sq};
}

double nicholson_modulus_sq(const Order& mu, double x, const QuadratureSpec& spec) {
  if (!(x > 0.0)) throw std::domain_error("nicholson_modulus_sq: argument must be positive");
  const double m = mu.value();
  const int nodes = spec.panel_nodes;

  // integrand in u = sinh t:  cosh(2 mu asinh u) K_0(2xu) / sqrt(1+u^2),
  // evaluated through the scaled K_0 to keep the tail representable.
  auto integrand = [&](double u) -> double {
    const double w = u + std::sqrt(1.0 + u * u);
    const double y = 2.0 * x * u;
    const double k0e = k0e_real(y);
    const double e = 2.0 * m * std::log(w) - y;
    const double lead = (e < -745.0) ? 0.0 : std::exp(e) * k0e;
    const double sub = std::pow(w, -2.0 * m) * (y > 700.0 ? 0.0 : std::exp(-y)) * k0e;
    return 0.5 * (lead + sub) / std::sqrt(1.0 + u * u);
  };

  // Upper truncation point: beyond U the integrand is below tail_eps times
  // the accumulated integral (bound via K_0(y) <= sqrt(pi/(2y)) e^{-y} and
  // w <= (1+sqrt(2)) u for u >= 1).
  double upper = spec.truncation_u;
  const double tail_eps = 1e-4 * spec.tolerance;
  if (upper <= 0.0) {
    upper = std::max(1.0, 40.0 / (2.0 * x));
    for (int it = 0; it < 64; ++it) {
      const double lw = 2.0 * m * std::log((1.0 + M_SQRT2) * upper);
      const double le = lw - 2.0 * x * upper + 0.5 * std::log(M_PI / (4.0 * x * upper));
      if (le < std::log(tail_eps) - 3.0) break;
      upper *= 1.5;
    }
  }

  // Panels: dyadic refinement toward u = 0 (log endpoint of K_0), unit
  // panels in v = log u on [1, U].
  std::vector<double> breaks;
  for (double lo = 1.0; lo > 1e-18; lo *= 0.5) breaks.push_back(lo);
  breaks.push_back(0.0);

  double total = 0.0, err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double b = breaks[i], a = breaks[i + 1];
    const double coarse = integrate(integrand, a, b, nodes);
    const double fine = integrate(integrand, a, b, nodes + 8);
    total += fine;
    err += std::abs(fine - coarse);
    if (std::abs(fine) < 1e-18 * std::abs(total) && i > 4) break;
  }
  const double vmax = std::log(upper);
  const int npanel = std::max(1, static_cast<int>(std::ceil(vmax)));
  auto mapped = [&](double v) {
    const double u = std::exp(v);
    return integrand(u) * u;
  };
  for (int i = 0; i < npanel; ++i) {
    const double a = vmax * i / npanel, b = vmax * (i + 1) / npanel;
    const double coarse = integrate(mapped, a, b, nodes);
    const double fine = integrate(mapped, a, b, nodes + 8);
    total += fine;
    err += std::abs(fine - coarse);
  }

  const double result = (8.0 / (M_PI * M_PI)) * total;
  // certified error: panel estimates plus the analytic tail bound
  const double lw = 2.0 * m * std::log((1.0 + M_SQRT2) * upper);
  const double ltail = lw - 2.0 * x * upper + 0.5 * std::log(M_PI / (4.0 * x * upper));
  const double tail = (ltail < -700.0) ? 0.0 : std::exp(ltail) / (2.0 * x);
  const double certified = (8.0 / (M_PI * M_PI)) * err + tail;
  if (certified > spec.tolerance * std::max(1.0, std::abs(result)))
    throw std::runtime_error("nicholson_modulus_sq: quadrature did not reach the requested tolerance");
  return result;
}

}  // namespace sdtn
