// SPDX-License-Identifier: Apache-2.0

#include "sdtn/harmonics.hpp"

#include <cmath>
#include <stdexcept>

#include "sdtn/quadrature.hpp"

namespace sdtn {

namespace {

void require_dimension(int n) {
  if (n < 2) throw std::domain_error("harmonics: dimension must be at least 2");
}

long long binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  long long r = 1;
  for (int i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
  return r;
}

// Associated Legendre P_m^q(x) without the Condon-Shortley phase.
double assoc_legendre(int m, int q, double x) {
  double pqq = 1.0;
  const double sx = std::sqrt(std::max(0.0, 1.0 - x * x));
  for (int i = 1; i <= q; ++i) pqq *= (2.0 * i - 1.0) * sx;
  if (m == q) return pqq;
  double pq1 = x * (2.0 * q + 1.0) * pqq;
  if (m == q + 1) return pq1;
  double p = 0.0;
  for (int l = q + 2; l <= m; ++l) {
    p = ((2.0 * l - 1.0) * x * pq1 - (l + q - 1.0) * pqq) / (l - q);
    pqq = pq1;
    pq1 = p;
  }
  return p;
}

double sph_norm(int m, int q) {
  return std::sqrt((2.0 * m + 1.0) / (4.0 * M_PI) *
                   std::exp(std::lgamma(m - q + 1.0) - std::lgamma(m + q + 1.0)));
}

}  // namespace

double eigenvalue(int m, int n) {
  require_dimension(n);
  if (m < 0) throw std::domain_error("eigenvalue: m must be nonnegative");
  return double(m) * (m + n - 2);
}

long long multiplicity(int m, int n) {
  require_dimension(n);
  if (m < 0) throw std::domain_error("multiplicity: m must be nonnegative");
  // dimension of degree-m harmonic polynomials restricted to S_{n-1};
  // resolves the degenerate (m, n) = (0, 2) case of the ratio formula to 1
  return binomial(n + m - 1, m) - binomial(n + m - 3, m - 2);
}

void BoundaryCoefficients::set(int m, int j, cplx value) {
  if (m < 0 || j < 1 || j > multiplicity(m, n))
    throw std::out_of_range("BoundaryCoefficients: index outside the eigenspace");
  entries[{m, j}] = value;
}

cplx BoundaryCoefficients::get(int m, int j) const {
  auto it = entries.find({m, j});
  return it == entries.end() ? cplx(0.0) : it->second;
}

int BoundaryCoefficients::band() const {
  int b = -1;
  for (const auto& [idx, v] : entries) b = std::max(b, idx.m);
  return b;
}

double surface_area(int n, double R) {
  require_dimension(n);
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n) * std::pow(R, n - 1);
}

SurfaceGrid SurfaceGrid::make(int n, int band) {
  if (n != 2 && n != 3)
    throw std::domain_error("SurfaceGrid: point grids are provided for n in {2, 3}");
  if (band < 0) throw std::domain_error("SurfaceGrid: band must be nonnegative");
  SurfaceGrid g;
  g.n = n;
  g.band = band;
  if (n == 2) {
    const int np = 4 * (band + 1) + 1;  // trapezoid exact through trig degree np-1 >= 2*band
    g.points.reserve(np);
    for (int i = 0; i < np; ++i) {
      g.points.push_back({2.0 * M_PI * i / np, 0.0});
      g.weights.push_back(2.0 * M_PI / np);
    }
  } else {
    const int nt = band + 2;  // Gauss-Legendre in cos(theta), exact to degree 2nt-1 >= 2*band
    const int np = 4 * (band + 1) + 1;
    const GaussLegendre& rule = gauss_legendre(nt);
    for (int i = 0; i < nt; ++i) {
      const double theta = std::acos(rule.nodes[i]);
      for (int k = 0; k < np; ++k) {
        g.points.push_back({theta, 2.0 * M_PI * k / np});
        g.weights.push_back(rule.weights[i] * 2.0 * M_PI / np);
      }
    }
  }
  return g;
}

double harmonic_value(int n, int m, int j, double theta, double phi) {
  if (n == 2) {
    if (m == 0) return 1.0 / std::sqrt(2.0 * M_PI);
    if (j == 1) return std::cos(m * theta) / std::sqrt(M_PI);
    return std::sin(m * theta) / std::sqrt(M_PI);
  }
  if (n == 3) {
    const int q = j - 1 - m;  // -m..m
    const int aq = std::abs(q);
    const double p = sph_norm(m, aq) * assoc_legendre(m, aq, std::cos(theta));
    if (q == 0) return p;
    if (q > 0) return M_SQRT2 * p * std::cos(q * phi);
    return M_SQRT2 * p * std::sin(aq * phi);
  }
  throw std::domain_error("harmonic_value: point evaluation is provided for n in {2, 3}");
}

std::vector<cplx> synthesize(const BoundaryCoefficients& coeffs, const SurfaceGrid& grid) {
  if (coeffs.n != grid.n) throw std::invalid_argument("synthesize: dimension mismatch");
  if (coeffs.band() > grid.band)
    throw std::invalid_argument("synthesize: coefficients exceed the grid band limit");
  std::vector<cplx> values(grid.points.size(), cplx(0.0));
  for (const auto& [idx, amp] : coeffs.entries) {
    if (amp == cplx(0.0)) continue;
    for (std::size_t i = 0; i < grid.points.size(); ++i)
      values[i] += amp * harmonic_value(grid.n, idx.m, idx.j, grid.points[i][0], grid.points[i][1]);
  }
  return values;
}

AnalysisResult analyze(const std::vector<cplx>& values, const SurfaceGrid& grid, int band,
                       double R) {
  if (values.size() != grid.points.size())
    throw std::invalid_argument("analyze: value count does not match the grid");
  if (2 * band > 2 * grid.band)
    throw std::invalid_argument("analyze: requested band exceeds the grid band limit");
  AnalysisResult result;
  result.coeffs.n = grid.n;
  result.coeffs.R = R;
  double captured = 0.0;
  for (int m = 0; m <= band; ++m) {
    const long long mult = multiplicity(m, grid.n);
    for (int j = 1; j <= mult; ++j) {
      cplx c(0.0);
      for (std::size_t i = 0; i < grid.points.size(); ++i)
        c += grid.weights[i] * values[i] *
             harmonic_value(grid.n, m, j, grid.points[i][0], grid.points[i][1]);
      result.coeffs.set(m, j, c);
      captured += std::norm(c);
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) total += grid.weights[i] * std::norm(values[i]);
  result.alias_fraction = total > 0.0 ? std::max(0.0, (total - captured) / total) : 0.0;
  return result;
}

}  // namespace sdtn
