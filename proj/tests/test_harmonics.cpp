// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "sdtn/harmonics.hpp"

using sdtn::BoundaryCoefficients;
using sdtn::cplx;
using sdtn::SurfaceGrid;

namespace {

BoundaryCoefficients random_coeffs(int n, double R, int band, unsigned seed) {
  std::mt19937_64 eng(seed);
  auto uni = [&] { return (eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  BoundaryCoefficients g;
  g.n = n;
  g.R = R;
  for (int m = 0; m <= band; ++m)
    for (int j = 1; j <= sdtn::multiplicity(m, n); ++j) g.set(m, j, cplx(uni(), uni()));
  return g;
}

}  // namespace

TEST_CASE("eigenvalues") {
  CHECK(sdtn::eigenvalue(2, 3) == 6.0);
  CHECK(sdtn::eigenvalue(0, 5) == 0.0);
  CHECK(sdtn::eigenvalue(5, 2) == 25.0);
  CHECK_THROWS_AS(sdtn::eigenvalue(-1, 3), std::domain_error);
}

TEST_CASE("multiplicities") {
  CHECK(sdtn::multiplicity(2, 3) == 5);
  CHECK(sdtn::multiplicity(0, 2) == 1);  // degenerate case of the ratio formula
  for (int n = 2; n <= 7; ++n) CHECK(sdtn::multiplicity(0, n) == 1);
  for (int m = 1; m <= 20; ++m) CHECK(sdtn::multiplicity(m, 2) == 2);
  // against the ratio formula (2m+n-2)/(m+n-2) binom(m+n-2, n-2) for m >= 1
  for (int n = 2; n <= 7; ++n) {
    for (int m = 1; m <= 12; ++m) {
      double b = 1.0;
      for (int i = 1; i <= n - 2; ++i) b = b * (m + i) / i;
      const double expected = (2.0 * m + n - 2.0) / (m + n - 2.0) * b;
      CHECK(double(sdtn::multiplicity(m, n)) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("surface area") {
  CHECK(sdtn::surface_area(2) == doctest::Approx(2.0 * M_PI));
  CHECK(sdtn::surface_area(3) == doctest::Approx(4.0 * M_PI));
  CHECK(sdtn::surface_area(3, 2.0) == doctest::Approx(16.0 * M_PI));
  CHECK(sdtn::surface_area(4) == doctest::Approx(2.0 * M_PI * M_PI));
}

TEST_CASE("grid weights sum to the sphere area") {
  for (int n : {2, 3}) {
    const auto grid = SurfaceGrid::make(n, 6);
    double sum = 0.0;
    for (double w : grid.weights) {
      CHECK(w > 0.0);
      sum += w;
    }
    CHECK(sum == doctest::Approx(sdtn::surface_area(n)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(SurfaceGrid::make(4, 3), std::domain_error);
}

TEST_CASE("orthonormality under grid quadrature") {
  for (int n : {2, 3}) {
    const int band = 5;
    const auto grid = SurfaceGrid::make(n, band);
    for (int m = 0; m <= band; ++m) {
      for (int j = 1; j <= sdtn::multiplicity(m, n); ++j) {
        for (int mp = m; mp <= band; ++mp) {
          for (int jp = (mp == m ? j : 1); jp <= sdtn::multiplicity(mp, n); ++jp) {
            double inner = 0.0;
            for (std::size_t i = 0; i < grid.points.size(); ++i)
              inner += grid.weights[i] *
                       sdtn::harmonic_value(n, m, j, grid.points[i][0], grid.points[i][1]) *
                       sdtn::harmonic_value(n, mp, jp, grid.points[i][0], grid.points[i][1]);
            const double expected = (m == mp && j == jp) ? 1.0 : 0.0;
            CHECK(std::abs(inner - expected) < 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("synthesis of the constant mode") {
  for (int n : {2, 3}) {
    BoundaryCoefficients g;
    g.n = n;
    g.R = 1.0;
    g.set(0, 1, 1.0);
    const auto grid = SurfaceGrid::make(n, 2);
    const double expected = 1.0 / std::sqrt(sdtn::surface_area(n));
    for (cplx v : sdtn::synthesize(g, grid)) CHECK(std::abs(v - expected) < 1e-14);
  }
}

TEST_CASE("n = 2 single mode has unit norm and trig values") {
  BoundaryCoefficients g;
  g.n = 2;
  g.R = 1.0;
  g.set(1, 1, 1.0);  // cos(theta)/sqrt(pi)
  const auto grid = SurfaceGrid::make(2, 3);
  const auto values = sdtn::synthesize(g, grid);
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(std::abs(values[i] - std::cos(grid.points[i][0]) / std::sqrt(M_PI)) < 1e-14);
    norm_sq += grid.weights[i] * std::norm(values[i]);
  }
  CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("analyze inverts synthesize on band-limited data") {
  for (int n : {2, 3}) {
    const int band = 4;
    const auto grid = SurfaceGrid::make(n, band);
    const auto g = random_coeffs(n, 1.5, band, 7u + n);
    const auto result = sdtn::analyze(sdtn::synthesize(g, grid), grid, band, g.R);
    CHECK(result.alias_fraction < 1e-12);
    for (const auto& [idx, v] : g.entries)
      CHECK(std::abs(result.coeffs.get(idx.m, idx.j) - v) < 1e-12);
  }
}

TEST_CASE("analyze of a pure harmonic and of a constant") {
  for (int n : {2, 3}) {
    const auto grid = SurfaceGrid::make(n, 4);
    // Y_{2,1} samples -> unit coefficient at (2,1) and nothing else
    std::vector<cplx> values(grid.points.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      values[i] = sdtn::harmonic_value(n, 2, 1, grid.points[i][0], grid.points[i][1]);
    const auto res = sdtn::analyze(values, grid, 4, 1.0);
    for (const auto& [idx, v] : res.coeffs.entries) {
      const double expected = (idx.m == 2 && idx.j == 1) ? 1.0 : 0.0;
      CHECK(std::abs(v - expected) < 1e-12);
    }
    // constant function 1 -> coefficient |S_1|^{1/2} on the constant mode
    std::fill(values.begin(), values.end(), cplx(1.0));
    const auto res2 = sdtn::analyze(values, grid, 4, 1.0);
    CHECK(std::abs(res2.coeffs.get(0, 1) - std::sqrt(sdtn::surface_area(n))) < 1e-12);
    // mean extraction: coeff * Y_{0,1} = (1/|S_R|) integral of g
    const double mean = (res2.coeffs.get(0, 1) / std::sqrt(sdtn::surface_area(n))).real();
    CHECK(mean == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("Parseval on band-limited data") {
  for (int n : {2, 3}) {
    const int band = 5;
    const auto grid = SurfaceGrid::make(n, band);
    const auto g = random_coeffs(n, 1.0, band, 99u + n);
    const auto values = sdtn::synthesize(g, grid);
    double quad = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
      quad += grid.weights[i] * std::norm(values[i]);
    double sum = 0.0;
    for (const auto& [idx, v] : g.entries) sum += std::norm(v);
    CHECK(std::abs(quad - sum) < 1e-10 * sum);
  }
}

TEST_CASE("aliasing is reported") {
  const auto grid = SurfaceGrid::make(2, 2);
  std::vector<cplx> values(grid.points.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = std::cos(2.0 * grid.points[i][0]) + 0.5 * std::cos(9.0 * grid.points[i][0]);
  const auto res = sdtn::analyze(values, grid, 2, 1.0);
  CHECK(res.alias_fraction > 1e-10);  // the out-of-band energy is visible
}

TEST_CASE("discrete Laplace-Beltrami eigen-relation on the circle") {
  // second angular differences of sampled Y_{m,j} reproduce lambda_m = m^2
  const int N = 2048;
  const double h = 2.0 * M_PI / N;
  for (int m : {1, 3, 6}) {
    double worst = 0.0;
    for (int i = 0; i < N; ++i) {
      const double tm = (i - 1 + N) % N * h, t0 = i * h, tp = (i + 1) % N * h;
      const double lap = -(sdtn::harmonic_value(2, m, 1, tp, 0) -
                           2.0 * sdtn::harmonic_value(2, m, 1, t0, 0) +
                           sdtn::harmonic_value(2, m, 1, tm, 0)) /
                         (h * h);
      worst = std::max(worst,
                       std::abs(lap - sdtn::eigenvalue(m, 2) *
                                          sdtn::harmonic_value(2, m, 1, t0, 0)));
    }
    CHECK(worst < 0.3 * sdtn::eigenvalue(m, 2) * sdtn::eigenvalue(m, 2) * h * h);
  }
}

TEST_CASE("index validation") {
  BoundaryCoefficients g;
  g.n = 3;
  CHECK_THROWS_AS(g.set(1, 4, 1.0), std::out_of_range);  // multiplicity(1,3) = 3
  CHECK_THROWS_AS(g.set(0, 0, 1.0), std::out_of_range);
  const auto grid = SurfaceGrid::make(2, 2);
  BoundaryCoefficients high;
  high.n = 2;
  high.set(5, 1, 1.0);
  CHECK_THROWS_AS(sdtn::synthesize(high, grid), std::invalid_argument);
}
