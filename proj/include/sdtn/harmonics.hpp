// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <vector>

#include "sdtn/bessel.hpp"

namespace sdtn {

// Laplace-Beltrami eigenvalue on the unit sphere S_1 in R^n.
double eigenvalue(int m, int n);  // m (m + n - 2)

// Dimension |J_m| of the degree-m eigenspace; |J_0| = 1 in every dimension.
long long multiplicity(int m, int n);

struct ModeIndex {
  int m;
  int j;  // 1 <= j <= multiplicity(m, n)
  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

// A function on S_R in the eigenbasis: finite map (m, j) -> amplitude with
// respect to Y_{m,j} orthonormal on S_1. Radius only enters norms and forms.
struct BoundaryCoefficients {
  int n = 2;
  double R = 1.0;
  std::map<ModeIndex, cplx> entries;

  void set(int m, int j, cplx value);
  cplx get(int m, int j) const;
  int band() const;  // largest m present, -1 when empty
};

// Quadrature grid on S_1, exact for products of harmonics up to band 2M:
// n = 2 uses the uniform trapezoid rule, n = 3 Gauss-Legendre in cos(theta)
// times a uniform azimuth grid. Weights are positive and sum to |S_1|.
struct SurfaceGrid {
  int n = 2;
  int band = 0;
  std::vector<std::array<double, 2>> points;  // (theta, phi); phi unused for n = 2
  std::vector<double> weights;
  static SurfaceGrid make(int n, int band);
};

// |S_{n-1}| scaled to radius R.
double surface_area(int n, double R = 1.0);

// Real orthonormal basis: n = 2 trigonometric, n = 3 real spherical
// harmonics without the Condon-Shortley phase. Point evaluation is
// provided for n in {2, 3}; higher dimensions work in coefficient space.
double harmonic_value(int n, int m, int j, double theta, double phi);

std::vector<cplx> synthesize(const BoundaryCoefficients& coeffs, const SurfaceGrid& grid);

struct AnalysisResult {
  BoundaryCoefficients coeffs;
  double alias_fraction;  // energy beyond the band relative to the total
};

AnalysisResult analyze(const std::vector<cplx>& values, const SurfaceGrid& grid, int band,
                       double R = 1.0);

}  // namespace sdtn
