// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "sdtn/friedrichs.hpp"

using sdtn::cplx;
using sdtn::ModalFamily;
using sdtn::ModalTestFunction;
using sdtn::Mode;

TEST_CASE("polynomial family solves the coupling in closed form") {
  // n=3, m=0, s=0: w'(R) = -w(R)/R forces c = -1/3, so w = 1 - (r/R)^2/3
  const auto v = sdtn::build_modal(Mode(0, 3), cplx(0.0, 0.0), 1.0, ModalFamily::polynomial);
  CHECK(v.p == 2);
  CHECK(std::abs(v.c - cplx(-1.0 / 3.0, 0.0)) < 1e-14);
  CHECK(std::abs(v.w(0.7) - (1.0 - 0.49 / 3.0)) < 1e-14);
  // substitution check of the coupling
  CHECK(std::abs(v.dw(1.0) - v.z * v.w(1.0)) < 1e-14);
  // the uncoupled constant is not admissible: its residual is 1/R, and the
  // builder returns the corrected profile instead
  ModalTestFunction constant = v;
  constant.c = 0.0;
  CHECK(constant.coupling_residual() == doctest::Approx(1.0));
}

TEST_CASE("boundary layer profile couples by construction") {
  const cplx s(2.0, -1.5);
  const auto v = sdtn::build_modal(Mode(0, 3), s, 1.0, ModalFamily::boundary_layer);
  // profile (R/r) e^{-s(r-R)} near the boundary
  for (double r : {0.8, 0.95, 1.0}) {
    const cplx expected = std::exp(-s * (r - 1.0)) / r;
    CHECK(std::abs(v.w(r) - expected) < 1e-12 * std::abs(expected));
  }
  CHECK(std::abs(v.w(0.4)) == 0.0);                // below the cutoff
  CHECK(std::abs(v.w(0.6)) < std::abs(v.w(0.8)));  // inside the blend
  CHECK(v.coupling_residual() < 1e-12);
}

TEST_CASE("coupling residual across the corpus") {
  for (int n : {2, 3, 4, 5}) {
    for (int m : {0, 1, 4, 10}) {
      for (const cplx s : {cplx(0.0, 0.0), cplx(3.0, 0.0), cplx(0.0, -20.0), cplx(7.0, 7.0)}) {
        for (double R : {0.5, 1.0, 2.0}) {
          for (auto family : {ModalFamily::polynomial, ModalFamily::boundary_layer}) {
            const auto v = sdtn::build_modal(Mode(m, n), s, R, family);
            CHECK(v.coupling_residual() <=
                  1e-10 * std::max(1.0, std::abs(v.z * v.w(v.R) / v.R)));
          }
        }
      }
    }
  }
}

TEST_CASE("volume norms against exact integrals") {
  // constant profile on the unit ball in R^3: l2^2 = 1/3, grad = 0
  ModalTestFunction constant{Mode(0, 3), cplx(0.0, 0.0), 1.0, ModalFamily::polynomial,
                             cplx(-1.0, 0.0) /*z, unused here*/, cplx(0.0, 0.0), 2};
  const auto rn = sdtn::radial_norms(constant, 0.0, 1.0, 64);
  CHECK(rn.l2_sq == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(rn.grad_sq == doctest::Approx(0.0));

  // w = 1 - r^2/3: l2^2 = 68/315, grad^2 = 4/45, neumann = 2/3
  const auto v = sdtn::build_modal(Mode(0, 3), cplx(0.0, 0.0), 1.0, ModalFamily::polynomial);
  const auto norms = sdtn::volume_norms(v);
  CHECK(norms.l2 == doctest::Approx(std::sqrt(68.0 / 315.0)).epsilon(1e-13));
  CHECK(norms.grad == doctest::Approx(std::sqrt(4.0 / 45.0)).epsilon(1e-13));
  CHECK(norms.neumann_h_minus_half == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  // h1_indexed collapses to grad for s = 0
  CHECK(norms.h1_indexed == doctest::Approx(norms.grad).epsilon(1e-13));
  // and the closed-form ratio
  const double expected = std::sqrt(68.0 / 315.0) / std::sqrt(4.0 / 45.0 + 4.0 / 9.0);
  CHECK(sdtn::friedrichs_ratio(v) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("indexed volume norm composition") {
  const cplx s(3.0, -4.0);
  const auto v = sdtn::build_modal(Mode(2, 3), s, 1.0, ModalFamily::boundary_layer);
  const auto norms = sdtn::volume_norms(v);
  CHECK(norms.h1_indexed * norms.h1_indexed ==
        doctest::Approx(norms.grad * norms.grad + 25.0 * norms.l2 * norms.l2).epsilon(1e-12));
}

TEST_CASE("ratio is scale invariant") {
  const auto v = sdtn::build_modal(Mode(1, 3), cplx(2.0, 0.0), 1.0, ModalFamily::polynomial);
  auto norms = sdtn::volume_norms(v);
  const double base = sdtn::friedrichs_ratio(norms);
  for (double alpha : {1e-6, 0.5, 3.0, 1e8}) {
    auto scaled = norms;
    scaled.l2 *= alpha;
    scaled.grad *= alpha;
    scaled.neumann_h_minus_half *= alpha;
    CHECK(std::abs(sdtn::friedrichs_ratio(scaled) - base) <= 1e-12 * base);
  }
}

TEST_CASE("sweep is bounded and refinement-stable") {
  std::vector<cplx> sgrid, refined;
  for (int i = 0; i <= 25; ++i) sgrid.push_back(cplx(2.0 * i, 0.0));
  for (int i = 0; i <= 50; ++i) refined.push_back(cplx(1.0 * i, 0.0));
  const std::vector<ModalFamily> families = {ModalFamily::polynomial,
                                             ModalFamily::boundary_layer};
  const auto coarse = sdtn::friedrichs_sweep(3, 1.0, sgrid, 10, families);
  const auto fine = sdtn::friedrichs_sweep(3, 1.0, refined, 10, families);
  CHECK(coarse.max_ratio > 0.0);
  CHECK(coarse.max_ratio < 10.0);
  CHECK(std::abs(fine.max_ratio - coarse.max_ratio) <= 0.05 * coarse.max_ratio);
  // dimensions have different witnesses, both bounded
  const auto d4 = sdtn::friedrichs_sweep(4, 1.0, sgrid, 10, families);
  CHECK(d4.max_ratio > 0.0);
  CHECK(d4.max_ratio < 10.0);
  CHECK(d4.max_ratio != doctest::Approx(coarse.max_ratio).epsilon(1e-6));
}

TEST_CASE("n = 2 runs in observe-only mode") {
  std::vector<cplx> sgrid = {cplx(0.0, 0.0), cplx(5.0, 0.0)};
  const std::vector<ModalFamily> families = {ModalFamily::polynomial};
  CHECK_THROWS_AS(sdtn::friedrichs_sweep(2, 1.0, sgrid, 3, families), std::invalid_argument);
  const auto observed = sdtn::friedrichs_sweep(2, 1.0, sgrid, 3, families, 64, true);
  CHECK(observed.rows.size() == 8);  // recorded, not asserted
  // z_{0,0}(0) = 0 admits the constant, whose denominator vanishes: the
  // two-dimensional sweep is genuinely unbounded at that corner
  CHECK(std::isinf(observed.max_ratio));
  for (const auto& row : observed.rows)
    if (!(row.m == 0 && row.s == cplx(0.0, 0.0))) CHECK(std::isfinite(row.ratio));
}

TEST_CASE("corollary inequalities on the boundary-layer corpus") {
  const int n = 3;
  const double R = 1.0;
  // witness constants: C_F from a sweep, the others measured on the corpus
  std::vector<cplx> sgrid;
  for (int i = 0; i <= 25; ++i) sgrid.push_back(cplx(2.0 * i, 0.0));
  const std::vector<ModalFamily> families = {ModalFamily::polynomial,
                                             ModalFamily::boundary_layer};
  const double c_f = sdtn::friedrichs_sweep(n, R, sgrid, 10, families).max_ratio;

  std::vector<ModalTestFunction> layer_corpus;
  for (int m = 0; m <= 8; ++m)
    for (const cplx s : {cplx(0.0, 0.0), cplx(0.3, 0.0), cplx(2.0, 0.0), cplx(1.0, -3.0),
                         cplx(0.0, 12.0), cplx(20.0, 5.0)})
      layer_corpus.push_back(sdtn::build_modal(Mode(m, n), s, R, ModalFamily::boundary_layer));

  sdtn::CorollaryConstants constants;
  constants.c_f = c_f;
  constants.c_omega1 = sdtn::measure_normal_trace_constant(layer_corpus);
  constants.c_tr = sdtn::measure_trace_constant(layer_corpus);
  CHECK(constants.c_omega1 > 0.0);
  CHECK(constants.c_tr > 0.0);

  int gradient_checked = 0;
  for (const auto& v : layer_corpus) {
    const auto rep = sdtn::corollary_check(v, constants);
    CHECK(rep.margin_l2 >= -1e-12 * rep.l2);
    CHECK(rep.margin_trace >= -1e-12 * rep.trace_indexed);
    if (rep.gradient_applicable) {
      ++gradient_checked;
      CHECK(rep.margin_gradient >= -1e-12 * rep.l2);
    }
    // |s| >= 1 degenerate direction: ||v||_{L2} <= ||v||_{H1,s}/|s|
    if (std::abs(v.s) >= 1.0) CHECK(rep.l2 <= rep.h1_indexed / std::abs(v.s) * (1.0 + 1e-12));
  }
  CHECK(gradient_checked > 0);  // the small-|s| variant was exercised
}

TEST_CASE("builder validation") {
  CHECK_THROWS_AS(sdtn::build_modal(Mode(0, 3), cplx(1.0, 0.0), -1.0, ModalFamily::polynomial),
                  std::domain_error);
  CHECK_THROWS_AS(sdtn::build_modal(Mode(0, 3), cplx(-1.0, 0.0), 1.0, ModalFamily::polynomial),
                  std::domain_error);
}
