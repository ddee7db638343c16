// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "sbhclock/gcs.hpp"
#include "sbhclock/su11.hpp"

using namespace sbhclock;
using namespace sbhclock::gcs;
using namespace sbhclock::su11;

namespace {

// Overlap by brute-force contraction of truncated coefficient vectors.
Complex overlap_by_series(const DiskPoint& a, const DiskPoint& b, double K) {
  const int cutoff =
      std::max(min_cutoff_for_tail(0.85, K, 1e-16) + 8, 64);
  const Su11Rep rep = build_rep(K, cutoff);
  const CoherentState sa = coherent_state(rep, a, 1e-16);
  const CoherentState sb = coherent_state(rep, b, 1e-16);
  return sa.coeffs.dot(sb.coeffs);  // Eigen dot conjugates the left factor
}

std::mt19937_64 seeded_rng() { return std::mt19937_64(20260817ULL); }

DiskPoint random_point(std::mt19937_64& rng, double r_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = r_max * std::sqrt(u(rng));
  const double th = 2.0 * M_PI * u(rng);
  return DiskPoint(Complex(r * std::cos(th), r * std::sin(th)));
}

}  // namespace

TEST_CASE("disk points: open-disk validation") {
  CHECK_NOTHROW(DiskPoint(Complex(0.99, 0.0)));
  CHECK_THROWS_AS(DiskPoint(Complex(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(DiskPoint(Complex(0.8, 0.7)), DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(HalfPlanePoint(0.0, -1.0), DomainError);
  CHECK_NOTHROW(HalfPlanePoint(-3.0, 1e-9));
}

TEST_CASE("coherent state: coefficients at K = 1/2 are a pure geometric tower") {
  const Su11Rep rep = build_rep(0.5, 40);
  const CoherentState st = coherent_state(rep, DiskPoint(Complex(0.5, 0.0)));
  const double head = std::sqrt(0.75);
  CHECK(std::abs(st.coeffs(0) - Complex(head, 0.0)) <= 1e-15);
  CHECK(std::abs(st.coeffs(1) - Complex(head * 0.5, 0.0)) <= 1e-15);
  CHECK(std::abs(st.coeffs(7) - Complex(head * std::pow(0.5, 7), 0.0)) <= 1e-15);
  CHECK(st.coeffs.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coherent state: phases wind with the basis index") {
  const Su11Rep rep = build_rep(1.5, 48);
  const DiskPoint xi(std::polar(0.4, 1.1));
  const CoherentState st = coherent_state(rep, xi);
  for (const int m : {1, 2, 5}) {
    CHECK(std::arg(st.coeffs(m)) ==
          doctest::Approx(std::remainder(m * 1.1, 2.0 * M_PI)).epsilon(1e-12));
  }
}

TEST_CASE("coherent state: truncation bound is honoured and reported") {
  const DiskPoint xi(Complex(0.9, 0.0));
  const double K = 0.5;
  const int need = min_cutoff_for_tail(0.9, K, 1e-12);
  CHECK(need > 10);

  // Smallest representation that fits exactly `need` coefficients: the bound
  // certifies the retained norm right at the boundary.
  const Su11Rep exact = build_rep(K, need - 1);
  const CoherentState st = coherent_state(exact, xi, 1e-12);
  const double deficit = 1.0 - st.coeffs.squaredNorm();
  CHECK(deficit <= 1e-12);
  CHECK(deficit >= 0.0);

  // One coefficient short must refuse, reporting what would have sufficed.
  const Su11Rep small = build_rep(K, need - 2);
  try {
    coherent_state(small, xi, 1e-12);
    CHECK(false);
  } catch (const TruncationError& e) {
    CHECK(e.required_cutoff() == need);
  }
}

TEST_CASE("coherent state: tail bound shrinks with tolerance, grows with radius") {
  CHECK(min_cutoff_for_tail(0.5, 1.0, 1e-8) <
        min_cutoff_for_tail(0.5, 1.0, 1e-14));
  CHECK(min_cutoff_for_tail(0.3, 1.0, 1e-12) <
        min_cutoff_for_tail(0.9, 1.0, 1e-12));
  CHECK(min_cutoff_for_tail(0.0, 2.5, 1e-12) == 1);
  CHECK_THROWS_AS(min_cutoff_for_tail(1.0, 1.0, 1e-12), DomainError);
  CHECK_THROWS_AS(min_cutoff_for_tail(0.5, 1.0, 0.0), ParameterError);
  CHECK_THROWS_AS(coherent_state(build_rep(1.0, 8), DiskPoint(), 1e-3),
                  ParameterError);
}

TEST_CASE("coherent state: zero point occupies only the lowest basis state") {
  const Su11Rep rep = build_rep(2.5, 4);
  const CoherentState st = coherent_state(rep, DiskPoint());
  CHECK(std::abs(st.coeffs(0) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(st.coeffs(3)) == 0.0);
}

TEST_CASE("overlap: closed form matches pinned values") {
  const Complex o1 = overlap(DiskPoint(), DiskPoint(Complex(0.6, 0.0)), 1.0);
  CHECK(std::abs(o1 - Complex(0.64, 0.0)) <= 1e-15);

  const Complex o2 =
      overlap(DiskPoint(Complex(0.5, 0.0)), DiskPoint(Complex(0.0, 0.5)), 0.5);
  CHECK(o2.real() == doctest::Approx(0.75 / 1.0625).epsilon(1e-14));
  CHECK(o2.imag() == doctest::Approx(0.75 * 0.25 / 1.0625).epsilon(1e-14));
}

TEST_CASE("overlap: closed form agrees with the series for random pairs") {
  auto rng = seeded_rng();
  for (const double K : {0.5, 1.0, 2.5}) {
    for (int i = 0; i < 20; ++i) {
      const DiskPoint a = random_point(rng, 0.8);
      const DiskPoint b = random_point(rng, 0.8);
      CHECK(std::abs(overlap(a, b, K) - overlap_by_series(a, b, K)) <= 1e-12);
    }
  }
}

TEST_CASE("overlap: unit norm on the diagonal") {
  auto rng = seeded_rng();
  for (int i = 0; i < 10; ++i) {
    const DiskPoint a = random_point(rng, 0.95);
    CHECK(std::abs(overlap(a, a, 1.5) - Complex(1.0, 0.0)) <= 1e-14);
  }
}

TEST_CASE("half-plane chart: pinned images and exact inversion") {
  const HalfPlanePoint origin = disk_to_halfplane(DiskPoint());
  CHECK(origin.v() == doctest::Approx(0.0));
  CHECK(origin.w() == doctest::Approx(1.0));

  const HalfPlanePoint up = disk_to_halfplane(DiskPoint(Complex(0.0, 0.5)));
  CHECK(up.v() == doctest::Approx(0.0));
  CHECK(up.w() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const HalfPlanePoint right = disk_to_halfplane(DiskPoint(Complex(0.5, 0.0)));
  CHECK(right.v() == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(right.w() == doctest::Approx(5.0 / 3.0).epsilon(1e-14));

  auto rng = seeded_rng();
  for (int i = 0; i < 50; ++i) {
    const DiskPoint a = random_point(rng, 0.97);
    const DiskPoint back = halfplane_to_disk(disk_to_halfplane(a));
    CHECK(std::abs(back.value() - a.value()) <= 1e-13);
  }
  const DiskPoint fwd = halfplane_to_disk(HalfPlanePoint(0.8, 5.0 / 3.0));
  CHECK(std::abs(fwd.value() - Complex(0.5, 0.0)) <= 1e-14);
}

TEST_CASE("generator expectations: pinned values and hyperboloid constraint") {
  const GeneratorExpectation e =
      expect_generators(DiskPoint(Complex(0.5, 0.0)));
  CHECK(e.k0 == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(e.kminus - Complex(4.0 / 3.0, 0.0)) <= 1e-14);
  CHECK(std::abs(e.kplus - std::conj(e.kminus)) == 0.0);

  auto rng = seeded_rng();
  for (int i = 0; i < 100; ++i) {
    const GeneratorExpectation g = expect_generators(random_point(rng, 0.95));
    CHECK(g.k0 * g.k0 - std::norm(g.kminus) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("classical energy: equals coupling times chart height") {
  CHECK(classical_energy(DiskPoint(Complex(0.5, 0.0)), 2.0) ==
        doctest::Approx(10.0 / 3.0).epsilon(1e-14));
  CHECK(classical_energy(DiskPoint(Complex(0.0, 0.5)), 3.0) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // Matrix cross-check: <xi|H|xi> on a truncated ladder.
  auto rng = seeded_rng();
  for (const double K : {0.5, 1.0, 2.5}) {
    for (int i = 0; i < 5; ++i) {
      const DiskPoint xi = random_point(rng, 0.6);
      const int cutoff = min_cutoff_for_tail(0.6, K, 1e-15) + 8;
      const Su11Rep rep = build_rep(K, cutoff);
      const Eigen::MatrixXcd H = build_H_xi(rep).matrix;
      const Eigen::VectorXcd psi = coherent_state(rep, xi, 1e-12).coeffs;
      const double matrix_energy = (psi.adjoint() * H * psi)(0, 0).real();
      const double closed = classical_energy(xi, 1.0);
      CHECK(std::abs(matrix_energy - closed) <= 1e-12 * std::abs(closed));
    }
  }
}

TEST_CASE("line fit: recovers an exact line with zero residual") {
  const std::vector<double> xs = {0.0, 1.0, 2.0, 3.0, 4.0};
  const std::vector<double> ys = {1.0, 3.0, 5.0, 7.0, 9.0};
  const LineFit fit = fit_line(xs, ys);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fit.rms_residual <= 1e-14);
  CHECK_THROWS_AS(fit_line({1.0}, {2.0}), ParameterError);
  CHECK_THROWS_AS(fit_line({1.0, 2.0}, {2.0}), ParameterError);
}

TEST_CASE("overlap decay: log-magnitude is linear in the weight") {
  const DiskPoint a;
  const DiskPoint b(Complex(0.6, 0.0));
  const std::vector<double> Ks = {1.0, 2.0, 4.0, 8.0, 16.0};
  const std::vector<OverlapDecayRow> rows = overlap_decay_scan(a, b, Ks);
  REQUIRE(rows.size() == Ks.size());

  std::vector<double> xs, ys;
  for (const OverlapDecayRow& r : rows) {
    CHECK(r.abs_value == doctest::Approx(std::abs(r.value)).epsilon(1e-15));
    xs.push_back(r.K);
    ys.push_back(r.log_abs);
  }
  const LineFit fit = fit_line(xs, ys);
  CHECK(fit.slope == doctest::Approx(std::log(0.64)).epsilon(1e-12));
  CHECK(fit.rms_residual <= 1e-12);
  CHECK(overlap_log_slope(a, b) ==
        doctest::Approx(std::log(0.64)).epsilon(1e-14));
}

TEST_CASE("overlap decay: closed-form slope matches the fitted one off-axis") {
  const DiskPoint a(Complex(0.2, 0.1));
  const DiskPoint b(Complex(-0.3, 0.4));
  std::vector<double> Ks;
  for (int i = 1; i <= 12; ++i) Ks.push_back(0.5 * i);
  const std::vector<OverlapDecayRow> rows = overlap_decay_scan(a, b, Ks);
  std::vector<double> ys;
  for (const OverlapDecayRow& r : rows) ys.push_back(r.log_abs);
  const LineFit fit = fit_line(Ks, ys);
  CHECK(fit.slope == doctest::Approx(overlap_log_slope(a, b)).epsilon(1e-10));
  CHECK(fit.rms_residual <= 1e-12);
}

TEST_CASE("energy fluctuations: relative spread halves when the weight quadruples") {
  const DiskPoint xi(Complex(0.4, 0.1));
  const std::vector<FluctuationRow> rows =
      energy_fluctuation_scan(xi, 1.0, {4.0, 16.0});
  REQUIRE(rows.size() == 2);
  // Exact closed form 1/sqrt(2K).
  CHECK(rows[0].ratio == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-10));
  CHECK(rows[1].ratio == doctest::Approx(rows[0].ratio / 2.0).epsilon(1e-10));
  // The mean is weight independent: J times the chart height.
  const double w = disk_to_halfplane(xi).w();
  CHECK(rows[0].mean == doctest::Approx(w).epsilon(1e-12));
  CHECK(rows[1].mean == doctest::Approx(w).epsilon(1e-12));
}

TEST_CASE("identity resolution: default quadrature resolves to near machine noise") {
  const std::vector<DiskPoint> probes = {
      DiskPoint(), DiskPoint(Complex(0.3, 0.2)), DiskPoint(Complex(0.0, 0.5))};
  for (const double K : {1.0, 1.5, 2.5}) {
    const QuadResult res = identity_resolution_residual(K, probes, QuadSpec{});
    CHECK(res.converged);
    CHECK(res.residual <= 1e-6);
  }
}

TEST_CASE("identity resolution: a deliberately coarse rule reports non-convergence") {
  QuadSpec spec;
  spec.radial_order = 2;
  spec.angular_order = 2;
  spec.max_refine = 0;
  const QuadResult res = identity_resolution_residual(
      1.0, {DiskPoint(Complex(0.3, 0.2))}, spec);
  CHECK_FALSE(res.converged);
  CHECK(res.residual > 0.1);
  CHECK(res.radial_order_used == 2);
  CHECK(res.angular_order_used == 2);
}

TEST_CASE("identity resolution: refinement ladder rescues the coarse rule") {
  QuadSpec spec;
  spec.radial_order = 2;
  spec.angular_order = 2;
  spec.max_refine = 6;
  spec.refine_tol = 1e-10;
  const QuadResult res = identity_resolution_residual(
      1.0, {DiskPoint(Complex(0.3, 0.2))}, spec);
  CHECK(res.converged);
  CHECK(res.residual <= 1e-8);
  CHECK(res.radial_order_used > 2);
}

TEST_CASE("identity resolution: boundary weight is rejected, not mis-integrated") {
  const std::vector<DiskPoint> probes = {DiskPoint(Complex(0.3, 0.2))};
  CHECK_THROWS_AS(identity_resolution_residual(0.5, probes, QuadSpec{}),
                  UnsupportedMeasureError);
  CHECK_THROWS_AS(identity_resolution_residual(0.45, probes, QuadSpec{}),
                  UnsupportedMeasureError);
  CHECK_THROWS_AS(identity_resolution_residual(1.0, {}, QuadSpec{}),
                  ParameterError);
}
