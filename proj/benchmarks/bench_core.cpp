// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: representation assembly, coherent-state
// expansion, overlap evaluation, the identity-resolution quadrature, the
// radial integrator, and the composite eigendecomposition.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sbhclock/gcs.hpp"
#include "sbhclock/horizon.hpp"
#include "sbhclock/paw.hpp"
#include "sbhclock/su11.hpp"
#include "sbhclock/twomode.hpp"
#include "sbhclock/types.hpp"

namespace {

using namespace sbhclock;

void BM_BuildRepAndGenerator(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const su11::Su11Rep rep = su11::build_rep(10.0, cutoff);
    benchmark::DoNotOptimize(su11::build_H_xi(rep).matrix.data());
  }
}
BENCHMARK(BM_BuildRepAndGenerator)->Arg(50)->Arg(200);

void BM_CoherentState(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const su11::Su11Rep rep = su11::build_rep(2.5, cutoff);
  const DiskPoint xi(0.55, 0.35);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcs::coherent_state(rep, xi).coeffs.data());
  }
}
BENCHMARK(BM_CoherentState)->Arg(200)->Arg(800);

void BM_OverlapClosedForm(benchmark::State& state) {
  const DiskPoint a(0.3, 0.2);
  const DiskPoint b(-0.5, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcs::overlap(a, b, 7.5));
  }
}
BENCHMARK(BM_OverlapClosedForm);

void BM_OverlapBySeries(benchmark::State& state) {
  const su11::Su11Rep rep = su11::build_rep(7.5, 400);
  const Eigen::VectorXcd ca = gcs::coherent_state(rep, DiskPoint(0.3, 0.2)).coeffs;
  const Eigen::VectorXcd cb = gcs::coherent_state(rep, DiskPoint(-0.5, 0.4)).coeffs;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ca.dot(cb));
  }
}
BENCHMARK(BM_OverlapBySeries);

void BM_IdentityResolution(benchmark::State& state) {
  const std::vector<DiskPoint> probes = {DiskPoint(), DiskPoint(0.3, 0.2)};
  gcs::QuadSpec spec;
  spec.radial_order = static_cast<int>(state.range(0));
  spec.angular_order = 2 * spec.radial_order;
  spec.max_refine = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gcs::identity_resolution_residual(1.5, probes, spec).residual);
  }
}
BENCHMARK(BM_IdentityResolution)->Arg(16)->Arg(48);

void BM_ThermalReport(benchmark::State& state) {
  const twomode::TwoModeConfig cfg;
  const DiskPoint xi(0.5, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twomode::thermal_report(xi, cfg).entropy);
  }
}
BENCHMARK(BM_ThermalReport);

void BM_IntegrateInfall(benchmark::State& state) {
  const auto params = horizon::SchwarzschildParams::natural(1.0);
  const double q0 = 1e-3 * params.schwarzschild_radius();
  const double t_half = std::sqrt(q0 / params.surface_gravity());
  const long n_steps = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(horizon::integrate_infall(params, 1.0, q0, 0.0,
                                                       1.2 * t_half,
                                                       1.2 * t_half / n_steps)
                                 .samples.size());
  }
}
BENCHMARK(BM_IntegrateInfall)->Arg(512)->Arg(4096);

void BM_CompositeKernel(benchmark::State& state) {
  const int d_xi = static_cast<int>(state.range(0));
  const paw::ResonantDemo demo =
      paw::build_resonant_demo(0.5, d_xi, 1.0, DiskPoint(0.2, 0.2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(paw::kernel_states(demo.sys, 1e-8).size());
  }
}
BENCHMARK(BM_CompositeKernel)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
