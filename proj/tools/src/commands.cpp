// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "sbhclock/gcs.hpp"
#include "sbhclock/horizon.hpp"
#include "sbhclock/numio.hpp"
#include "sbhclock/paw.hpp"
#include "sbhclock/su11.hpp"
#include "sbhclock/twomode.hpp"
#include "sbhclock/types.hpp"

namespace sbhclock {
namespace cli {

namespace {

using json = nlohmann::ordered_json;
using numio::format_double;
using numio::format_int;

std::string ensure_out_dir(const RunConfig& cfg) {
  const std::string out = cfg.get_string("out", ".");
  std::error_code ec;
  std::filesystem::create_directories(out, ec);
  if (ec) {
    throw ConfigError("config: cannot create output directory '" + out + "'");
  }
  return out;
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

horizon::UnitSystem parse_units(const RunConfig& cfg) {
  const std::string units = cfg.get_string("units", "natural");
  if (units == "natural") return horizon::UnitSystem::natural;
  if (units == "si") return horizon::UnitSystem::si;
  throw ConfigError("config: units must be 'natural' or 'si', got '" + units +
                    "'");
}

void write_json(const std::string& path, const json& j,
                std::vector<std::string>& artifacts) {
  numio::write_text(path, j.dump(2) + "\n");
  artifacts.push_back(path);
}

void write_csv(const std::string& path, const numio::CsvWriter& csv,
               std::vector<std::string>& artifacts) {
  csv.write(path);
  artifacts.push_back(path);
}

CheckResult check_leq(const std::string& name, double value, double bound) {
  CheckResult c;
  c.name = name;
  c.pass = value <= bound && std::isfinite(value);
  c.detail = format_double(value) + " <= " + format_double(bound);
  return c;
}

CheckResult check_true(const std::string& name, bool ok,
                       const std::string& detail) {
  return CheckResult{name, ok, detail};
}

// Explicit bit mapping keeps draws identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

DiskPoint random_disk_point(std::mt19937_64& rng, double r_max) {
  const double r = r_max * std::sqrt(uniform01(rng));
  const double theta = 2.0 * 3.14159265358979323846 * uniform01(rng);
  return DiskPoint(std::polar(r, theta));
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * i / (n - 1.0);
  }
  return out;
}

json complex_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

// ---------------------------------------------------------------------------
// algebra-check

CommandResult run_algebra_check(const RunConfig& cfg) {
  CommandResult result;
  const std::string out = ensure_out_dir(cfg);
  const std::vector<double> Ks =
      cfg.get_double_list("K_list", {0.5, 1.0, 2.5, 10.0});
  const int cutoff = cfg.get_int("cutoff", 60);
  const double J = cfg.get_double("J", 1.0);
  const int n_random = cfg.get_int("n_random", 8);
  const bool dump = cfg.get_bool("dump_matrices", false);
  if (n_random < 1) {
    throw ConfigError("config: n_random must be >= 1");
  }
  std::mt19937_64 rng(cfg.get_uint64("seed", 2026));
  std::vector<DiskPoint> points;
  points.reserve(n_random);
  for (int i = 0; i < n_random; ++i) {
    points.push_back(random_disk_point(rng, 0.8));
  }

  numio::CsvWriter residuals({"K", "cutoff", "commutator_residual",
                              "casimir_interior_residual", "h_hermiticity",
                              "h00_rel_err"});
  numio::CsvWriter random_rows({"K", "re_xi", "im_xi", "k0bar",
                                "abs_kminusbar", "hyperboloid_residual",
                                "energy_rel_err"});
  double worst_comm = 0.0, worst_cas = 0.0, worst_herm = 0.0, worst_h00 = 0.0;
  double worst_hyp = 0.0, worst_energy = 0.0;
  for (double K : Ks) {
    const su11::Su11Rep rep = su11::build_rep(K, cutoff, J);
    const double comm = su11::commutator_residual(rep);
    const Eigen::MatrixXcd cas = su11::casimir_matrix(rep);
    const int ni = cutoff - 1;
    const Eigen::MatrixXcd cas_dev =
        cas.topLeftCorner(ni, ni) -
        ((K - 1.0) / K) * Eigen::MatrixXcd::Identity(ni, ni);
    const double cas_res = cas_dev.cwiseAbs().maxCoeff();
    const su11::HamiltonianXi H = su11::build_H_xi(rep, J);
    const double herm = (H.matrix - H.matrix.adjoint()).cwiseAbs().maxCoeff();
    const double h00 = std::abs(H.matrix(0, 0) / J - 1.0);
    worst_comm = std::max(worst_comm, comm);
    worst_cas = std::max(worst_cas, cas_res);
    worst_herm = std::max(worst_herm, herm);
    worst_h00 = std::max(worst_h00, h00);
    residuals.add_row({format_double(K), format_int(cutoff),
                       format_double(comm), format_double(cas_res),
                       format_double(herm), format_double(h00)});
    for (const DiskPoint& xi : points) {
      const gcs::GeneratorExpectation e = gcs::expect_generators(xi);
      const double hyp =
          std::abs(e.k0 * e.k0 - std::norm(e.kminus) - 1.0);
      // The energy column needs a cutoff adequate for the sampled point.
      const int needed =
          gcs::min_cutoff_for_tail(std::abs(xi.value()), K, 1e-13) + 8;
      const su11::Su11Rep rep_e =
          needed > cutoff ? su11::build_rep(K, needed, J) : rep;
      const gcs::CoherentState state = gcs::coherent_state(rep_e, xi, 1e-9);
      const Eigen::MatrixXcd He = su11::build_H_xi(rep_e, J).matrix;
      const double energy = state.coeffs.dot(He * state.coeffs).real();
      const double energy_rel =
          std::abs(energy - gcs::classical_energy(xi, J)) /
          gcs::classical_energy(xi, J);
      worst_hyp = std::max(worst_hyp, hyp);
      worst_energy = std::max(worst_energy, energy_rel);
      random_rows.add_row({format_double(K), format_double(xi.value().real()),
                           format_double(xi.value().imag()),
                           format_double(e.k0),
                           format_double(std::abs(e.kminus)),
                           format_double(hyp), format_double(energy_rel)});
    }
    if (dump) {
      auto dump_matrix = [&](const Eigen::MatrixXcd& M,
                             const std::string& stem) {
        numio::CsvWriter w({"row", "col", "re", "im"});
        for (int r = 0; r < M.rows(); ++r) {
          for (int c = 0; c < M.cols(); ++c) {
            if (M(r, c) != Complex(0.0, 0.0)) {
              w.add_row({format_int(r), format_int(c),
                         format_double(M(r, c).real()),
                         format_double(M(r, c).imag())});
            }
          }
        }
        std::string k_tag = format_double(K);
        std::replace(k_tag.begin(), k_tag.end(), '.', 'p');
        write_csv(join(out, stem + "_K" + k_tag + ".csv"), w,
                  result.artifacts);
      };
      dump_matrix(rep.k0, "k0");
      dump_matrix(rep.kplus, "kplus");
      dump_matrix(rep.kminus, "kminus");
    }
  }
  write_csv(join(out, "algebra_residuals.csv"), residuals, result.artifacts);
  write_csv(join(out, "algebra_random_points.csv"), random_rows,
            result.artifacts);
  result.checks.push_back(
      check_leq("commutator_residual", worst_comm, 1e-10));
  result.checks.push_back(
      check_leq("casimir_interior_residual", worst_cas, 1e-10));
  result.checks.push_back(check_leq("h_hermiticity", worst_herm, 1e-12));
  result.checks.push_back(check_leq("h00_rel_err", worst_h00, 1e-14));
  result.checks.push_back(
      check_leq("hyperboloid_residual", worst_hyp, 1e-12));
  result.checks.push_back(check_leq("energy_rel_err", worst_energy, 1e-8));
  return result;
}

// ---------------------------------------------------------------------------
// crossover-scan

CommandResult run_crossover_scan(const RunConfig& cfg) {
  CommandResult result;
  const std::string out = ensure_out_dir(cfg);
  const DiskPoint xi1(cfg.get_double("xi1_re", 0.0),
                      cfg.get_double("xi1_im", 0.0));
  const DiskPoint xi2(cfg.get_double("xi2_re", 0.6),
                      cfg.get_double("xi2_im", 0.0));
  const DiskPoint xi(cfg.get_double("xi_re", 0.4),
                     cfg.get_double("xi_im", 0.1));
  const std::vector<double> Ks =
      cfg.get_double_list("K_list", {1.0, 2.0, 4.0, 8.0, 16.0});
  const double J = cfg.get_double("J", 1.0);
  const double tail_tol = cfg.get_double("tail_tol", 1e-12);

  const std::vector<gcs::OverlapDecayRow> decay =
      gcs::overlap_decay_scan(xi1, xi2, Ks);
  numio::CsvWriter decay_csv({"K", "re_xi1", "im_xi1", "re_xi2", "im_xi2",
                              "abs_overlap", "log_abs_overlap"});
  std::vector<double> ks, logs;
  for (const auto& row : decay) {
    decay_csv.add_row({format_double(row.K),
                       format_double(xi1.value().real()),
                       format_double(xi1.value().imag()),
                       format_double(xi2.value().real()),
                       format_double(xi2.value().imag()),
                       format_double(row.abs_value),
                       format_double(row.log_abs)});
    ks.push_back(row.K);
    logs.push_back(row.log_abs);
  }
  write_csv(join(out, "overlap_decay.csv"), decay_csv, result.artifacts);

  const gcs::LineFit fit = gcs::fit_line(ks, logs);
  const double closed = gcs::overlap_log_slope(xi1, xi2);

  const std::vector<gcs::FluctuationRow> fluct =
      gcs::energy_fluctuation_scan(xi, J, Ks, tail_tol);
  numio::CsvWriter fluct_csv({"K", "mean", "stddev", "ratio"});
  for (const auto& row : fluct) {
    fluct_csv.add_row({format_double(row.K), format_double(row.mean),
                       format_double(row.stddev), format_double(row.ratio)});
  }
  write_csv(join(out, "energy_fluctuation.csv"), fluct_csv, result.artifacts);

  json j;
  j["xi1"] = complex_json(xi1.value());
  j["xi2"] = complex_json(xi2.value());
  j["xi_fluctuation"] = complex_json(xi.value());
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["rms_residual"] = fit.rms_residual;
  j["closed_form_slope"] = closed;
  j["slope_abs_err"] = std::abs(fit.slope - closed);
  write_json(join(out, "crossover_fit.json"), j, result.artifacts);

  result.checks.push_back(
      check_leq("overlap_slope_abs_err", std::abs(fit.slope - closed), 1e-9));
  result.checks.push_back(check_leq("overlap_fit_rms", fit.rms_residual,
                                    1e-10));
  double mean_dev = 0.0;
  for (const auto& row : fluct) {
    mean_dev = std::max(
        mean_dev, std::abs(row.mean - fluct.front().mean) / fluct.front().mean);
  }
  result.checks.push_back(check_leq("mean_energy_K_independence", mean_dev,
                                    1e-8));
  // Quadrupling K must halve the relative spread.
  bool any_pair = false;
  double worst_halving = 0.0;
  for (std::size_t i = 0; i < fluct.size(); ++i) {
    for (std::size_t j2 = 0; j2 < fluct.size(); ++j2) {
      if (std::abs(fluct[j2].K - 4.0 * fluct[i].K) < 1e-12) {
        any_pair = true;
        worst_halving = std::max(
            worst_halving,
            std::abs(fluct[j2].ratio / fluct[i].ratio - 0.5));
      }
    }
  }
  if (any_pair) {
    result.checks.push_back(
        check_leq("fluctuation_ratio_halving_dev", worst_halving, 0.025));
  } else {
    result.checks.push_back(check_true("fluctuation_ratio_halving_dev", true,
                                       "no quadruple K pairs in K_list"));
  }
  return result;
}

// ---------------------------------------------------------------------------
// thermal

CommandResult run_thermal(const RunConfig& cfg) {
  CommandResult result;
  const std::string out = ensure_out_dir(cfg);
  const DiskPoint xi(cfg.get_double("xi_re", 0.5),
                     cfg.get_double("xi_im", 0.0));
  twomode::TwoModeConfig tm;
  tm.J = cfg.get_double("J", 1.0);
  tm.n_pairs = cfg.get_int("n_pairs", 1);
  const twomode::ThermalState state = twomode::thermal_report(xi, tm);

  const double lambda = state.lambda;
  numio::CsvWriter probs_csv({"n", "p_n", "geometric_p_n"});
  double geom_dev = 0.0;
  for (Eigen::Index n = 0; n < state.probs.size(); ++n) {
    const double expected = (1.0 - lambda) * std::pow(lambda, double(n));
    geom_dev = std::max(geom_dev, std::abs(state.probs(n) - expected));
    probs_csv.add_row({format_int(n), format_double(state.probs(n)),
                       format_double(expected)});
  }
  write_csv(join(out, "reduced_probs.csv"), probs_csv, result.artifacts);

  const double split = twomode::energy_split_residual(xi, tm);
  double gibbs_dev = 0.0;
  if (state.T > 0.0) {
    gibbs_dev = std::abs(std::exp(-state.omega / state.T) - lambda);
  }
  const double purity_dev =
      std::abs(state.purity - (1.0 - lambda) / (1.0 + lambda));

  json j;
  j["xi"] = complex_json(xi.value());
  j["lambda"] = lambda;
  j["omega"] = state.omega;
  j["T"] = state.T;
  j["Z0"] = state.Z0;
  j["purity"] = state.purity;
  j["entropy"] = state.entropy;
  j["status"] = state.status == twomode::ThermalStatus::ok
                    ? "ok"
                    : (state.status == twomode::ThermalStatus::zero_temperature
                           ? "zero_temperature"
                           : "nonpositive_frequency");
  j["max_offdiag"] = state.max_offdiag;
  j["geometric_law_max_dev"] = geom_dev;
  j["gibbs_weight_residual"] = gibbs_dev;
  j["energy_split_residual"] = split;
  write_json(join(out, "thermal_report.json"), j, result.artifacts);

  result.checks.push_back(
      check_leq("reduced_offdiag", state.max_offdiag, 1e-14));
  result.checks.push_back(check_leq("geometric_law_max_dev", geom_dev, 1e-12));
  result.checks.push_back(check_leq("gibbs_weight_residual", gibbs_dev,
                                    1e-12));
  result.checks.push_back(check_leq("energy_split_residual", split, 1e-12));
  result.checks.push_back(check_leq("purity_identity", purity_dev, 1e-15));
  return result;
}

// ---------------------------------------------------------------------------
// isotherm

CommandResult run_isotherm(const RunConfig& cfg) {
  CommandResult result;
  const std::string out = ensure_out_dir(cfg);
  const horizon::UnitSystem units = parse_units(cfg);
  twomode::TwoModeConfig tm;
  tm.J = cfg.get_double("J", 1.0);
  tm.n_pairs = cfg.get_int("n_pairs", 1);
  double T_target = 0.0;
  if (cfg.has("T_target")) {
    T_target = cfg.get_double("T_target", 0.0);
  } else {
    // Horizon temperature of the given mass, in energy units (k_B = 1).
    const double mass = cfg.get_double(
        "mass",
        units == horizon::UnitSystem::natural ? 1.0 : horizon::si::solar_mass);
    const horizon::SchwarzschildParams params =
        units == horizon::UnitSystem::natural
            ? horizon::SchwarzschildParams::natural(mass)
            : horizon::SchwarzschildParams::si_units(mass);
    T_target = horizon::hawking_temperature(params);
  }
  const std::vector<double> angles = cfg.get_double_list(
      "angles", {0.0, 15.0, 30.0, 45.0, 60.0, 75.0, 90.0});
  const std::vector<twomode::IsothermPoint> points =
      twomode::microstate_isotherm(T_target, tm, angles);

  numio::CsvWriter csv({"angle_deg", "re_xi", "im_xi", "T", "residual",
                        "status"});
  int n_conv = 0;
  double worst = 0.0;
  for (const auto& pt : points) {
    const bool conv = pt.status == twomode::IsothermPointStatus::converged;
    if (conv) {
      ++n_conv;
      worst = std::max(worst, pt.residual);
    }
    csv.add_row({format_double(pt.angle_deg), format_double(pt.xi.real()),
                 format_double(pt.xi.imag()), format_double(pt.T),
                 format_double(pt.residual),
                 conv ? "converged" : "no_solution"});
  }
  write_csv(join(out, "isotherm.csv"), csv, result.artifacts);

  json j;
  j["T_target"] = T_target;
  j["units"] = units == horizon::UnitSystem::natural ? "natural" : "si";
  j["J"] = tm.J;
  j["n_pairs"] = tm.n_pairs;
  j["n_converged"] = n_conv;
  j["n_no_solution"] = static_cast<int>(points.size()) - n_conv;
  j["max_residual"] = worst;
  write_json(join(out, "isotherm_summary.json"), j, result.artifacts);

  result.checks.push_back(check_leq("isotherm_max_residual", worst, 1e-10));
  result.checks.push_back(check_true(
      "isotherm_any_converged", n_conv > 0,
      std::to_string(n_conv) + " of " + std::to_string(points.size()) +
          " rays converged"));
  return result;
}

// ---------------------------------------------------------------------------
// geodesic-compare

CommandResult run_geodesic_compare(const RunConfig& cfg) {
  CommandResult result;
  const std::string out = ensure_out_dir(cfg);
  const horizon::UnitSystem units = parse_units(cfg);
  const bool natural = units == horizon::UnitSystem::natural;
  const double mass =
      cfg.get_double("mass", natural ? 1.0 : horizon::si::solar_mass);
  const double m_probe = cfg.get_double("m_probe", 1.0);
  const double q0_frac = cfg.get_double("q0_frac", 1e-3);
  const double p0 = cfg.get_double("p0", 0.0);
  const int n_steps = cfg.get_int("n_steps", 4000);
  const double tau_factor = cfg.get_double("tau_factor", 1.1);
  if (!(q0_frac > 0.0) || !(q0_frac < 1.0)) {
    throw ConfigError("config: q0_frac must be in (0,1)");
  }
  if (n_steps < 16) {
    throw ConfigError("config: n_steps must be >= 16");
  }
  const horizon::SchwarzschildParams params =
      natural ? horizon::SchwarzschildParams::natural(mass)
              : horizon::SchwarzschildParams::si_units(mass);
  const double rs = params.schwarzschild_radius();
  const double kappa = params.surface_gravity();
  const double q0 = q0_frac * rs;
  const double t_half = std::sqrt(q0 / kappa);
  const double tau_end = tau_factor * t_half;
  const double dt = tau_end / n_steps;

  const horizon::Trajectory traj =
      horizon::integrate_infall(params, m_probe, q0, p0, tau_end, dt);

  numio::CsvWriter full_csv({"tau", "q", "p", "h"});
  numio::CsvWriter cmp_csv({"tau", "q_full", "q_linear", "rel_err"});
  double max_rel = 0.0;
  for (const auto& s : traj.samples) {
    full_csv.add_row({format_double(s.tau), format_double(s.q),
                      format_double(s.p), format_double(s.h)});
    if (s.q >= 0.5 * q0) {
      const horizon::TrajectorySample lin =
          horizon::linear_infall(params, m_probe, q0, p0, s.tau);
      const double rel = std::abs(s.q - lin.q) / s.q;
      max_rel = std::max(max_rel, rel);
      cmp_csv.add_row({format_double(s.tau), format_double(s.q),
                       format_double(lin.q), format_double(rel)});
    }
  }
  write_csv(join(out, "trajectory_full.csv"), full_csv, result.artifacts);
  write_csv(join(out, "trajectory_compare.csv"), cmp_csv, result.artifacts);

  const double T_H = horizon::hawking_temperature(params);
  const double c2 = params.c * params.c;
  const double rs_kappa_dev = std::abs(rs * kappa / (0.5 * c2) - 1.0);
  const double th_kappa_dev =
      std::abs(T_H / (params.hbar * kappa /
                      (2.0 * 3.14159265358979323846 * params.c)) -
               1.0);

  json j;
  j["units"] = natural ? "natural" : "si";
  j["mass"] = mass;
  j["m_probe"] = m_probe;
  j["r_s"] = rs;
  j["kappa"] = kappa;
  j["T_H"] = T_H;
  if (!natural) {
    j["T_H_kelvin"] = horizon::hawking_temperature_kelvin(params);
  }
  j["q0"] = q0;
  j["p0"] = p0;
  j["dt"] = dt;
  j["n_steps"] = n_steps;
  j["n_samples"] = static_cast<int>(traj.samples.size());
  j["stop_reason"] = traj.stop == horizon::StopReason::completed
                         ? "completed"
                         : "horizon_floor";
  j["max_rel_err_to_half_q0"] = max_rel;
  j["max_rel_energy_drift"] = traj.max_rel_energy_drift;
  j["rs_kappa_identity_residual"] = rs_kappa_dev;
  j["hawking_kappa_identity_residual"] = th_kappa_dev;
  write_json(join(out, "geodesic_summary.json"), j, result.artifacts);

  result.checks.push_back(
      check_leq("linearization_rel_err", max_rel, 0.01));
  result.checks.push_back(
      check_leq("energy_drift", traj.max_rel_energy_drift, 1e-9));
  result.checks.push_back(
      check_leq("rs_kappa_identity", rs_kappa_dev, 1e-14));
  result.checks.push_back(
      check_leq("hawking_kappa_identity", th_kappa_dev, 1e-14));
  return result;
}

// ---------------------------------------------------------------------------
// paw-demo

CommandResult run_paw_demo(const RunConfig& cfg) {
  CommandResult result;
  const std::string out = ensure_out_dir(cfg);
  const double K = cfg.get_double("K", 0.5);
  const int d_xi = cfg.get_int("d_xi", 80);
  const double J = cfg.get_double("J", 1.0);
  const DiskPoint xi0(cfg.get_double("xi0_re", 0.2),
                      cfg.get_double("xi0_im", 0.2));
  const double t_max = cfg.get_double("t_max", 0.5 / J);
  const int n_t = cfg.get_int("n_t", 41);
  const double threshold = cfg.get_double("threshold", 1e-8);
  const int n_q = cfg.get_int("n_q", 16);
  const double m_probe = cfg.get_double("m_probe", 1.0);
  const double accel = cfg.get_double("accel", 1.0);
  if (n_t < 3 || n_q < 2) {
    throw ConfigError("config: need n_t >= 3 and n_q >= 2");
  }

  const paw::ResonantDemo demo = paw::build_resonant_demo(K, d_xi, J, xi0);
  const double engineered_residual =
      paw::constraint_residual(demo.sys, demo.psi);
  const std::vector<paw::GlobalState> kernel =
      paw::kernel_states(demo.sys, 1e-8);
  double kernel_residual = engineered_residual;
  for (const auto& state : kernel) {
    kernel_residual =
        std::max(kernel_residual, paw::constraint_residual(demo.sys, state));
  }

  // Spectrum consistency: eigenvalues of the composite generator must be the
  // pair differences of the factor spectra.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_total(demo.sys.H_total);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_xi(demo.sys.H_xi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_gamma(demo.sys.H_gamma);
  std::vector<double> expected;
  expected.reserve(demo.sys.d_gamma * demo.sys.d_xi);
  for (int g = 0; g < demo.sys.d_gamma; ++g) {
    for (int x = 0; x < demo.sys.d_xi; ++x) {
      expected.push_back(es_xi.eigenvalues()(x) - es_gamma.eigenvalues()(g));
    }
  }
  std::sort(expected.begin(), expected.end());
  double spectrum_dev = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    spectrum_dev = std::max(
        spectrum_dev, std::abs(expected[i] - es_total.eigenvalues()(i)));
  }

  const std::vector<double> ts = linspace(-t_max, t_max, n_t);
  const std::vector<std::pair<double, DiskPoint>> family =
      paw::clock_family(demo.xi0, J, K, ts);
  const std::vector<paw::FidelitySample> trace =
      paw::conditional_evolution(demo.psi, demo.rep, demo.sys.H_gamma,
                                 demo.xi0, family);
  numio::CsvWriter trace_csv({"t", "fidelity", "norm", "defined"});
  double min_fid = 1.0;
  bool all_defined = true;
  for (const auto& s : trace) {
    trace_csv.add_row({format_double(s.t), format_double(s.fidelity),
                       format_double(s.norm), s.defined ? "1" : "0"});
    all_defined = all_defined && s.defined;
    if (s.defined) min_fid = std::min(min_fid, s.fidelity);
  }
  write_csv(join(out, "fidelity_trace.csv"), trace_csv, result.artifacts);

  const double level_top = demo.sys.H_gamma(1, 1).real();
  const std::vector<double> q_grid =
      linspace(0.0, 2.0 * level_top / (m_probe * accel), n_q);
  const paw::SupportGrid grid =
      paw::spacetime_support(demo.sys, demo.psi, demo.rep, ts, q_grid,
                             threshold, m_probe, accel);
  numio::CsvWriter support_csv({"t", "q", "abs_z2", "marked"});
  for (std::size_t iq = 0; iq < grid.q_grid.size(); ++iq) {
    for (std::size_t it = 0; it < grid.t_grid.size(); ++it) {
      support_csv.add_row({format_double(grid.t_grid[it]),
                           format_double(grid.q_grid[iq]),
                           format_double(grid.weights(iq, it)),
                           grid.marked[iq][it] ? "1" : "0"});
    }
  }
  write_csv(join(out, "spacetime_support.csv"), support_csv,
            result.artifacts);

  const std::vector<paw::SchmidtTerm> schmidt =
      paw::schmidt_decompose(demo.psi);
  json j;
  j["K"] = K;
  j["d_gamma"] = demo.sys.d_gamma;
  j["d_xi"] = demo.sys.d_xi;
  j["J"] = J;
  j["xi0"] = complex_json(xi0.value());
  j["matched_levels"] = demo.matched_levels;
  j["level_energies"] = {demo.sys.H_gamma(0, 0).real(),
                         demo.sys.H_gamma(1, 1).real()};
  j["kernel_dim"] = static_cast<int>(kernel.size());
  j["kernel_tol"] = 1e-8;
  j["max_kernel_residual"] = kernel_residual;
  std::vector<double> coeffs;
  for (const auto& term : schmidt) coeffs.push_back(term.coeff);
  j["schmidt_coeffs"] = coeffs;
  j["min_fidelity"] = min_fid;
  j["all_conditionals_defined"] = all_defined;
  j["spectrum_pair_difference_residual"] = spectrum_dev;
  write_json(join(out, "paw_report.json"), j, result.artifacts);

  result.checks.push_back(check_true(
      "kernel_dimension", static_cast<int>(kernel.size()) == demo.match_count,
      std::to_string(kernel.size()) + " == " +
          std::to_string(demo.match_count)));
  result.checks.push_back(
      check_leq("kernel_residual", kernel_residual, 1e-12));
  result.checks.push_back(check_true(
      "conditional_fidelity", min_fid >= 0.99 && all_defined,
      "min fidelity " + format_double(min_fid)));
  result.checks.push_back(
      check_leq("spectrum_pair_difference", spectrum_dev, 1e-10));
  return result;
}

}  // namespace

CommandResult run_command(const RunConfig& cfg) {
  const std::string& cmd = cfg.command();
  if (cmd == "algebra-check") return run_algebra_check(cfg);
  if (cmd == "crossover-scan") return run_crossover_scan(cfg);
  if (cmd == "thermal") return run_thermal(cfg);
  if (cmd == "isotherm") return run_isotherm(cfg);
  if (cmd == "geodesic-compare") return run_geodesic_compare(cfg);
  if (cmd == "paw-demo") return run_paw_demo(cfg);
  throw ConfigError("unknown command '" + cmd + "'");
}

}  // namespace cli
}  // namespace sbhclock
