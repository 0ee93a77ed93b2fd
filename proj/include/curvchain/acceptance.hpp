#pragma once

// Built-in acceptance suite. Each check reproduces one headline number of the
// model and compares it with a tolerance fixed below. Shared by `curvchain
// check` and the acceptance test binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "curvchain/casimir.hpp"
#include "curvchain/entanglement.hpp"
#include "curvchain/metric.hpp"
#include "curvchain/oracle/manybody.hpp"
#include "curvchain/parallel.hpp"
#include "curvchain/scaling_fit.hpp"
#include "curvchain/stats.hpp"
#include "curvchain/tridiag.hpp"
#include "curvchain/vacuum.hpp"

namespace curvchain::acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline Outcome outcome(int id, std::string name) {
  Outcome o;
  o.id = id;
  o.name = std::move(name);
  return o;
}

namespace tol {
inline constexpr double c0_abs = 1e-4;
inline constexpr double cB_abs = 1e-3;
inline constexpr double cvF_rel = 0.01;
inline constexpr double fit_seconds = 60.0;
inline constexpr double bulk_energy_rel = 0.01;
inline constexpr double correlator_rel = 0.02;
inline constexpr double entropy_residual = 0.05;
inline constexpr double volume_law_rel = 0.10;
inline constexpr double minkowski_force_rel = 0.10;
inline constexpr double crossover_factor = 2.0;
inline constexpr double crossover_scaling_rel = 0.25;
inline constexpr double small_n_band_lo = 0.5;
inline constexpr double small_n_band_hi = 1.5;
inline constexpr double large_n_rel = 0.20;
inline constexpr double rainbow_collapse_rel = 0.10;
inline constexpr double pearson_min = 0.99;
inline constexpr double oracle_abs = 1e-8;
inline constexpr double kernel = 1e-10;
inline constexpr double suite_seconds = 300.0;
}  // namespace tol

namespace detail {

inline std::string num(double v, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::vector<int> even_range(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; n += 2) out.push_back(n);
  return out;
}

inline std::vector<double> energies(const MetricSpec& spec, const std::vector<int>& sizes, int jobs) {
  std::vector<double> E(sizes.size());
  parallel_for(sizes.size(), jobs, [&](std::size_t i) {
    E[i] = ground_state_energy(build_profile(spec, sizes[i]));
  });
  return E;
}

struct NamedMetric {
  std::string label;
  MetricSpec spec;
};

inline std::vector<NamedMetric> bulk_metrics() {
  return {{"minkowski", MetricSpec::minkowski()},
          {"rindler a=0.01", MetricSpec::rindler(1.0, 0.01)},
          {"sine A=0.5 k=pi/100", MetricSpec::sine(1.0, 0.5, std::numbers::pi / 100.0)},
          {"rainbow h=5e-3", MetricSpec::rainbow(1.0, 5e-3)}};
}

}  // namespace detail

/// 1. Cardy constants of the flat chain from even N in [100, 400].
inline Outcome flat_cardy_constants(int jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sizes = detail::even_range(100, 400);
  const auto E = detail::energies(MetricSpec::minkowski(), sizes, jobs);
  std::vector<EnergySample> samples;
  for (std::size_t i = 0; i < sizes.size(); ++i) samples.push_back({sizes[i], E[i]});
  const auto lead = fit_flat_cardy(samples, {ParityMode::EvenOnly, FitOrder::Leading});
  const auto sub = fit_flat_cardy(samples, {ParityMode::EvenOnly, FitOrder::Subleading});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto ref = FitResult::dirac_chain();
  const double e0 = std::abs(sub.c0 - ref.c0);
  const double eB = std::abs(sub.cB - ref.cB);
  const double ev = std::abs(sub.cvF - ref.cvF) / ref.cvF;
  auto o = outcome(1, "flat Cardy constants");
  o.passed = e0 < tol::c0_abs && eB < tol::cB_abs && ev < tol::cvF_rel && secs < tol::fit_seconds;
  o.detail = "with 1/N^2 term: c0 err " + detail::num(e0, 3) + ", cB err " + detail::num(eB, 3) +
             ", cvF " + detail::num(sub.cvF) + "; 1/N only: c0 err " +
             detail::num(std::abs(lead.c0 - ref.c0), 3) + ", cB err " +
             detail::num(std::abs(lead.cB - ref.cB), 3) + ", cvF " + detail::num(lead.cvF) +
             "; " + detail::num(secs, 3) + " s";
  return o;
}

/// 2. First-order bulk energy at N = 400.
inline Outcome bulk_energy_prediction(int jobs) {
  const auto metrics = detail::bulk_metrics();
  std::vector<double> ratio(metrics.size());
  parallel_for(metrics.size(), jobs, [&](std::size_t i) {
    const auto profile = build_profile(metrics[i].spec, 400);
    const double E = ground_state_energy(profile);
    ratio[i] = std::abs(E - first_order_energy(profile)) / std::abs(E);
  });
  auto o = outcome(2, "bulk energy -c0 S_N");
  o.passed = true;
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    o.passed = o.passed && ratio[i] < tol::bulk_energy_rel;
    o.detail += (i ? ", " : "") + metrics[i].label + " " + detail::num(ratio[i], 3);
  }
  return o;
}

/// 3. Smoothed nearest-neighbour correlator over the middle half at N = 400.
inline Outcome correlator_rigidity(int jobs) {
  const int n = 400;
  const auto metrics = detail::bulk_metrics();
  std::vector<double> worst(metrics.size());
  parallel_for(metrics.size(), jobs, [&](std::size_t i) {
    const auto C = correlation_matrix(eigendecompose(build_profile(metrics[i].spec, n)));
    const auto sm = smooth_pairs(local_correlators(C));
    double w = 0.0;
    for (int q = n / 4; q < 3 * n / 4; ++q) {
      w = std::max(w, std::abs(sm[static_cast<std::size_t>(q - 1)] / dirac::bond_correlator - 1.0));
    }
    worst[i] = w;
  });
  auto o = outcome(3, "correlator rigidity");
  o.passed = true;
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    o.passed = o.passed && worst[i] < tol::correlator_rel;
    o.detail += (i ? ", " : "") + metrics[i].label + " " + detail::num(worst[i], 3);
  }
  return o;
}

/// 4. Entropy profiles against the conformal forms, one fitted constant each.
inline Outcome entanglement_profiles(int jobs) {
  const int n = 400;
  struct Case {
    std::string label;
    MetricSpec spec;
    std::function<double(const HoppingProfile&, int)> cft;
  };
  const std::vector<Case> cases = {
      {"minkowski", MetricSpec::minkowski(),
       [](const HoppingProfile& p, int l) { return cft_entropy_flat(p.sites(), l, 1.0); }},
      {"rainbow h=0.01", MetricSpec::rainbow(1.0, 0.01),
       [](const HoppingProfile& p, int l) { return cft_entropy_rainbow(p.sites(), l, 0.01, 1.0); }},
      {"rindler a=2", MetricSpec::rindler(1.0, 2.0),
       [](const HoppingProfile& p, int l) { return cft_entropy_rindler(p.sites(), l, 1.0); }}};
  auto o = outcome(4, "entanglement entropy vs CFT");
  o.passed = true;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto profile = build_profile(cases[c].spec, n);
    const auto S = entropy_profile(correlation_matrix(eigendecompose(profile)), jobs);
    std::vector<int> ells;
    std::vector<double> ex, pr;
    for (int l = 20; l <= 380; l += 2) {
      ells.push_back(l);
      ex.push_back(S(l));
      pr.push_back(cases[c].cft(profile, l));
    }
    const double s0 = fit_entropy_offset(ells, ex, pr);
    double worst = 0.0;
    for (std::size_t i = 0; i < ells.size(); ++i) worst = std::max(worst, std::abs(ex[i] - pr[i] - s0));
    o.passed = o.passed && worst < tol::entropy_residual;
    o.detail += (c ? ", " : "") + cases[c].label + " max residual " + detail::num(worst, 3);
  }
  return o;
}

/// 5. Entropy slope h/6 of the strong rainbow.
inline Outcome rainbow_volume_law(int jobs) {
  const double h = 0.1;
  const auto C = correlation_matrix(eigendecompose(build_profile(MetricSpec::rainbow(1.0, h), 400)));
  const auto S = entropy_profile(C, jobs);
  std::vector<double> x, y;
  for (int l = 50; l <= 150; ++l) {
    x.push_back(l);
    y.push_back(S(l));
  }
  const double slope = stats::slope(x, y);
  auto o = outcome(5, "rainbow volume law");
  o.passed = std::abs(slope / (h / 6.0) - 1.0) < tol::volume_law_rel;
  o.detail = "slope " + detail::num(slope) + " vs h/6 = " + detail::num(h / 6.0);
  return o;
}

/// 6. Pair-averaged flat Casimir force.
inline Outcome minkowski_force(int jobs) {
  const std::vector<int> sizes = {100, 102, 200, 202, 400, 402};
  const auto rec = force_sweep(MetricSpec::minkowski(), sizes, FitResult::dirac_chain(), jobs);
  auto o = outcome(6, "Minkowski Casimir force");
  o.passed = true;
  for (std::size_t i = 0; i < rec.size(); i += 2) {
    const double got = 0.5 * (rec[i].force + rec[i + 1].force) + dirac::bulk_energy;
    auto conformal = [](int n) { return std::numbers::pi / (12.0 * n * n); };
    const double want = 0.5 * (conformal(rec[i].sites) + conformal(rec[i + 1].sites));
    const double rel = std::abs(got / want - 1.0);
    o.passed = o.passed && rel < tol::minkowski_force_rel;
    o.detail += (i ? ", " : "") + std::string("N=") + std::to_string(rec[i].sites) + " rel " +
                detail::num(rel, 3);
  }
  return o;
}

/// 7. Rindler crossover from N^-2 to N^-1.
inline Outcome rindler_crossover(int jobs) {
  const auto ref = FitResult::dirac_chain();
  const std::vector<double> accel = {1e-2, 1e-3};
  const int n_max = 800;
  auto o = outcome(7, "Rindler force crossover");
  o.passed = true;
  std::vector<double> empirical;
  for (double a : accel) {
    const auto spec = MetricSpec::rindler(1.0, a);
    const auto sizes = detail::even_range(6, n_max);
    const auto rec = force_sweep(spec, sizes, ref, jobs);
    const double predicted = crossover_size(spec, ref, n_max).value_or(0.0);
    double n_emp = 0.0;
    for (const auto& r : rec) {
      if (r.force + ref.c0 < 0.0) {
        n_emp = r.sites;
        break;
      }
    }
    empirical.push_back(n_emp);
    const bool located = n_emp > 0.0 && predicted > 0.0 && n_emp <= tol::crossover_factor * predicted &&
                         n_emp >= predicted / tol::crossover_factor;
    double small_lo = 1e300, small_hi = 0.0, large_worst = 0.0;
    for (const auto& r : rec) {
      const double y = std::abs(r.force + ref.c0);
      if (r.sites <= 0.5 * predicted) {
        const double band = y * r.sites * r.sites / (std::numbers::pi / 12.0);
        small_lo = std::min(small_lo, band);
        small_hi = std::max(small_hi, band);
      }
      if (r.sites >= 4.0 * predicted && r.sites <= 16.0 * predicted) {
        const double boundary = 0.5 * ref.cB * a / (1.0 + a * r.sites);
        large_worst = std::max(large_worst, std::abs(y / boundary - 1.0));
      }
    }
    const bool small_ok = small_hi > 0.0 && small_lo >= tol::small_n_band_lo && small_hi <= tol::small_n_band_hi;
    const bool large_ok = large_worst < tol::large_n_rel;
    o.passed = o.passed && located && small_ok && large_ok;
    o.detail += "a=" + detail::num(a, 2) + ": N*=" + detail::num(predicted, 4) + " sign change at " +
                detail::num(n_emp, 4) + ", small-N N^2 band [" + detail::num(small_lo, 3) + ", " +
                detail::num(small_hi, 3) + "], large-N rel " + detail::num(large_worst, 3) + "; ";
  }
  const double ratio = empirical[0] > 0.0 ? empirical[1] / empirical[0] : 0.0;
  const double want = std::sqrt(accel[0] / accel[1]);
  const bool scaling = std::abs(ratio / want - 1.0) < tol::crossover_scaling_rel;
  o.passed = o.passed && scaling;
  o.detail += "N_emp ratio " + detail::num(ratio, 4) + " vs sqrt(10) " + detail::num(want, 4);
  return o;
}

/// 8. Rainbow forces collapse onto the flat curve after an offset.
inline Outcome rainbow_force_collapse(int jobs) {
  const auto ref = FitResult::dirac_chain();
  auto o = outcome(8, "rainbow force collapse");
  o.passed = true;
  for (double h : {0.01, 0.02, 0.04}) {
    const auto sizes = detail::even_range(100, 802);
    const auto rec = force_sweep(MetricSpec::rainbow(1.0, h), sizes, ref, jobs);
    // pair (N, N+2) to cancel the period-4 alternation
    std::vector<double> pn, y, conf;
    for (std::size_t i = 0; i + 1 < rec.size(); ++i) {
      if (rec[i].sites > 800) break;
      const double n0 = rec[i].sites, n1 = rec[i + 1].sites;
      pn.push_back(n0);
      y.push_back(0.5 * (rec[i].force + rec[i + 1].force) + ref.c0);
      conf.push_back(0.5 * std::numbers::pi / 12.0 * (1.0 / (n0 * n0) + 1.0 / (n1 * n1)));
    }
    std::vector<double> diff(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - conf[i];
    const double offset = stats::mean(diff);
    double worst = 0.0, worst_n = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double rel = std::abs((y[i] - offset) / conf[i] - 1.0);
      if (rel > worst) {
        worst = rel;
        worst_n = pn[i];
      }
    }
    o.passed = o.passed && worst < tol::rainbow_collapse_rel;
    o.detail += "h=" + detail::num(h, 2) + ": offset " + detail::num(offset, 5) + " vs cB h/2 " +
                detail::num(0.5 * ref.cB * h, 5) + " and (c0+cB) tanh(h/2) " +
                detail::num(rainbow_force_offset(h, ref), 5) + ", worst rel " + detail::num(worst, 3) +
                " at N=" + detail::num(worst_n, 4) + "; ";
  }
  return o;
}

/// 9. Obstacle potential follows the local hopping.
inline Outcome obstacle_potential(int jobs) {
  const int n = 100;
  const std::vector<detail::NamedMetric> metrics = {
      {"rindler a=0.01", MetricSpec::rindler(1.0, 0.01)},
      {"rainbow h=0.04", MetricSpec::rainbow(1.0, 0.04)},
      {"sine A=0.5 k=2pi/50", MetricSpec::sine(1.0, 0.5, 2.0 * std::numbers::pi / 50.0)}};
  auto o = outcome(9, "obstacle potential vs J");
  o.passed = true;
  for (const auto& m : metrics) {
    const auto profile = build_profile(m.spec, n);
    for (double gamma : {0.01, 0.75}) {
      const auto scan = potential_scan(profile, gamma, jobs);
      std::vector<double> v, J, vb, Jb;
      for (int p = 2; p < n; p += 2) {
        v.push_back(scan(p));
        J.push_back(profile.hopping(p));
        if (p >= 10 && p <= n - 10) {
          vb.push_back(scan(p));
          Jb.push_back(profile.hopping(p));
        }
      }
      const double r = stats::pearson(v, J);
      o.passed = o.passed && r > tol::pearson_min;
      o.detail += m.label + " g=" + detail::num(gamma, 2) + " r=" + detail::num(r, 5) +
                  " (bulk " + detail::num(stats::pearson(vb, Jb), 5) + "); ";
    }
  }
  return o;
}

/// Smooth random hopping profile used by the oracle comparison.
inline HoppingProfile random_smooth_profile(int sites, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(-0.15, 0.15), phase(0.0, 2.0 * std::numbers::pi),
      scale(0.5, 2.0);
  const double J0 = scale(rng);
  double b[3], phi[3];
  for (int j = 0; j < 3; ++j) {
    b[j] = amp(rng);
    phi[j] = phase(rng);
  }
  std::vector<double> J;
  for (int m = 1; m < sites; ++m) {
    double f = 1.0;
    for (int j = 0; j < 3; ++j) f += b[j] * std::sin(2.0 * std::numbers::pi * (j + 1) * m / sites + phi[j]);
    J.push_back(J0 * f);
  }
  return HoppingProfile(std::move(J));
}

/// 10. Correlation-matrix path against explicit many-body diagonalization.
inline Outcome oracle_equivalence(int) {
  std::mt19937_64 rng(20240611);
  double worst_S = 0.0, worst_E = 0.0;
  int cases = 0;
  for (int n = 2; n <= 8; n += 2) {
    for (int r = 0; r < 20; ++r) {
      const auto profile = random_smooth_profile(n, rng);
      const auto spectrum = eigendecompose(profile);
      const auto C = correlation_matrix(spectrum);
      const auto mb = oracle::many_body_ground_state(profile);
      worst_E = std::max({worst_E, std::abs(vacuum_energy(spectrum) - mb.energy),
                          std::abs(bond_energy(profile, C) - mb.energy)});
      for (int l = 1; l < n; ++l) {
        worst_S = std::max(worst_S, std::abs(block_entropy(C, l) - oracle::many_body_block_entropy(mb, l)));
      }
      ++cases;
    }
  }
  auto o = outcome(10, "many-body oracle equivalence");
  o.passed = worst_S < tol::oracle_abs && worst_E < tol::oracle_abs;
  o.detail = std::to_string(cases) + " profiles, max |dS| " + detail::num(worst_S, 3) +
             ", max |dE| " + detail::num(worst_E, 3);
  return o;
}

struct KernelErrors {
  double residual = 0.0;      // max |T u - eps u| / max|J|
  double orthogonality = 0.0; // max |U^T U - I|
  double particle_hole = 0.0; // max |eps_k + eps_{N+1-k}| / max|J|
  double mode_symmetry = 0.0; // max | |U_ik| - |U_i,N+1-k| | over well separated modes
  double trace = 0.0;         // |sum eps| / (N max|J|)
};

inline KernelErrors kernel_errors(const HoppingProfile& profile) {
  const auto T = HoppingMatrix::from_profile(profile);
  const auto s = eigendecompose(T);
  const auto n = static_cast<Eigen::Index>(profile.sites());
  double jmax = 0.0;
  for (double j : profile.hoppings()) jmax = std::max(jmax, std::abs(j));
  KernelErrors e;
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto u = s.modes.col(k);
    for (Eigen::Index i = 0; i < n; ++i) {
      double tu = T.diag[static_cast<std::size_t>(i)] * u(i);
      if (i > 0) tu += T.offdiag[static_cast<std::size_t>(i - 1)] * u(i - 1);
      if (i + 1 < n) tu += T.offdiag[static_cast<std::size_t>(i)] * u(i + 1);
      e.residual = std::max(e.residual, std::abs(tu - s.energies(k) * u(i)) / jmax);
    }
    e.particle_hole = std::max(e.particle_hole, std::abs(s.energies(k) + s.energies(n - 1 - k)) / jmax);
  }
  const Eigen::MatrixXd G = s.modes.transpose() * s.modes - Eigen::MatrixXd::Identity(n, n);
  e.orthogonality = G.cwiseAbs().maxCoeff();
  e.trace = std::abs(s.energies.sum()) / (static_cast<double>(n) * jmax);
  // U_{i,N+1-k} = +-(-1)^i U_{ik}; only meaningful when mode k is not
  // nearly degenerate with a neighbour.
  for (Eigen::Index k = 0; k < n; ++k) {
    double gap = 1e300;
    if (k > 0) gap = std::min(gap, s.energies(k) - s.energies(k - 1));
    if (k + 1 < n) gap = std::min(gap, s.energies(k + 1) - s.energies(k));
    if (gap < 1e-4 * jmax) continue;
    const auto u = s.modes.col(k), v = s.modes.col(n - 1 - k);
    double plus = 0.0, minus = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double w = (i % 2 == 0 ? 1.0 : -1.0) * u(i);
      plus = std::max(plus, std::abs(v(i) - w));
      minus = std::max(minus, std::abs(v(i) + w));
    }
    e.mode_symmetry = std::max(e.mode_symmetry, std::min(plus, minus));
  }
  return e;
}

/// 11. Eigensolver invariants up to N = 2000.
inline Outcome kernel_invariants(int jobs) {
  const std::vector<int> sizes = {2, 10, 100, 500, 2000};
  const std::vector<MetricSpec> metrics = {MetricSpec::minkowski(), MetricSpec::rindler(1.0, 0.01),
                                           MetricSpec::rainbow(1.0, 0.01),
                                           MetricSpec::sine(1.0, 0.5, std::numbers::pi / 100.0)};
  std::vector<KernelErrors> errs(sizes.size() * metrics.size());
  parallel_for(errs.size(), jobs, [&](std::size_t i) {
    errs[i] = kernel_errors(build_profile(metrics[i % metrics.size()], sizes[i / metrics.size()]));
  });
  KernelErrors w;
  for (const auto& e : errs) {
    w.residual = std::max(w.residual, e.residual);
    w.orthogonality = std::max(w.orthogonality, e.orthogonality);
    w.particle_hole = std::max(w.particle_hole, e.particle_hole);
    w.mode_symmetry = std::max(w.mode_symmetry, e.mode_symmetry);
    w.trace = std::max(w.trace, e.trace);
  }
  auto o = outcome(11, "eigensolver invariants");
  o.passed = w.residual < tol::kernel && w.orthogonality < tol::kernel && w.particle_hole < tol::kernel &&
             w.mode_symmetry < tol::kernel && w.trace < tol::kernel;
  o.detail = "residual " + detail::num(w.residual, 3) + ", orthogonality " + detail::num(w.orthogonality, 3) +
             ", particle-hole " + detail::num(w.particle_hole, 3) + ", mode symmetry " +
             detail::num(w.mode_symmetry, 3) + ", trace " + detail::num(w.trace, 3);
  return o;
}

using Check = Outcome (*)(int);

inline const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      flat_cardy_constants, bulk_energy_prediction, correlator_rigidity, entanglement_profiles,
      rainbow_volume_law,   minkowski_force,        rindler_crossover,   rainbow_force_collapse,
      obstacle_potential,   oracle_equivalence,     kernel_invariants};
  return checks;
}

/// Runs every check in order. The suite-wide time limit is folded into the
/// last (kernel) check, which is where it is stated.
inline std::vector<Outcome> run_all(int jobs, const std::function<void(const Outcome&)>& on_result = {}) {
  std::vector<Outcome> out;
  const auto start = std::chrono::steady_clock::now();
  for (auto check : all_checks()) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check(jobs);
    } catch (const std::exception& err) {
      o.id = static_cast<int>(out.size()) + 1;
      o.name = "check " + std::to_string(o.id);
      o.passed = false;
      o.detail = std::string("error: ") + err.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
    if (o.id == 11) {
      const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.passed = o.passed && total < tol::suite_seconds;
      o.detail += "; suite " + detail::num(total, 3) + " s";
    }
    if (on_result) on_result(o);
    out.push_back(std::move(o));
  }
  return out;
}

inline std::string format_line(const Outcome& o) {
  char head[96];
  std::snprintf(head, sizeof head, "[%s] %2d %-30s %7.2fs  ", o.passed ? "PASS" : "FAIL", o.id,
                o.name.c_str(), o.seconds);
  return head + o.detail;
}

}  // namespace curvchain::acceptance
