#pragma once

// Obstacle potentials and the Casimir force seen by an observer at the right
// boundary of the chain.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvchain/errors.hpp"
#include "curvchain/metric.hpp"
#include "curvchain/parallel.hpp"
#include "curvchain/scaling_fit.hpp"
#include "curvchain/vacuum.hpp"

namespace curvchain {

/// V(p) = E_0(J_p -> gamma J_p) - E_0 for p = 1..N-1.
struct PotentialScan {
  int sites = 0;
  double gamma = 1.0;
  std::vector<double> potential;

  double operator()(int p) const { return potential.at(static_cast<std::size_t>(p - 1)); }
};

inline PotentialScan potential_scan(const HoppingProfile& profile, double gamma, int jobs = 1) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw range_error("gamma must lie in (0, 1], got " + std::to_string(gamma));
  }
  PotentialScan scan{profile.sites(), gamma,
                     std::vector<double>(static_cast<std::size_t>(profile.sites() - 1), 0.0)};
  if (gamma == 1.0) return scan;
  const double E0 = ground_state_energy(profile);
  parallel_for(scan.potential.size(), jobs, [&](std::size_t i) {
    const int p = static_cast<int>(i) + 1;
    scan.potential[i] = ground_state_energy(profile.with_scaled_link(p, gamma)) - E0;
  });
  return scan;
}

inline PotentialScan potential_scan(const MetricSpec& spec, int sites, double gamma,
                                    int jobs = 1) {
  return potential_scan(build_profile(spec, sites), gamma, jobs);
}

/// First-order (Hellmann-Feynman) estimate 2 (1 - gamma) J_p <c^dag_p c_{p+1}>.
inline double hellmann_feynman_estimate(const HoppingProfile& profile,
                                        const CorrelationMatrix& C, int p, double gamma) {
  if (p < 1 || p >= profile.sites()) throw range_error("link outside 1..N-1");
  return 2.0 * (1.0 - gamma) * profile.hopping(p) * C(p, p + 1);
}

/// Which smooth-hopping prediction to evaluate.
///  Smooth:          -c0 - (c_B/2) J'/J - cvF pi/(24 N^2) + cvF pi S_N/(12 J_N N^3)
///  WeakDeformation: -c0 - (c_B/2) J'/J + cvF pi/(24 N^2)
/// With cvF = 2 these are the usual pi/(12 N^2) forms; both coincide for a
/// homogeneous chain.
enum class ForceForm { Smooth, WeakDeformation };

inline std::string_view to_string(ForceForm form) {
  return form == ForceForm::Smooth ? "eq19" : "eq20";
}

inline double force_prediction(const MetricSpec& spec, int sites, const FitResult& constants,
                               ForceForm form = ForceForm::Smooth) {
  const double N = sites;
  const double dlog = log_derivative(spec, N, sites);
  const double base = -constants.c0 - 0.5 * constants.cB * dlog;
  const double conformal = constants.cvF * std::numbers::pi / (24.0 * N * N);
  if (form == ForceForm::WeakDeformation) return base + conformal;
  const double S = build_profile(spec, sites).total();
  const double JN = hopping_at(spec, N, sites);
  return base - conformal + constants.cvF * std::numbers::pi * S / (12.0 * JN * N * N * N);
}

/// F_N = (E_N - E_{N-2}) / (J_{N-1} + J_{N-2}) with the hoppings of the N-site
/// chain.
inline double boundary_force(double energy, double energy_prev, const HoppingProfile& profile) {
  const int n = profile.sites();
  if (n < 3) throw range_error("boundary_force needs N >= 3");
  return (energy - energy_prev) / (profile.hopping(n - 1) + profile.hopping(n - 2));
}

struct ForceRecord {
  int sites = 0;
  double energy = 0.0;       // E_N
  double energy_prev = 0.0;  // E_{N-2}
  double force = 0.0;        // F_N
  double predicted_smooth = 0.0;
  double predicted_weak = 0.0;
  double edge_hopping = 0.0;    // J(x = N)
  double log_derivative = 0.0;  // J'(N)/J(N)
  MetricSpec metric;

  double predicted(ForceForm form) const {
    return form == ForceForm::Smooth ? predicted_smooth : predicted_weak;
  }
};

namespace detail {

inline ForceRecord make_force_record(const MetricSpec& spec, int sites, double E, double Eprev,
                                     const FitResult& constants) {
  ForceRecord r;
  r.sites = sites;
  r.energy = E;
  r.energy_prev = Eprev;
  r.force = boundary_force(E, Eprev, build_profile(spec, sites));
  r.predicted_smooth = force_prediction(spec, sites, constants, ForceForm::Smooth);
  r.predicted_weak = force_prediction(spec, sites, constants, ForceForm::WeakDeformation);
  r.edge_hopping = hopping_at(spec, sites, sites);
  r.log_derivative = log_derivative(spec, sites, sites);
  r.metric = spec;
  return r;
}

inline void check_force_size(int sites) {
  if (sites < 6 || sites % 2 != 0) {
    throw range_error("force needs even N >= 6, got " + std::to_string(sites));
  }
}

}  // namespace detail

inline ForceRecord casimir_force(const MetricSpec& spec, int sites,
                                 const FitResult& constants = FitResult::dirac_chain()) {
  detail::check_force_size(sites);
  const double E = ground_state_energy(build_profile(spec, sites));
  const double Eprev = ground_state_energy(build_profile(spec, sites - 2));
  return detail::make_force_record(spec, sites, E, Eprev, constants);
}

/// Forces for several sizes; every needed energy is computed once, in
/// parallel. Records come back in the order of `sizes`.
inline std::vector<ForceRecord> force_sweep(const MetricSpec& spec, std::span<const int> sizes,
                                            const FitResult& constants = FitResult::dirac_chain(),
                                            int jobs = 1) {
  std::vector<int> needed;
  for (int n : sizes) {
    detail::check_force_size(n);
    needed.push_back(n);
    needed.push_back(n - 2);
  }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  std::vector<double> energy(needed.size());
  parallel_for(needed.size(), jobs, [&](std::size_t i) {
    energy[i] = ground_state_energy(build_profile(spec, needed[i]));
  });
  auto lookup = [&](int n) {
    return energy[static_cast<std::size_t>(
        std::lower_bound(needed.begin(), needed.end(), n) - needed.begin())];
  };
  std::vector<ForceRecord> out;
  out.reserve(sizes.size());
  for (int n : sizes) out.push_back(detail::make_force_record(spec, n, lookup(n), lookup(n - 2), constants));
  return out;
}

/// Net universal force on an obstacle at link p: (pi/12)(1/(N-p)^2 - 1/p^2).
inline double obstacle_net_force(int sites, int p) {
  if (p < 1 || p >= sites) throw range_error("obstacle position outside 1..N-1");
  const double right = sites - p;
  const double left = p;
  return std::numbers::pi / 12.0 * (1.0 / (right * right) - 1.0 / (left * left));
}

/// Large-N limit of F_N + c0 on the rainbow, (c0 + c_B) tanh(h/2) ~ (c0 + c_B) h/2.
/// Follows from the bulk and boundary energy terms once the two-link
/// denominator J_{N-1} + J_{N-2} = J_{N-1} (1 + e^h) is kept exactly.
inline double rainbow_force_offset(double h, const FitResult& constants = FitResult::dirac_chain()) {
  return (constants.c0 + constants.cB) * std::tanh(0.5 * h);
}

}  // namespace curvchain
