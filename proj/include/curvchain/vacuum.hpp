#pragma once

// Half-filled Dirac vacuum of the hopping chain: correlation matrix, energy,
// nearest-neighbour correlators.

#include <Eigen/Dense>

#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "curvchain/errors.hpp"
#include "curvchain/metric.hpp"
#include "curvchain/tridiag.hpp"

namespace curvchain {

/// Non-universal constants of the homogeneous free-fermion chain (J0 = 1):
/// bulk energy per link c0 = 2/pi, boundary energy c_B = 4/pi - 1, and
/// c * v_F = 2.
namespace dirac {
inline constexpr double bulk_energy = 2.0 / std::numbers::pi;
inline constexpr double boundary_energy = 4.0 / std::numbers::pi - 1.0;
inline constexpr double central_charge_times_fermi_velocity = 2.0;
/// Homogeneous nearest-neighbour correlator c0/2 = 1/pi.
inline constexpr double bond_correlator = 1.0 / std::numbers::pi;
}  // namespace dirac

/// C_mn = <c^dag_m c_n> of the half-filled ground state. Sites are 1-based in
/// the accessors, matching the lattice labels.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(Eigen::MatrixXd C) : C_(std::move(C)) {}

  int sites() const { return static_cast<int>(C_.rows()); }
  double operator()(int m, int n) const { return C_(m - 1, n - 1); }
  const Eigen::MatrixXd& matrix() const { return C_; }

 private:
  Eigen::MatrixXd C_;
};

/// Occupies the N/2 lowest modes. Odd N has no unique half filling and is
/// rejected.
inline CorrelationMatrix correlation_matrix(const Spectrum& spectrum) {
  const int n = spectrum.size();
  if (n % 2 != 0) {
    throw unsupported_filling("half filling needs an even number of sites, got " +
                              std::to_string(n));
  }
  const auto occupied = spectrum.modes.leftCols(n / 2);
  Eigen::MatrixXd C = occupied * occupied.transpose();
  // exact symmetry, independent of the product's rounding
  C = 0.5 * (C + C.transpose()).eval();
  return CorrelationMatrix(std::move(C));
}

/// Sum of the occupied single-body energies.
inline double vacuum_energy(const Spectrum& spectrum) {
  const int n = spectrum.size();
  if (n % 2 != 0) {
    throw unsupported_filling("half filling needs an even number of sites, got " +
                              std::to_string(n));
  }
  // plain left-to-right sum, same order as ground_state_energy
  double E = 0.0;
  for (int k = 0; k < n / 2; ++k) E += spectrum.energies(k);
  return E;
}

inline double vacuum_energy(const HoppingProfile& profile, const Spectrum& spectrum) {
  if (profile.sites() != spectrum.size()) throw range_error("profile/spectrum size mismatch");
  return vacuum_energy(spectrum);
}

/// Ground-state energy from the eigenvalues alone (no eigenvectors).
inline double ground_state_energy(const HoppingProfile& profile) {
  if (profile.sites() % 2 != 0) {
    throw unsupported_filling("half filling needs an even number of sites, got " +
                              std::to_string(profile.sites()));
  }
  const auto eps = eigenvalues(HoppingMatrix::from_profile(profile));
  double E = 0.0;
  for (std::size_t k = 0; k < eps.size() / 2; ++k) E += eps[k];
  return E;
}

/// <c^dag_p c_{p+1}> for p = 1..N-1.
inline std::vector<double> local_correlators(const CorrelationMatrix& C) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(C.sites() - 1));
  for (int p = 1; p < C.sites(); ++p) out.push_back(C(p, p + 1));
  return out;
}

/// Energy as -2 sum_p J_p <c^dag_p c_{p+1}>; must agree with vacuum_energy.
inline double bond_energy(const HoppingProfile& profile, const CorrelationMatrix& C) {
  if (profile.sites() != C.sites()) throw range_error("profile/correlation size mismatch");
  double E = 0.0;
  for (int p = 1; p < C.sites(); ++p) E -= 2.0 * profile.hopping(p) * C(p, p + 1);
  return E;
}

/// Two-link moving average (x_p + x_{p+1})/2, which removes the period-2
/// oscillation at k_F = pi/2. Output has one entry fewer than the input.
inline std::vector<double> smooth_pairs(const std::vector<double>& values) {
  std::vector<double> out;
  if (values.size() < 2) return out;
  out.reserve(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    out.push_back(0.5 * (values[i] + values[i + 1]));
  }
  return out;
}

/// First-order bulk estimate E ~ -c0 S_N.
inline double first_order_energy(const HoppingProfile& profile) {
  return -dirac::bulk_energy * profile.total();
}

}  // namespace curvchain
