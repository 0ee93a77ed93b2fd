#pragma once

// Brute-force reference for small chains: the half-filled sector of the Fock
// space is built explicitly and diagonalized as a dense matrix. Used by the
// test suite and the acceptance checks only.

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "curvchain/errors.hpp"
#include "curvchain/metric.hpp"
#include "curvchain/tridiag.hpp"

namespace curvchain::oracle {

/// Ground state in the occupation basis. Bit i of a basis word is site i+1.
struct ManyBodyState {
  int sites = 0;
  double energy = 0.0;
  std::vector<std::uint32_t> basis;
  Eigen::VectorXd amplitudes;
};

inline std::vector<std::uint32_t> half_filled_basis(int sites) {
  std::vector<std::uint32_t> basis;
  for (std::uint32_t s = 0; s < (1u << sites); ++s) {
    if (std::popcount(s) == sites / 2) basis.push_back(s);
  }
  return basis;
}

/// Nearest-neighbour hops on an open chain pick up no Jordan-Wigner sign, so
/// every allowed matrix element is -J_m.
inline ManyBodyState many_body_ground_state(const HoppingProfile& profile) {
  const int n = profile.sites();
  if (n % 2 != 0 || n > 16) throw range_error("many-body oracle needs even N <= 16");
  ManyBodyState out;
  out.sites = n;
  out.basis = half_filled_basis(n);
  std::unordered_map<std::uint32_t, Eigen::Index> index;
  for (std::size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = static_cast<Eigen::Index>(i);

  const auto dim = static_cast<Eigen::Index>(out.basis.size());
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto s = out.basis[static_cast<std::size_t>(i)];
    for (int m = 1; m < n; ++m) {
      const std::uint32_t a = 1u << (m - 1), b = 1u << m;
      if (((s & a) != 0) == ((s & b) != 0)) continue;
      H(index.at(s ^ a ^ b), i) -= profile.hopping(m);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
  out.energy = solver.eigenvalues()(0);
  out.amplitudes = solver.eigenvectors().col(0);
  return out;
}

/// Entropy of sites 1..ell from the explicit reduced density matrix.
inline double many_body_block_entropy(const ManyBodyState& state, int ell) {
  if (ell < 1 || ell >= state.sites) throw range_error("ell outside 1..N-1");
  const std::uint32_t mask = (1u << ell) - 1;
  const Eigen::Index rows = Eigen::Index{1} << ell;
  const Eigen::Index cols = Eigen::Index{1} << (state.sites - ell);
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(rows, cols);
  for (std::size_t i = 0; i < state.basis.size(); ++i) {
    const auto s = state.basis[i];
    psi(s & mask, s >> ell) = state.amplitudes(static_cast<Eigen::Index>(i));
  }
  const Eigen::MatrixXd rho = psi * psi.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rho, Eigen::EigenvaluesOnly);
  double S = 0.0;
  for (Eigen::Index k = 0; k < rows; ++k) {
    const double p = solver.eigenvalues()(k);
    if (p > 1e-15) S -= p * std::log(p);
  }
  return S;
}

/// Amplitudes of the Slater determinant filling the N/2 lowest modes, in the
/// basis order of `half_filled_basis`. Creation operators are ordered by
/// increasing site, matching the Jordan-Wigner ordering above.
inline Eigen::VectorXd slater_amplitudes(const Spectrum& spectrum) {
  const int n = spectrum.size();
  const auto basis = half_filled_basis(n);
  Eigen::VectorXd out(static_cast<Eigen::Index>(basis.size()));
  Eigen::MatrixXd sub(n / 2, n / 2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Eigen::Index r = 0;
    for (int site = 0; site < n; ++site) {
      if (basis[i] & (1u << site)) sub.row(r++) = spectrum.modes.row(site).head(n / 2);
    }
    out(static_cast<Eigen::Index>(i)) = sub.determinant();
  }
  return out;
}

}  // namespace curvchain::oracle
