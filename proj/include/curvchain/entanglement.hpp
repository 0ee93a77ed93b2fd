#pragma once

// Von Neumann entropies of lateral blocks from the correlation matrix
// (Gaussian-state method: the block's reduced density matrix is fixed by the
// eigenvalues of the restricted correlation matrix), and the conformal
// predictions on flat and deformed backgrounds. Entropies are in nats.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "curvchain/errors.hpp"
#include "curvchain/metric.hpp"
#include "curvchain/parallel.hpp"
#include "curvchain/vacuum.hpp"

namespace curvchain {

/// Occupations closer than this to 0 or 1 contribute nothing.
inline constexpr double kOccupationClamp = 1e-12;

/// S = -sum [nu ln nu + (1-nu) ln(1-nu)] over the block occupations.
inline double entropy_from_occupations(const Eigen::VectorXd& nu) {
  double S = 0.0;
  for (Eigen::Index i = 0; i < nu.size(); ++i) {
    const double v = nu(i);
    if (v <= kOccupationClamp || v >= 1.0 - kOccupationClamp) continue;
    S -= v * std::log(v) + (1.0 - v) * std::log1p(-v);
  }
  return S;
}

/// Entropy of the contiguous block of sites first..last (1-based, inclusive).
inline double block_entropy(const CorrelationMatrix& C, int first, int last) {
  if (first < 1 || last > C.sites() || first > last) {
    throw range_error("block [" + std::to_string(first) + ", " + std::to_string(last) +
                      "] outside 1.." + std::to_string(C.sites()));
  }
  const Eigen::Index len = last - first + 1;
  const Eigen::MatrixXd block = C.matrix().block(first - 1, first - 1, len, len);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
  return entropy_from_occupations(solver.eigenvalues());
}

/// Entropy of the lateral block {1..ell}, 1 <= ell <= N-1.
inline double block_entropy(const CorrelationMatrix& C, int ell) {
  if (ell < 1 || ell >= C.sites()) {
    throw range_error("ell " + std::to_string(ell) + " outside 1.." +
                      std::to_string(C.sites() - 1));
  }
  return block_entropy(C, 1, ell);
}

struct EntropyProfile {
  int sites = 0;
  std::vector<double> entropy;  // entropy[ell - 1] = S(ell), ell = 1..N-1

  double operator()(int ell) const { return entropy.at(static_cast<std::size_t>(ell - 1)); }
};

/// S(ell) for every lateral block. For ell > N/2 the complementary block
/// {ell+1..N} is diagonalized instead, which gives the same entropy for the
/// pure ground state at a fraction of the cost.
inline EntropyProfile entropy_profile(const CorrelationMatrix& C, int jobs = 1) {
  const int n = C.sites();
  EntropyProfile out{n, std::vector<double>(static_cast<std::size_t>(n - 1))};
  parallel_for(out.entropy.size(), jobs, [&](std::size_t i) {
    const int ell = static_cast<int>(i) + 1;
    out.entropy[i] = 2 * ell <= n ? block_entropy(C, 1, ell) : block_entropy(C, ell + 1, n);
  });
  return out;
}

/// Universal part of the flat-space block entropy,
/// (c/6) ln[(N/pi) sin(pi ell/N)].
inline double cft_entropy_flat(int sites, int ell, double c) {
  if (ell < 1 || ell >= sites) throw range_error("ell outside 1..N-1");
  const double N = sites;
  return c / 6.0 * std::log(N / std::numbers::pi * std::sin(std::numbers::pi * ell / N));
}

/// Flat formula with lengths measured in deformed coordinates:
/// ell -> x~(ell), N -> N~, and UV cutoff 1 -> 1/J_ell.
inline double cft_entropy_deformed(const HoppingProfile& profile, int ell, double c) {
  if (ell < 1 || ell >= profile.sites()) throw range_error("ell outside 1..N-1");
  const double Nt = profile.deformed_length();
  const double lt = deformed_coordinate(profile, ell);
  const double cutoff = uv_cutoff(profile, ell);
  return c / 6.0 *
         std::log(Nt / (std::numbers::pi * cutoff) * std::sin(std::numbers::pi * lt / Nt));
}

/// Closed-form rainbow (J = exp(-h|x - N/2|)) entropy in the continuum:
///   cutoff  = exp(+h |N/2 - ell|)
///   h N~    = 2 (exp(hN/2) - 1)
///   h x~    = exp(hN/2) - exp(h(N/2 - ell))        for ell <= N/2
///           = exp(hN/2) + exp(h(ell - N/2)) - 2    for ell >= N/2
/// h = 0 falls back to the flat formula.
inline double cft_entropy_rainbow(int sites, int ell, double h, double c) {
  if (ell < 1 || ell >= sites) throw range_error("ell outside 1..N-1");
  if (h < 0.0) throw invalid_metric("h must be nonnegative");
  if (h == 0.0) return cft_entropy_flat(sites, ell, c);
  const double half = 0.5 * sites;
  const double cutoff = std::exp(h * std::abs(half - ell));
  const double Nt = 2.0 * std::expm1(h * half) / h;
  const double lt = ell <= half
                        ? (std::exp(h * half) - std::exp(h * (half - ell))) / h
                        : (std::exp(h * half) + std::exp(h * (ell - half)) - 2.0) / h;
  return c / 6.0 *
         std::log(Nt / (std::numbers::pi * cutoff) * std::sin(std::numbers::pi * lt / Nt));
}

/// Strong-acceleration Rindler limit J ~ a x:
/// (c/6) ln[(ell ln N / pi) sin(pi ln(N/ell) / ln N)].
inline double cft_entropy_rindler(int sites, int ell, double c) {
  if (ell < 1 || ell >= sites) throw range_error("ell outside 1..N-1");
  const double logN = std::log(static_cast<double>(sites));
  return c / 6.0 *
         std::log(ell * logN / std::numbers::pi *
                  std::sin(std::numbers::pi * std::log(static_cast<double>(sites) / ell) / logN));
}

/// Least-squares additive constant s0 minimizing sum (exact - predicted - s0)^2
/// over the given block sizes.
inline double fit_entropy_offset(std::span<const int> ells, std::span<const double> exact,
                                 std::span<const double> predicted) {
  if (ells.empty() || exact.size() != ells.size() || predicted.size() != ells.size()) {
    throw range_error("fit_entropy_offset: mismatched or empty samples");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < ells.size(); ++i) s += exact[i] - predicted[i];
  return s / static_cast<double>(ells.size());
}

}  // namespace curvchain
