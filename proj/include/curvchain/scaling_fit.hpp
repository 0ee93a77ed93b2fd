#pragma once

// Least-squares extraction of the Casimir-energy constants from size sweeps.
//
// Flat chain:    -E_N = c0 (N-1) + c_B + (c v_F) pi / (24 N)  [+ d / N^2]
// Curved chain:  -E_N = c0 S_N + c_B (J_1 + J_{N-1})/2 + (c v_F) pi / (24 N~)  [+ d / N~^2]
//
// The bracketed term is only fitted with FitOrder::Subleading. It absorbs the
// O(N^-2) tail that otherwise biases the 1/N coefficient by a few percent over
// sweeps with N ~ 100.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvchain/errors.hpp"
#include "curvchain/metric.hpp"
#include "curvchain/vacuum.hpp"

namespace curvchain {

enum class ParityMode { EvenOnly, OddOnly, Paired };
enum class FitOrder { Leading, Subleading };

inline std::string_view to_string(ParityMode mode) {
  switch (mode) {
    case ParityMode::EvenOnly: return "even_only";
    case ParityMode::OddOnly: return "odd_only";
    case ParityMode::Paired: return "paired";
  }
  return "unknown";
}

inline std::string_view to_string(FitOrder order) {
  return order == FitOrder::Leading ? "leading" : "subleading";
}

struct FitOptions {
  /// EvenOnly/OddOnly keep samples of that N parity. Paired keeps everything
  /// and averages consecutive samples (sorted by N) two at a time, rows and
  /// targets alike, which cancels alternating corrections.
  ParityMode parity = ParityMode::EvenOnly;
  FitOrder order = FitOrder::Leading;
};

struct FitResult {
  double c0 = 0.0;
  double cB = 0.0;
  double cvF = 0.0;         // product c * v_F
  double subleading = 0.0;  // coefficient d of the 1/N^2 term (0 for Leading)
  double residual_rms = 0.0;
  int n_points = 0;
  ParityMode parity_mode = ParityMode::EvenOnly;
  FitOrder order = FitOrder::Leading;

  /// Exact constants of the homogeneous free-fermion chain with J0 = 1.
  static FitResult dirac_chain() {
    FitResult r;
    r.c0 = dirac::bulk_energy;
    r.cB = dirac::boundary_energy;
    r.cvF = dirac::central_charge_times_fermi_velocity;
    return r;
  }
};

struct EnergySample {
  int sites = 0;
  double energy = 0.0;
};

/// Per-size quantities entering the curved Cardy form.
struct CurvedSample {
  int sites = 0;
  double total = 0.0;            // S_N
  double edge_hopping = 0.0;     // (J_1 + J_{N-1}) / 2
  double deformed_length = 0.0;  // N~
  double energy = 0.0;

  static CurvedSample from(const HoppingProfile& profile, double energy) {
    const auto J = profile.hoppings();
    return {profile.sites(), profile.total(), 0.5 * (J.front() + J.back()),
            profile.deformed_length(), energy};
  }
};

namespace detail {

struct Design {
  std::vector<int> sites;
  std::vector<std::vector<double>> rows;
  std::vector<double> target;
};

inline Design select_parity(Design in, ParityMode mode) {
  std::vector<std::size_t> idx(in.sites.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return in.sites[a] < in.sites[b]; });
  Design out;
  if (mode == ParityMode::Paired) {
    for (std::size_t i = 0; i + 1 < idx.size(); i += 2) {
      const auto a = idx[i], b = idx[i + 1];
      std::vector<double> row(in.rows[a].size());
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = 0.5 * (in.rows[a][j] + in.rows[b][j]);
      out.sites.push_back(in.sites[a]);
      out.rows.push_back(std::move(row));
      out.target.push_back(0.5 * (in.target[a] + in.target[b]));
    }
    return out;
  }
  const int want = mode == ParityMode::EvenOnly ? 0 : 1;
  for (auto i : idx) {
    if (std::abs(in.sites[i] % 2) != want) continue;
    out.sites.push_back(in.sites[i]);
    out.rows.push_back(in.rows[i]);
    out.target.push_back(in.target[i]);
  }
  return out;
}

inline FitResult solve(const Design& d, const FitOptions& options) {
  const std::size_t params = options.order == FitOrder::Leading ? 3 : 4;
  if (d.target.size() < params + 2) {
    throw fit_failure("need at least " + std::to_string(params + 2) +
                      " samples after parity selection, got " +
                      std::to_string(d.target.size()));
  }
  const auto n = static_cast<Eigen::Index>(d.target.size());
  const auto p = static_cast<Eigen::Index>(params);
  Eigen::MatrixXd A(n, p);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) A(i, j) = d.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    y(i) = d.target[static_cast<std::size_t>(i)];
  }
  // Column scaling keeps the rank test meaningful when the basis functions
  // differ by many orders of magnitude (N vs 1/N^2).
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < p; ++j) {
    if (scale(j) == 0.0) throw fit_failure("basis column " + std::to_string(j) + " is zero");
  }
  const Eigen::MatrixXd As = A * scale.cwiseInverse().asDiagonal();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(As);
  qr.setThreshold(1e-12);
  if (qr.rank() < p) throw fit_failure("rank-deficient design matrix");
  const Eigen::VectorXd coef = qr.solve(y).cwiseQuotient(scale);

  FitResult r;
  r.c0 = coef(0);
  r.cB = coef(1);
  r.cvF = 24.0 / std::numbers::pi * coef(2);
  r.subleading = p > 3 ? coef(3) : 0.0;
  r.residual_rms = std::sqrt((A * coef - y).squaredNorm() / static_cast<double>(n));
  r.n_points = static_cast<int>(n);
  r.parity_mode = options.parity;
  r.order = options.order;
  return r;
}

}  // namespace detail

/// Fits -E_N against {N-1, 1, 1/N [, 1/N^2]}.
inline FitResult fit_flat_cardy(std::span<const EnergySample> samples,
                                const FitOptions& options = {}) {
  detail::Design d;
  for (const auto& s : samples) {
    const double N = s.sites;
    std::vector<double> row{N - 1.0, 1.0, 1.0 / N};
    if (options.order == FitOrder::Subleading) row.push_back(1.0 / (N * N));
    d.sites.push_back(s.sites);
    d.rows.push_back(std::move(row));
    d.target.push_back(-s.energy);
  }
  return detail::solve(detail::select_parity(std::move(d), options.parity), options);
}

/// Fits -E_N against {S_N, (J_1+J_{N-1})/2, 1/N~ [, 1/N~^2]}.
inline FitResult fit_curved_cardy(std::span<const CurvedSample> samples,
                                  const FitOptions& options = {}) {
  detail::Design d;
  for (const auto& s : samples) {
    std::vector<double> row{s.total, s.edge_hopping, 1.0 / s.deformed_length};
    if (options.order == FitOrder::Subleading) {
      row.push_back(1.0 / (s.deformed_length * s.deformed_length));
    }
    d.sites.push_back(s.sites);
    d.rows.push_back(std::move(row));
    d.target.push_back(-s.energy);
  }
  return detail::solve(detail::select_parity(std::move(d), options.parity), options);
}

struct FermiVelocity {
  double harmonic = 0.0;    // 2 (N-1) / N~
  double arithmetic = 0.0;  // 2 S_N / (N-1)
};

inline FermiVelocity effective_fermi_velocity(const HoppingProfile& profile) {
  const double links = profile.sites() - 1;
  return {2.0 * links / profile.deformed_length(), 2.0 * profile.total() / links};
}

/// Smallest chain length where the boundary force (c_B/2)|J'_N/J_N| reaches
/// the conformal force (c v_F) pi / (24 N^2) of the weak-deformation
/// prediction. Returns nullopt if that does not happen for N <= max_sites.
inline std::optional<double> crossover_size(const MetricSpec& spec, const FitResult& constants,
                                            double max_sites) {
  auto gap = [&](double N) {
    const int n = static_cast<int>(std::lround(N));
    return 0.5 * constants.cB * std::abs(log_derivative(spec, N, n)) -
           constants.cvF * std::numbers::pi / (24.0 * N * N);
  };
  double lo = 2.0;
  if (gap(lo) >= 0.0) return lo;
  double hi = lo;
  for (;;) {
    const double step = std::max(1.0, 0.01 * lo);
    hi = std::min(lo + step, max_sites);
    if (gap(hi) >= 0.0) break;
    if (hi >= max_sites) return std::nullopt;
    lo = hi;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) >= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace curvchain
