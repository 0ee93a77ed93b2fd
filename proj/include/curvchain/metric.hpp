#pragma once

// Static optical metrics ds^2 = -J(x)^2 dt^2 + dx^2 and their realization as
// hopping amplitudes on an open N-site chain. Lattice spacing is 1 and link m
// (between sites m and m+1) is sampled at x_m = m.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvchain/errors.hpp"

namespace curvchain {

enum class MetricKind { Minkowski, Rindler, Sine, Rainbow, ModulatedSine };

inline std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::Minkowski: return "minkowski";
    case MetricKind::Rindler: return "rindler";
    case MetricKind::Sine: return "sine";
    case MetricKind::Rainbow: return "rainbow";
    case MetricKind::ModulatedSine: return "modulated_sine";
  }
  return "unknown";
}

inline std::optional<MetricKind> parse_metric_kind(std::string_view name) {
  for (auto kind : {MetricKind::Minkowski, MetricKind::Rindler, MetricKind::Sine,
                    MetricKind::Rainbow, MetricKind::ModulatedSine}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

/// Symbolic metric family. Only the parameters of `kind` are read:
///   Minkowski      J(x) = J0
///   Rindler        J(x) = J0 + a x
///   Sine           J(x) = J0 + A sin(k x)
///   Rainbow        J(x) = J0 exp(-h |x - N/2|)
///   ModulatedSine  J(x) = J0 + A sin(k x^2)
struct MetricSpec {
  MetricKind kind = MetricKind::Minkowski;
  double J0 = 1.0;
  double a = 0.0;
  double A = 0.0;
  double k = 0.0;
  double h = 0.0;

  static MetricSpec minkowski(double J0 = 1.0) { return {MetricKind::Minkowski, J0}; }
  static MetricSpec rindler(double J0, double a) {
    return {MetricKind::Rindler, J0, a};
  }
  static MetricSpec sine(double J0, double A, double k) {
    return {MetricKind::Sine, J0, 0.0, A, k};
  }
  static MetricSpec rainbow(double J0, double h) {
    return {MetricKind::Rainbow, J0, 0.0, 0.0, 0.0, h};
  }
  static MetricSpec modulated_sine(double J0, double A, double k) {
    return {MetricKind::ModulatedSine, J0, 0.0, A, k};
  }

  friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

/// J(x) for the family on a chain of `sites` sites (only the rainbow depends
/// on the chain length, through its apex at N/2).
inline double hopping_at(const MetricSpec& spec, double x, int sites) {
  switch (spec.kind) {
    case MetricKind::Minkowski: return spec.J0;
    case MetricKind::Rindler: return spec.J0 + spec.a * x;
    case MetricKind::Sine: return spec.J0 + spec.A * std::sin(spec.k * x);
    case MetricKind::Rainbow:
      return spec.J0 * std::exp(-spec.h * std::abs(x - 0.5 * sites));
    case MetricKind::ModulatedSine:
      return spec.J0 + spec.A * std::sin(spec.k * x * x);
  }
  return spec.J0;
}

/// Analytic J'(x). At the rainbow apex the right-sided value is returned.
inline double hopping_derivative(const MetricSpec& spec, double x, int sites) {
  switch (spec.kind) {
    case MetricKind::Minkowski: return 0.0;
    case MetricKind::Rindler: return spec.a;
    case MetricKind::Sine: return spec.A * spec.k * std::cos(spec.k * x);
    case MetricKind::Rainbow: {
      const double side = x < 0.5 * sites ? 1.0 : -1.0;
      return side * spec.h * hopping_at(spec, x, sites);
    }
    case MetricKind::ModulatedSine:
      return 2.0 * spec.A * spec.k * x * std::cos(spec.k * x * x);
  }
  return 0.0;
}

/// J'(x)/J(x), the only non-vanishing Christoffel symbol of the optical metric.
///
/// The rainbow is not differentiable at its apex; there (and everywhere on the
/// right half) the value is exactly -h, which is what a boundary observer at
/// x = N sees. On the left half it is +h.
inline double log_derivative(const MetricSpec& spec, double x, int sites) {
  if (spec.kind == MetricKind::Rainbow) return x < 0.5 * sites ? spec.h : -spec.h;
  const double J = hopping_at(spec, x, sites);
  if (!(J > 0.0)) {
    throw invalid_metric("log_derivative: J(x) must be positive", std::lround(x));
  }
  return hopping_derivative(spec, x, sites) / J;
}

/// Parameter checks plus positivity of J at every lattice position 0..sites.
inline void validate(const MetricSpec& spec, int sites) {
  const double params[] = {spec.J0, spec.a, spec.A, spec.k, spec.h};
  for (double p : params) {
    if (!std::isfinite(p)) throw invalid_metric("metric parameters must be finite");
  }
  if (!(spec.J0 > 0.0)) throw invalid_metric("J0 must be positive");
  if (spec.kind == MetricKind::Rainbow && spec.h < 0.0) {
    throw invalid_metric("h must be nonnegative");
  }
  for (int m = 0; m <= sites; ++m) {
    const double J = hopping_at(spec, m, sites);
    if (!(J > 0.0) || !std::isfinite(J)) {
      throw invalid_metric("non-positive hopping J(" + std::to_string(m) +
                               ") = " + std::to_string(J),
                           m);
    }
  }
}

/// Realized hoppings J_1..J_{N-1} of an open N-site chain.
class HoppingProfile {
 public:
  explicit HoppingProfile(std::vector<double> hoppings) : J_(std::move(hoppings)) {
    if (J_.empty()) throw range_error("HoppingProfile needs at least 2 sites");
    for (std::size_t i = 0; i < J_.size(); ++i) {
      if (!(J_[i] > 0.0) || !std::isfinite(J_[i])) {
        throw invalid_metric("hopping J_" + std::to_string(i + 1) + " must be positive",
                             static_cast<long>(i + 1));
      }
    }
    total_ = std::accumulate(J_.begin(), J_.end(), 0.0);
    deformed_length_ = 0.0;
    for (double J : J_) deformed_length_ += 1.0 / J;
  }

  int sites() const { return static_cast<int>(J_.size()) + 1; }
  std::span<const double> hoppings() const { return J_; }

  /// J_m for link m in 1..N-1.
  double hopping(int link) const {
    if (link < 1 || link >= sites()) {
      throw range_error("link " + std::to_string(link) + " outside 1.." +
                        std::to_string(sites() - 1));
    }
    return J_[static_cast<std::size_t>(link - 1)];
  }

  /// S_N = sum of hoppings.
  double total() const { return total_; }
  /// Ntilde = sum of 1/J_m, the chain length in deformed coordinates.
  double deformed_length() const { return deformed_length_; }

  /// Copy with J_link -> factor * J_link.
  HoppingProfile with_scaled_link(int link, double factor) const {
    auto J = J_;
    J.at(static_cast<std::size_t>(link - 1)) *= factor;
    return HoppingProfile(std::move(J));
  }

  HoppingProfile scaled(double factor) const {
    auto J = J_;
    for (double& v : J) v *= factor;
    return HoppingProfile(std::move(J));
  }

 private:
  std::vector<double> J_;
  double total_ = 0.0;
  double deformed_length_ = 0.0;
};

/// J_m = J(m) for m = 1..N-1. Requires even N >= 2.
inline HoppingProfile build_profile(const MetricSpec& spec, int sites) {
  if (sites < 2 || sites % 2 != 0) {
    throw range_error("chain length must be even and >= 2, got " + std::to_string(sites));
  }
  validate(spec, sites);
  std::vector<double> J(static_cast<std::size_t>(sites - 1));
  for (int m = 1; m < sites; ++m) J[static_cast<std::size_t>(m - 1)] = hopping_at(spec, m, sites);
  return HoppingProfile(std::move(J));
}

/// Deformed coordinate of the block edge, sum_{p=1}^{ell-1} 1/J_p, for
/// 0 <= ell <= N. deformed_coordinate(N) equals the deformed length.
inline double deformed_coordinate(const HoppingProfile& profile, int ell) {
  if (ell < 0 || ell > profile.sites()) {
    throw range_error("ell " + std::to_string(ell) + " outside 0.." +
                      std::to_string(profile.sites()));
  }
  double x = 0.0;
  const auto J = profile.hoppings();
  for (int p = 1; p < ell; ++p) x += 1.0 / J[static_cast<std::size_t>(p - 1)];
  return x;
}

/// Local UV cutoff 1/J_ell, 1 <= ell <= N-1.
inline double uv_cutoff(const HoppingProfile& profile, int ell) {
  if (ell < 1 || ell >= profile.sites()) {
    throw range_error("ell " + std::to_string(ell) + " outside 1.." +
                      std::to_string(profile.sites() - 1));
  }
  return 1.0 / profile.hopping(ell);
}

}  // namespace curvchain
