#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "curvchain/scaling_fit.hpp"

using namespace curvchain;

namespace {

// Independent route: normal equations in long double, Gauss-Jordan with
// partial pivoting.
template <std::size_t P>
std::array<long double, P> normal_equations(const std::vector<std::array<long double, P>>& rows,
                                            const std::vector<long double>& y) {
  long double A[P][P + 1] = {};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t a = 0; a < P; ++a) {
      for (std::size_t b = 0; b < P; ++b) A[a][b] += rows[i][a] * rows[i][b];
      A[a][P] += rows[i][a] * y[i];
    }
  }
  for (std::size_t c = 0; c < P; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < P; ++r) {
      if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
    }
    for (std::size_t k = 0; k <= P; ++k) std::swap(A[c][k], A[piv][k]);
    for (std::size_t r = 0; r < P; ++r) {
      if (r == c) continue;
      const long double f = A[r][c] / A[c][c];
      for (std::size_t k = c; k <= P; ++k) A[r][k] -= f * A[c][k];
    }
  }
  std::array<long double, P> x{};
  for (std::size_t c = 0; c < P; ++c) x[c] = A[c][P] / A[c][c];
  return x;
}

std::vector<int> evens(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; n += 2) v.push_back(n);
  return v;
}

std::vector<EnergySample> flat_energies(int lo, int hi) {
  std::vector<EnergySample> out;
  for (int n : evens(lo, hi)) out.push_back({n, ground_state_energy(build_profile(MetricSpec::minkowski(), n))});
  return out;
}

std::vector<CurvedSample> curved_energies(const MetricSpec& spec, int lo, int hi) {
  std::vector<CurvedSample> out;
  for (int n : evens(lo, hi)) {
    const auto p = build_profile(spec, n);
    out.push_back(CurvedSample::from(p, ground_state_energy(p)));
  }
  return out;
}

const FitOptions kLeading{ParityMode::EvenOnly, FitOrder::Leading};
const FitOptions kSubleading{ParityMode::EvenOnly, FitOrder::Subleading};

}  // namespace

TEST(FlatFit, ExactCardyInputIsRecovered) {
  std::vector<EnergySample> s;
  for (int n : evens(40, 200)) {
    const double N = n;
    s.push_back({n, -(0.6 * (N - 1) + 0.3 + 2.0 * std::numbers::pi / (24 * N))});
  }
  const auto r = fit_flat_cardy(s, kLeading);
  EXPECT_NEAR(r.c0, 0.6, 1e-10);
  EXPECT_NEAR(r.cB, 0.3, 1e-10);
  EXPECT_NEAR(r.cvF, 2.0, 1e-10);
  EXPECT_LT(r.residual_rms, 1e-12);
  EXPECT_EQ(r.n_points, 81);
}

TEST(FlatFit, OmittedInverseSquareTermBiasMatchesNormalEquations) {
  const auto sizes = evens(100, 400);
  std::vector<EnergySample> s;
  std::vector<std::array<long double, 3>> rows;
  std::vector<long double> y;
  for (int n : sizes) {
    const long double N = n;
    const long double extra = 1.0L / (N * N);
    s.push_back({n, static_cast<double>(-(0.6L * (N - 1) + 0.3L + 2.0L * std::numbers::pi_v<long double> / (24 * N) + extra))});
    rows.push_back({N - 1, 1.0L, 1.0L / N});
    y.push_back(extra);
  }
  const auto bias = normal_equations<3>(rows, y);
  const double cvF_bias = static_cast<double>(24.0L / std::numbers::pi_v<long double> * bias[2]);
  const auto r = fit_flat_cardy(s, kLeading);
  EXPECT_NEAR(r.cvF - 2.0, cvF_bias, 1e-8);
  // the bias is of order 1/N_min but with a larger constant than 24/(pi N_min)
  EXPECT_GT(std::abs(cvF_bias), 24.0 / (std::numbers::pi * 100));
  EXPECT_LT(std::abs(cvF_bias), 2 * 24.0 / (std::numbers::pi * 100));

  const auto sub = fit_flat_cardy(s, kSubleading);
  EXPECT_NEAR(sub.cvF, 2.0, 1e-6);
  EXPECT_NEAR(sub.subleading, 1.0, 1e-4);
}

TEST(FlatFit, QrAgreesWithNormalEquationsOnChainData) {
  const auto s = flat_energies(100, 400);
  std::vector<std::array<long double, 3>> rows;
  std::vector<long double> y;
  for (const auto& e : s) {
    const long double N = e.sites;
    rows.push_back({N - 1, 1.0L, 1.0L / N});
    y.push_back(-static_cast<long double>(e.energy));
  }
  const auto ref = normal_equations<3>(rows, y);
  const auto r = fit_flat_cardy(s, kLeading);
  EXPECT_NEAR(r.c0, static_cast<double>(ref[0]), 1e-11);
  EXPECT_NEAR(r.cB, static_cast<double>(ref[1]), 1e-8);
  EXPECT_NEAR(r.cvF, static_cast<double>(24.0L / std::numbers::pi_v<long double> * ref[2]), 1e-6);
}

TEST(FlatFit, FreeFermionConstants) {
  const auto s = flat_energies(100, 400);
  const auto lead = fit_flat_cardy(s, kLeading);
  EXPECT_NEAR(lead.c0, 2 / std::numbers::pi, 1e-4);
  EXPECT_NEAR(lead.cB, 4 / std::numbers::pi - 1, 1e-3);
  EXPECT_LT(lead.residual_rms, 1e-4);
  EXPECT_NEAR(lead.cvF, 2.0, 0.05);
  const auto sub = fit_flat_cardy(s, kSubleading);
  EXPECT_NEAR(sub.c0, 2 / std::numbers::pi, 1e-4);
  EXPECT_NEAR(sub.cB, 4 / std::numbers::pi - 1, 1e-3);
  EXPECT_NEAR(sub.cvF, 2.0, 0.02);
}

TEST(FlatFit, ParitySelection) {
  std::vector<EnergySample> s;
  for (int n = 40; n <= 120; ++n) {
    const double N = n;
    const double alt = (n % 2 ? 1.0 : -1.0) * 0.05 / N;
    s.push_back({n, -(0.6 * (N - 1) + 0.3 + 2.0 * std::numbers::pi / (24 * N)) + alt});
  }
  const auto even = fit_flat_cardy(s, {ParityMode::EvenOnly, FitOrder::Leading});
  const auto odd = fit_flat_cardy(s, {ParityMode::OddOnly, FitOrder::Leading});
  EXPECT_EQ(even.n_points, 41);
  EXPECT_EQ(odd.n_points, 40);
  EXPECT_EQ(odd.parity_mode, ParityMode::OddOnly);
  EXPECT_NEAR(even.c0, 0.6, 1e-10);
  EXPECT_NEAR(odd.c0, 0.6, 1e-10);
  const auto paired = fit_flat_cardy(s, {ParityMode::Paired, FitOrder::Leading});
  EXPECT_EQ(paired.n_points, 40);
  EXPECT_NEAR(paired.c0, 0.6, 1e-6);
}

TEST(FlatFit, Failures) {
  std::vector<EnergySample> few{{40, -1}, {42, -2}, {44, -3}, {46, -4}};
  EXPECT_THROW(fit_flat_cardy(few, kLeading), fit_failure);
  std::vector<EnergySample> same(10, EnergySample{40, -25.0});
  EXPECT_THROW(fit_flat_cardy(same, kLeading), fit_failure);
}

TEST(CurvedFit, ExactInputIsRecovered) {
  std::vector<CurvedSample> s;
  for (int n : evens(60, 300)) {
    const auto p = build_profile(MetricSpec::rainbow(1.0, 0.01), n);
    auto row = CurvedSample::from(p, 0.0);
    row.energy = -(0.6 * row.total + 0.3 * row.edge_hopping + 1.7 * std::numbers::pi / (24 * row.deformed_length));
    s.push_back(row);
  }
  const auto r = fit_curved_cardy(s, kLeading);
  EXPECT_NEAR(r.c0, 0.6, 1e-9);
  EXPECT_NEAR(r.cB, 0.3, 1e-8);
  EXPECT_NEAR(r.cvF, 1.7, 1e-7);
}

TEST(CurvedFit, FlatInputAgreesWithFlatFitInBulkAndBoundary) {
  const auto flat = fit_flat_cardy(flat_energies(100, 400), kLeading);
  const auto curved = fit_curved_cardy(curved_energies(MetricSpec::minkowski(), 100, 400), kLeading);
  EXPECT_NEAR(curved.c0, flat.c0, 1e-6);
  EXPECT_NEAR(curved.cB, flat.cB, 1e-4);
  // 1/N~ = 1/(N-1) differs from 1/N at order 1/N^2, which shifts cvF
  EXPECT_NEAR(curved.cvF, flat.cvF, 0.05);
  const auto sub = fit_curved_cardy(curved_energies(MetricSpec::minkowski(), 100, 400), kSubleading);
  EXPECT_NEAR(sub.cvF, 2.0, 0.01);
}

TEST(CurvedFit, RainbowConstants) {
  const auto s = curved_energies(MetricSpec::rainbow(1.0, 0.01), 100, 400);
  for (const auto& opt : {kLeading, kSubleading}) {
    const auto r = fit_curved_cardy(s, opt);
    EXPECT_NEAR(r.c0 / (2 / std::numbers::pi), 1.0, 0.01);
    EXPECT_NEAR(r.cvF / 2.0, 1.0, 0.05) << to_string(opt.order);
  }
}

TEST(CurvedFit, RindlerConstantsNeedTheSubleadingTerm) {
  const auto s = curved_energies(MetricSpec::rindler(1.0, 0.01), 100, 400);
  const auto r = fit_curved_cardy(s, kSubleading);
  EXPECT_NEAR(r.c0 / (2 / std::numbers::pi), 1.0, 0.01);
  EXPECT_NEAR(r.cvF / 2.0, 1.0, 0.05);
}

TEST(CurvedFit, InvariantUnderGlobalRescaling) {
  const auto a = curved_energies(MetricSpec::rindler(1.0, 0.01), 100, 300);
  const auto b = curved_energies(MetricSpec::rindler(2.5, 0.025), 100, 300);
  const auto ra = fit_curved_cardy(a, kLeading), rb = fit_curved_cardy(b, kLeading);
  EXPECT_NEAR(rb.cvF / ra.cvF, 1.0, 1e-8);
  EXPECT_NEAR(rb.c0 / ra.c0, 1.0, 1e-10);
}

TEST(FermiVelocity, Examples) {
  const auto flat = effective_fermi_velocity(build_profile(MetricSpec::minkowski(), 50));
  EXPECT_DOUBLE_EQ(flat.harmonic, 2.0);
  EXPECT_DOUBLE_EQ(flat.arithmetic, 2.0);
  const auto alt = effective_fermi_velocity(HoppingProfile({1.0, 2.0, 1.0, 2.0}));
  EXPECT_DOUBLE_EQ(alt.harmonic, 8.0 / 3.0);
  EXPECT_DOUBLE_EQ(alt.arithmetic, 3.0);
  const auto r = effective_fermi_velocity(build_profile(MetricSpec::rindler(1.0, 0.01), 100));
  double inv = 0.0;
  for (int m = 1; m < 100; ++m) inv += 1.0 / (1.0 + 0.01 * m);
  EXPECT_NEAR(r.harmonic, 2 * 99 / inv, 1e-12);
  EXPECT_NEAR(r.arithmetic, 3.0, 1e-12);
  EXPECT_LT(r.harmonic, r.arithmetic);
  EXPECT_NEAR(r.arithmetic / r.harmonic - 1.0, 0.0389, 1e-4);
  const auto s = effective_fermi_velocity(build_profile(MetricSpec::sine(1.0, 0.5, 0.3), 80));
  EXPECT_LE(s.harmonic, s.arithmetic);
}

TEST(Crossover, BalancesBoundaryAndConformalTerms) {
  const auto ref = FitResult::dirac_chain();
  const auto n = crossover_size(MetricSpec::rindler(1.0, 0.01), ref, 1e6);
  ASSERT_TRUE(n.has_value());
  const double lhs = 0.5 * ref.cB * 0.01 / (1 + 0.01 * *n);
  EXPECT_NEAR(lhs / (std::numbers::pi / (12 * *n * *n)), 1.0, 1e-9);
  EXPECT_NEAR(*n, 14.83, 0.01);
}

TEST(Crossover, ScalesAsInverseSquareRootOfAcceleration) {
  const auto ref = FitResult::dirac_chain();
  const double small = *crossover_size(MetricSpec::rindler(1.0, 1e-6), ref, 1e7);
  const double big = *crossover_size(MetricSpec::rindler(1.0, 1e-4), ref, 1e7);
  EXPECT_NEAR(small / big, 10.0, 0.5);
  double prev = 0.0;
  for (double a : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const double n = *crossover_size(MetricSpec::rindler(1.0, a), ref, 1e7);
    EXPECT_GT(n, prev);
    prev = n;
  }
}

TEST(Crossover, NoCrossoverWithoutAcceleration) {
  EXPECT_FALSE(crossover_size(MetricSpec::rindler(1.0, 0.0), FitResult::dirac_chain(), 1e5).has_value());
  EXPECT_FALSE(crossover_size(MetricSpec::rindler(1.0, 1e-4), FitResult::dirac_chain(), 50).has_value());
}
