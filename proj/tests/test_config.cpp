#include <gtest/gtest.h>

#include <numbers>
#include <string>

#include "curvchain/config.hpp"

using namespace curvchain;

namespace {

config_error parse_error(const std::string& text, std::optional<ExperimentKind> fallback = std::nullopt) {
  try {
    parse_config(text, fallback);
  } catch (const config_error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return config_error("none");
}

bool mentions(const config_error& e, const std::string& what) {
  return std::string(e.what()).find(what) != std::string::npos;
}

}  // namespace

TEST(Config, MinimalEnergySweepUsesDefaults) {
  const auto cfg = parse_config("experiment = energy_sweep\nN_list = 100, 200\n");
  EXPECT_EQ(cfg.experiment, ExperimentKind::EnergySweep);
  EXPECT_EQ(cfg.metric, MetricSpec::minkowski());
  EXPECT_EQ(cfg.sizes, (std::vector<int>{100, 200}));
  EXPECT_TRUE(cfg.gammas.empty());
  EXPECT_TRUE(cfg.output_path.empty());
  EXPECT_EQ(cfg.variant, ForceForm::Smooth);
  EXPECT_EQ(cfg.fit.order, FitOrder::Leading);
}

TEST(Config, FullDocumentWithCommentsRangesAndPi) {
  const auto cfg = parse_config(
      "# sine metric\n"
      "experiment = potential_scan   # trailing comment\n"
      "\n"
      "metric = sine\n"
      "J0 = 1.5\n"
      "A = 0.5\n"
      "k = 2*pi/50\n"
      "N_list = 6:12:2, 20\n"
      "gamma_list = 0.01, 0.75\n"
      "output = out.csv\n");
  EXPECT_EQ(cfg.metric.kind, MetricKind::Sine);
  EXPECT_DOUBLE_EQ(cfg.metric.J0, 1.5);
  EXPECT_DOUBLE_EQ(cfg.metric.k, 2 * std::numbers::pi / 50);
  EXPECT_EQ(cfg.sizes, (std::vector<int>{6, 8, 10, 12, 20}));
  EXPECT_EQ(cfg.gammas, (std::vector<double>{0.01, 0.75}));
  EXPECT_EQ(cfg.output_path, "out.csv");
  EXPECT_DOUBLE_EQ(parse_config("k = pi/100\nN_list = 4", ExperimentKind::Spectrum).metric.k,
                   std::numbers::pi / 100);
  EXPECT_DOUBLE_EQ(parse_config("k = 3pi\nN_list = 4", ExperimentKind::Spectrum).metric.k, 3 * std::numbers::pi);
}

TEST(Config, ForceAndFitOptions) {
  const auto f = parse_config("metric = rindler\na = 1e-3\nN_list = 6:20:2\nvariant = eq20\nc0 = 0.5\n",
                              ExperimentKind::ForceSweep);
  EXPECT_EQ(f.variant, ForceForm::WeakDeformation);
  EXPECT_DOUBLE_EQ(f.constants.c0, 0.5);
  EXPECT_DOUBLE_EQ(f.constants.cB, FitResult::dirac_chain().cB);
  const auto g = parse_config("input = e.csv\nfit_model = curved\nfit_order = subleading\nparity = paired\n",
                              ExperimentKind::Fit);
  EXPECT_EQ(g.fit_model, FitModel::Curved);
  EXPECT_EQ(g.fit.order, FitOrder::Subleading);
  EXPECT_EQ(g.fit.parity, ParityMode::Paired);
}

TEST(Config, NegativeRainbowDecay) {
  const auto e = parse_error("metric = rainbow\nh = -0.01\nN_list = 10\n", ExperimentKind::EnergySweep);
  EXPECT_TRUE(mentions(e, "h must be nonnegative"));
  EXPECT_EQ(e.field(), "h");
  EXPECT_EQ(e.line(), 2);
}

TEST(Config, OddSizeIsNamed) {
  const auto e = parse_error("N_list = 10, 13, 20\n", ExperimentKind::EnergySweep);
  EXPECT_TRUE(mentions(e, "13"));
  EXPECT_EQ(e.field(), "N_list");
}

TEST(Config, SizesMustIncrease) {
  EXPECT_TRUE(mentions(parse_error("N_list = 10, 8\n", ExperimentKind::EnergySweep), "strictly increasing"));
  EXPECT_TRUE(mentions(parse_error("N_list = 10, 10\n", ExperimentKind::EnergySweep), "strictly increasing"));
  EXPECT_EQ(parse_error("metric = minkowski\n", ExperimentKind::EnergySweep).field(), "N_list");
}

TEST(Config, UnknownKeyHasPosition) {
  const auto e = parse_error("N_list = 10\n  sites = 4\n", ExperimentKind::EnergySweep);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 3);
  EXPECT_EQ(e.field(), "sites");
  EXPECT_TRUE(mentions(e, "unknown key 'sites'"));
}

TEST(Config, SyntaxErrors) {
  auto e = parse_error("N_list = 10\nmetric minkowski\n", ExperimentKind::EnergySweep);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 1);
  e = parse_error("N_list = 10\nN_list = 12\n", ExperimentKind::EnergySweep);
  EXPECT_TRUE(mentions(e, "duplicate"));
  e = parse_error("N_list = 10\nJ0 = 1.x\n", ExperimentKind::EnergySweep);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 6);
  e = parse_error("N_list = 10, ,12\n", ExperimentKind::EnergySweep);
  EXPECT_TRUE(mentions(e, "empty list item"));
  e = parse_error("N_list = 10:20:0\n", ExperimentKind::EnergySweep);
  EXPECT_TRUE(mentions(e, "step"));
}

TEST(Config, GammaListRules) {
  EXPECT_EQ(parse_error("N_list = 10\n", ExperimentKind::PotentialScan).field(), "gamma_list");
  EXPECT_TRUE(mentions(parse_error("N_list = 10\ngamma_list = 0.5, 1.2\n", ExperimentKind::PotentialScan), "1.2"));
  EXPECT_NO_THROW(parse_config("N_list = 10\ngamma_list = 1\n", ExperimentKind::PotentialScan));
}

TEST(Config, ExperimentSelection) {
  EXPECT_EQ(parse_error("N_list = 10\n").field(), "experiment");
  EXPECT_TRUE(mentions(parse_error("experiment = entropy_profile\nN_list = 10\n", ExperimentKind::EnergySweep),
                       "energy_sweep"));
  EXPECT_TRUE(mentions(parse_error("experiment = movie\nN_list = 10\n"), "movie"));
  EXPECT_EQ(parse_error("output = r.txt\n", ExperimentKind::Fit).field(), "input");
}

TEST(Config, MetricMustBePositiveOnEveryChain) {
  const auto e = parse_error("metric = rindler\na = -0.1\nN_list = 6, 20\n", ExperimentKind::EnergySweep);
  EXPECT_EQ(e.field(), "metric");
  EXPECT_TRUE(mentions(e, "N = 20"));
  EXPECT_EQ(parse_error("J0 = 0\nN_list = 4\n", ExperimentKind::EnergySweep).field(), "J0");
  EXPECT_TRUE(mentions(parse_error("metric = ads\nN_list = 4\n", ExperimentKind::EnergySweep), "ads"));
}

TEST(Config, ForceSweepsNeedSixSites) {
  EXPECT_TRUE(mentions(parse_error("N_list = 4, 6\n", ExperimentKind::ForceSweep), "N >= 6"));
}
