#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "curvchain/experiment.hpp"

using namespace curvchain;
namespace fs = std::filesystem;

namespace {

class Runner : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("curvchain_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string read(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    for (std::string l; std::getline(ss, l);) out.push_back(l);
    return out;
  }

  static std::vector<std::string> cells(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) out.push_back(c);
    return out;
  }

  ExperimentConfig config(const std::string& text, ExperimentKind kind, const std::string& out) const {
    auto cfg = parse_config(text, kind);
    cfg.output_path = path(out);
    return cfg;
  }

  fs::path dir_;
};

}  // namespace

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(-254.01128917466497), "-254.011289175");
  EXPECT_EQ(format_real(2.0), "2");
  EXPECT_EQ(format_real(2.617993877991494e-05), "2.61799387799e-05");
}

TEST_F(Runner, EnergySweepIsDeterministicAndJobIndependent) {
  const auto cfg = config("metric = rainbow\nh = 0.01\nN_list = 10:60:2\ncorrelators_output = " + path("c.csv"),
                          ExperimentKind::EnergySweep, "e.csv");
  run_experiment(cfg, {1});
  const auto first = read(path("e.csv")), first_c = read(path("c.csv"));
  run_experiment(cfg, {1});
  EXPECT_EQ(read(path("e.csv")), first);
  run_experiment(cfg, {4});
  EXPECT_EQ(read(path("e.csv")), first);
  EXPECT_EQ(read(path("c.csv")), first_c);

  const auto rows = lines(first);
  ASSERT_EQ(rows.size(), 27u);
  EXPECT_EQ(rows[0], "N,E_N,E_first_order,S_N,Ntilde,J_first,J_last");
  EXPECT_EQ(first.find('\r'), std::string::npos);
  EXPECT_EQ(first.back(), '\n');
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(std::stoi(cells(rows[i])[0]), 8 + 2 * static_cast<int>(i));
  const auto p = build_profile(cfg.metric, 10);
  EXPECT_EQ(cells(rows[1])[1], format_real(ground_state_energy(p)));

  const auto crow = lines(first_c);
  EXPECT_EQ(crow[0], "N,p,J_p,corr,smoothed");
  EXPECT_EQ(cells(crow[9]).size(), 4u);  // N=10, p=9: no smoothed value
  EXPECT_EQ(cells(crow[10])[0], "12");
}

TEST_F(Runner, EnergyWithoutCorrelatorsMatchesEnergyWithThem) {
  const auto a = config("metric = sine\nA = 0.5\nk = 0.1\nN_list = 20:40:4\n", ExperimentKind::EnergySweep, "a.csv");
  auto b = a;
  b.output_path = path("b.csv");
  b.correlators_path = path("bc.csv");
  run_experiment(a);
  run_experiment(b);
  EXPECT_EQ(read(path("a.csv")), read(path("b.csv")));
}

TEST_F(Runner, SpectrumRows) {
  run_experiment(config("N_list = 4, 6\n", ExperimentKind::Spectrum, "s.csv"));
  const auto rows = lines(read(path("s.csv")));
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], "N,k,energy");
  EXPECT_EQ(rows[1], "4,1,-1.61803398875");
  EXPECT_EQ(rows[4], "4,4,1.61803398875");
  EXPECT_EQ(cells(rows[5])[0], "6");
}

TEST_F(Runner, FlatEntropyProfile) {
  const auto summary = run_experiment(config("N_list = 400\n", ExperimentKind::EntropyProfile, "s.csv"), {2});
  const auto rows = lines(read(path("s.csv")));
  ASSERT_EQ(rows.size(), 400u);
  EXPECT_EQ(rows[0], "N,ell,S_exact,S_cft,residual");
  double worst = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = cells(rows[i]);
    const int ell = std::stoi(c[1]);
    EXPECT_EQ(ell, static_cast<int>(i));
    if (ell % 2 == 0 && ell >= 20 && ell <= 380) worst = std::max(worst, std::abs(std::stod(c[4])));
  }
  EXPECT_LT(worst, 0.01);
  ASSERT_EQ(summary.notes.size(), 1u);
}

TEST_F(Runner, PotentialScanRowsAreOrdered) {
  run_experiment(config("metric = rindler\na = 0.01\nN_list = 10, 12\ngamma_list = 0.01, 0.75\n",
                        ExperimentKind::PotentialScan, "v.csv"),
                 {3});
  const auto rows = lines(read(path("v.csv")));
  ASSERT_EQ(rows.size(), 1u + 2 * 9 + 2 * 11);
  EXPECT_EQ(rows[0], "N,gamma,p,J_p,V_exact,V_hf");
  EXPECT_EQ(rows[1].substr(0, 10), "10,0.01,1,");
  EXPECT_EQ(rows[10].substr(0, 10), "10,0.75,1,");
  EXPECT_EQ(rows[19].substr(0, 10), "12,0.01,1,");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(std::stod(cells(rows[i])[4]), 0.0);
}

TEST_F(Runner, RindlerForceGrid) {
  for (double J0 : {0.5, 1.0}) {
    for (double a : {0.0, 1e-3, 1e-2}) {
      auto cfg = config("metric = rindler\nJ0 = " + format_real(J0) + "\na = " + format_real(a) + "\nN_list = 6:100:2\n",
                        ExperimentKind::ForceSweep, "f.csv");
      run_experiment(cfg, {2});
      const auto rows = lines(read(path("f.csv")));
      ASSERT_EQ(rows.size(), 49u);
      EXPECT_EQ(rows[0], "N,E_N,F_N,F_pred_eq19,F_pred_eq20,J_N,dlogJ");
      const auto last = cells(rows.back());
      const auto ref = casimir_force(cfg.metric, 100);
      EXPECT_EQ(last[2], format_real(ref.force));
      EXPECT_EQ(last[5], format_real(J0 + a * 100));
    }
  }
}

TEST_F(Runner, FitReportsFreeFermionConstants) {
  run_experiment(config("N_list = 100:400:2\n", ExperimentKind::EnergySweep, "e.csv"), {2});
  auto fit = config("input = " + path("e.csv") + "\n", ExperimentKind::Fit, "fit.txt");
  run_experiment(fit);
  const auto report = read(path("fit.txt"));
  EXPECT_NE(report.find("model = flat\n"), std::string::npos);
  EXPECT_NE(report.find("n_points = 151\n"), std::string::npos);
  auto value = [](const std::string& text, const std::string& key) {
    const auto at = text.find("\n" + key + " = ");
    return at == std::string::npos ? std::nan("") : std::stod(text.substr(at + key.size() + 4));
  };
  EXPECT_NEAR(value(report, "c0"), 0.63662, 5e-6) << report;
  EXPECT_NEAR(value(report, "cB"), 0.27324, 5e-5) << report;
  EXPECT_NEAR(value(report, "cvF"), 2.0, 0.05) << report;

  fit.fit.order = FitOrder::Subleading;
  run_experiment(fit);
  EXPECT_NEAR(value(read(path("fit.txt")), "cvF"), 2.0, 0.001);

  fit.fit_model = FitModel::Curved;
  run_experiment(fit);
  EXPECT_NE(read(path("fit.txt")).find("model = curved\n"), std::string::npos);
}

TEST_F(Runner, FitRejectsMissingColumns) {
  std::ofstream(path("bad.csv")) << "N,E\n100,-63\n";
  EXPECT_THROW(run_experiment(config("input = " + path("bad.csv") + "\n", ExperimentKind::Fit, "r.txt")),
               config_error);
  EXPECT_FALSE(fs::exists(path("r.txt")));
}

TEST_F(Runner, FailedWriteRemovesEarlierOutputs) {
  auto cfg = config("N_list = 10, 12\n", ExperimentKind::EnergySweep, "e.csv");
  cfg.correlators_path = path("missing/dir/c.csv");
  EXPECT_ANY_THROW(run_experiment(cfg));
  EXPECT_FALSE(fs::exists(path("e.csv")));
  EXPECT_FALSE(fs::exists(path("e.csv.partial")));
}

TEST_F(Runner, OutputIsRequired) {
  auto cfg = parse_config("N_list = 10\n", ExperimentKind::EnergySweep);
  EXPECT_THROW(run_experiment(cfg), config_error);
}
