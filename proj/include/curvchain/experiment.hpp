#pragma once

// Runs one configured experiment and writes its CSV (or fit report).
//
// All rows are produced in memory, ordered by (N, then ell/gamma/p), and only
// then written; each file goes to a temporary sibling first and is renamed
// into place. If anything fails, files already renamed by this run are
// removed again.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "curvchain/casimir.hpp"
#include "curvchain/config.hpp"
#include "curvchain/entanglement.hpp"
#include "curvchain/errors.hpp"
#include "curvchain/metric.hpp"
#include "curvchain/parallel.hpp"
#include "curvchain/scaling_fit.hpp"
#include "curvchain/tridiag.hpp"
#include "curvchain/vacuum.hpp"

namespace curvchain {

/// Twelve significant digits, shortest form.
inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace csv {

class Table {
 public:
  explicit Table(std::vector<std::string> header) : columns_(header.size()) {
    add_row(header);
  }

  template <class... Cells>
  void row(const Cells&... cells) {
    static_assert(sizeof...(Cells) > 0);
    std::vector<std::string> r{cell(cells)...};
    add_row(r);
  }

  void append(const std::string& rows) { text_ += rows; }
  const std::string& str() const { return text_; }
  std::size_t columns() const { return columns_; }

  static std::string cell(double v) { return format_real(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(const std::string& v) { return v; }
  static std::string cell(const char* v) { return v; }

 private:
  void add_row(const std::vector<std::string>& r) {
    if (r.size() != columns_) throw range_error("csv row has the wrong number of cells");
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) text_ += ',';
      text_ += r[i];
    }
    text_ += '\n';
  }

  std::size_t columns_;
  std::string text_;
};

/// Parses a header + rows CSV of numbers into named columns. Empty cells read
/// as NaN.
inline std::map<std::string, std::vector<double>> read_numeric(std::string_view text,
                                                              const std::string& source) {
  std::vector<std::string> names;
  std::map<std::string, std::vector<double>> cols;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    auto line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    for (std::size_t p = 0;;) {
      const auto c = line.find(',', p);
      cells.push_back(line.substr(p, c == std::string_view::npos ? line.npos : c - p));
      if (c == std::string_view::npos) break;
      p = c + 1;
    }
    if (names.empty()) {
      for (auto c : cells) names.emplace_back(c);
      continue;
    }
    if (cells.size() != names.size()) {
      throw config_error(source + ": line " + std::to_string(line_no) + " has " +
                             std::to_string(cells.size()) + " cells, header has " +
                             std::to_string(names.size()),
                         line_no, 1, "input");
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double v = std::numeric_limits<double>::quiet_NaN();
      if (!cells[i].empty()) {
        const auto [ptr, ec] = std::from_chars(cells[i].data(), cells[i].data() + cells[i].size(), v);
        if (ec != std::errc{} || ptr != cells[i].data() + cells[i].size()) {
          throw config_error(source + ": line " + std::to_string(line_no) + ": '" +
                                 std::string(cells[i]) + "' is not a number",
                             line_no, 1, "input");
        }
      }
      cols[names[i]].push_back(v);
    }
  }
  if (names.empty()) throw config_error(source + ": empty CSV", 0, 0, "input");
  for (const auto& n : names) cols.try_emplace(n);
  return cols;
}

}  // namespace csv

/// Writes files atomically and can undo everything it wrote.
class OutputSet {
 public:
  OutputSet() = default;
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;

  void write(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".partial";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
      out << content;
      out.flush();
      if (!out) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("write to " + tmp.string() + " failed");
      }
    }
    std::filesystem::rename(tmp, path);
    written_.push_back(path);
  }

  void rollback() noexcept {
    for (const auto& p : written_) {
      std::error_code ec;
      std::filesystem::remove(p, ec);
    }
    written_.clear();
  }

  const std::vector<std::filesystem::path>& written() const { return written_; }

 private:
  std::vector<std::filesystem::path> written_;
};

struct RunOptions {
  int jobs = 1;
};

struct RunSummary {
  std::vector<std::string> files;
  std::vector<std::string> notes;  // one human-readable line each
};

namespace detail {

struct Product {
  std::string path;
  std::string content;
};

inline std::vector<Product> run_spectrum(const ExperimentConfig& cfg, int jobs) {
  std::vector<std::string> chunks(cfg.sizes.size());
  parallel_for(cfg.sizes.size(), jobs, [&](std::size_t i) {
    const int n = cfg.sizes[i];
    const auto eps = eigenvalues(HoppingMatrix::from_profile(build_profile(cfg.metric, n)));
    std::string s;
    for (std::size_t k = 0; k < eps.size(); ++k) {
      s += std::to_string(n) + ',' + std::to_string(k + 1) + ',' + format_real(eps[k]) + '\n';
    }
    chunks[i] = std::move(s);
  });
  csv::Table t({"N", "k", "energy"});
  for (const auto& c : chunks) t.append(c);
  return {{cfg.output_path, t.str()}};
}

inline std::vector<Product> run_energy(const ExperimentConfig& cfg, int jobs,
                                       RunSummary& summary) {
  const bool want_corr = !cfg.correlators_path.empty();
  std::vector<std::string> rows(cfg.sizes.size()), corr(cfg.sizes.size());
  std::vector<double> ratio(cfg.sizes.size());
  parallel_for(cfg.sizes.size(), jobs, [&](std::size_t i) {
    const int n = cfg.sizes[i];
    const auto profile = build_profile(cfg.metric, n);
    double E = 0.0;
    if (want_corr) {
      const auto spectrum = eigendecompose(profile);
      E = vacuum_energy(spectrum);
      const auto C = correlation_matrix(spectrum);
      const auto local = local_correlators(C);
      const auto smooth = smooth_pairs(local);
      std::string s;
      for (int p = 1; p < n; ++p) {
        const auto idx = static_cast<std::size_t>(p - 1);
        s += std::to_string(n) + ',' + std::to_string(p) + ',' + format_real(profile.hopping(p)) +
             ',' + format_real(local[idx]) + ',' +
             (idx < smooth.size() ? format_real(smooth[idx]) : std::string()) + '\n';
      }
      corr[i] = std::move(s);
    } else {
      E = ground_state_energy(profile);
    }
    const auto J = profile.hoppings();
    const double E1 = first_order_energy(profile);
    ratio[i] = std::abs(E - E1) / std::abs(E);
    rows[i] = std::to_string(n) + ',' + format_real(E) + ',' + format_real(E1) + ',' +
              format_real(profile.total()) + ',' + format_real(profile.deformed_length()) + ',' +
              format_real(J.front()) + ',' + format_real(J.back()) + '\n';
  });
  csv::Table t({"N", "E_N", "E_first_order", "S_N", "Ntilde", "J_first", "J_last"});
  for (const auto& r : rows) t.append(r);
  std::vector<Product> out{{cfg.output_path, t.str()}};
  if (want_corr) {
    csv::Table c({"N", "p", "J_p", "corr", "smoothed"});
    for (const auto& r : corr) c.append(r);
    out.push_back({cfg.correlators_path, c.str()});
  }
  summary.notes.push_back("largest |E_N + c0 S_N| / |E_N| = " +
                          format_real(*std::max_element(ratio.begin(), ratio.end())));
  return out;
}

inline CftForm resolve_cft_form(const ExperimentConfig& cfg) {
  if (cfg.cft_form != CftForm::Auto) return cfg.cft_form;
  switch (cfg.metric.kind) {
    case MetricKind::Minkowski: return CftForm::Flat;
    case MetricKind::Rainbow: return CftForm::Rainbow;
    default: return CftForm::Deformed;
  }
}

inline std::vector<Product> run_entropy(const ExperimentConfig& cfg, int jobs,
                                        RunSummary& summary) {
  const auto form = resolve_cft_form(cfg);
  csv::Table t({"N", "ell", "S_exact", "S_cft", "residual"});
  for (int n : cfg.sizes) {
    const auto profile = build_profile(cfg.metric, n);
    const auto S = entropy_profile(correlation_matrix(eigendecompose(profile)), jobs);
    std::vector<double> cft(static_cast<std::size_t>(n - 1));
    for (int ell = 1; ell < n; ++ell) {
      double v = 0.0;
      switch (form) {
        case CftForm::Flat: v = cft_entropy_flat(n, ell, cfg.central_charge); break;
        case CftForm::Rainbow: v = cft_entropy_rainbow(n, ell, cfg.metric.h, cfg.central_charge); break;
        case CftForm::Rindler: v = cft_entropy_rindler(n, ell, cfg.central_charge); break;
        default: v = cft_entropy_deformed(profile, ell, cfg.central_charge); break;
      }
      cft[static_cast<std::size_t>(ell - 1)] = v;
    }
    std::vector<int> ells;
    std::vector<double> ex, pr;
    for (int ell = 2; ell < n; ell += 2) {
      ells.push_back(ell);
      ex.push_back(S(ell));
      pr.push_back(cft[static_cast<std::size_t>(ell - 1)]);
    }
    const double s0 = ells.empty() ? 0.0 : fit_entropy_offset(ells, ex, pr);
    for (int ell = 1; ell < n; ++ell) {
      const double c = cft[static_cast<std::size_t>(ell - 1)] + s0;
      t.row(n, ell, S(ell), c, S(ell) - c);
    }
    summary.notes.push_back("N = " + std::to_string(n) + ": fitted constant s0 = " + format_real(s0));
  }
  return {{cfg.output_path, t.str()}};
}

inline std::vector<Product> run_potential(const ExperimentConfig& cfg, int jobs) {
  csv::Table t({"N", "gamma", "p", "J_p", "V_exact", "V_hf"});
  for (int n : cfg.sizes) {
    const auto profile = build_profile(cfg.metric, n);
    const auto C = correlation_matrix(eigendecompose(profile));
    for (double gamma : cfg.gammas) {
      const auto scan = potential_scan(profile, gamma, jobs);
      for (int p = 1; p < n; ++p) {
        t.row(n, gamma, p, profile.hopping(p), scan(p),
              hellmann_feynman_estimate(profile, C, p, gamma));
      }
    }
  }
  return {{cfg.output_path, t.str()}};
}

inline std::vector<Product> run_force(const ExperimentConfig& cfg, int jobs, RunSummary& summary) {
  const auto records = force_sweep(cfg.metric, cfg.sizes, cfg.constants, jobs);
  csv::Table t({"N", "E_N", "F_N", "F_pred_eq19", "F_pred_eq20", "J_N", "dlogJ"});
  double sq = 0.0;
  for (const auto& r : records) {
    t.row(r.sites, r.energy, r.force, r.predicted_smooth, r.predicted_weak, r.edge_hopping,
          r.log_derivative);
    const double d = r.force - r.predicted(cfg.variant);
    sq += d * d;
  }
  summary.notes.push_back("rms(F_N - F_pred_" + std::string(to_string(cfg.variant)) + ") = " +
                          format_real(std::sqrt(sq / static_cast<double>(records.size()))));
  return {{cfg.output_path, t.str()}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot read input '" + path + "'", 0, 0, "input");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const std::vector<double>& column(const std::map<std::string, std::vector<double>>& cols,
                                         const std::string& name, const std::string& source) {
  const auto it = cols.find(name);
  if (it == cols.end()) {
    throw config_error(source + ": missing column '" + name + "'", 0, 0, "input");
  }
  return it->second;
}

inline std::string fit_report(const FitResult& r, FitModel model) {
  const auto ref = FitResult::dirac_chain();
  std::string s;
  auto line = [&](const std::string& k, const std::string& v) { s += k + " = " + v + '\n'; };
  line("model", model == FitModel::Flat ? "flat" : "curved");
  line("order", std::string(to_string(r.order)));
  line("parity", std::string(to_string(r.parity_mode)));
  line("n_points", std::to_string(r.n_points));
  line("c0", format_real(r.c0));
  line("cB", format_real(r.cB));
  line("cvF", format_real(r.cvF));
  line("subleading", format_real(r.subleading));
  line("residual_rms", format_real(r.residual_rms));
  line("c0_reference", format_real(ref.c0));
  line("cB_reference", format_real(ref.cB));
  line("cvF_reference", format_real(ref.cvF));
  return s;
}

inline std::vector<Product> run_fit(const ExperimentConfig& cfg, RunSummary& summary) {
  const auto cols = csv::read_numeric(read_file(cfg.input_path), cfg.input_path);
  const auto& N = column(cols, "N", cfg.input_path);
  const auto& E = column(cols, "E_N", cfg.input_path);
  FitResult r;
  if (cfg.fit_model == FitModel::Flat) {
    std::vector<EnergySample> samples;
    for (std::size_t i = 0; i < N.size(); ++i) samples.push_back({static_cast<int>(N[i]), E[i]});
    r = fit_flat_cardy(samples, cfg.fit);
  } else {
    const auto& S = column(cols, "S_N", cfg.input_path);
    const auto& Nt = column(cols, "Ntilde", cfg.input_path);
    const auto& J1 = column(cols, "J_first", cfg.input_path);
    const auto& JL = column(cols, "J_last", cfg.input_path);
    std::vector<CurvedSample> samples;
    for (std::size_t i = 0; i < N.size(); ++i) {
      samples.push_back({static_cast<int>(N[i]), S[i], 0.5 * (J1[i] + JL[i]), Nt[i], E[i]});
    }
    r = fit_curved_cardy(samples, cfg.fit);
  }
  summary.notes.push_back("c0 = " + format_real(r.c0) + ", cB = " + format_real(r.cB) +
                          ", cvF = " + format_real(r.cvF));
  return {{cfg.output_path, fit_report(r, cfg.fit_model)}};
}

}  // namespace detail

/// Runs `cfg`. Throws on any failure, after removing outputs of this run.
inline RunSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& options = {}) {
  if (cfg.output_path.empty()) throw config_error("output must be set", 0, 0, "output");
  RunSummary summary;
  std::vector<detail::Product> products;
  switch (cfg.experiment) {
    case ExperimentKind::Spectrum: products = detail::run_spectrum(cfg, options.jobs); break;
    case ExperimentKind::EnergySweep: products = detail::run_energy(cfg, options.jobs, summary); break;
    case ExperimentKind::EntropyProfile: products = detail::run_entropy(cfg, options.jobs, summary); break;
    case ExperimentKind::PotentialScan: products = detail::run_potential(cfg, options.jobs); break;
    case ExperimentKind::ForceSweep: products = detail::run_force(cfg, options.jobs, summary); break;
    case ExperimentKind::Fit: products = detail::run_fit(cfg, summary); break;
  }
  OutputSet out;
  try {
    for (const auto& p : products) {
      out.write(p.path, p.content);
      summary.files.push_back(p.path);
    }
  } catch (...) {
    out.rollback();
    throw;
  }
  return summary;
}

}  // namespace curvchain
