#pragma once

// Experiment configuration: a flat `key = value` document.
//
//   # Rindler force sweep
//   experiment = force_sweep
//   metric     = rindler
//   J0         = 1
//   a          = 0.01
//   N_list     = 6:200:2, 400, 800
//   output     = rindler_forces.csv
//
// Lists are comma separated; `start:stop:step` expands to an inclusive range.
// Real values accept products/quotients of numbers and `pi` (`2*pi/50`).
// Unknown or repeated keys are errors.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "curvchain/casimir.hpp"
#include "curvchain/errors.hpp"
#include "curvchain/metric.hpp"
#include "curvchain/scaling_fit.hpp"

namespace curvchain {

enum class ExperimentKind { Spectrum, EnergySweep, EntropyProfile, PotentialScan, ForceSweep, Fit };

inline std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Spectrum: return "spectrum";
    case ExperimentKind::EnergySweep: return "energy_sweep";
    case ExperimentKind::EntropyProfile: return "entropy_profile";
    case ExperimentKind::PotentialScan: return "potential_scan";
    case ExperimentKind::ForceSweep: return "force_sweep";
    case ExperimentKind::Fit: return "fit";
  }
  return "unknown";
}

inline std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
  for (auto kind : {ExperimentKind::Spectrum, ExperimentKind::EnergySweep,
                    ExperimentKind::EntropyProfile, ExperimentKind::PotentialScan,
                    ExperimentKind::ForceSweep, ExperimentKind::Fit}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

enum class FitModel { Flat, Curved };

/// CFT formula used for the S_cft column of an entropy profile. Auto picks the
/// flat form for Minkowski, the closed form for the rainbow and the deformed
/// form otherwise.
enum class CftForm { Auto, Flat, Deformed, Rainbow, Rindler };

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::EnergySweep;
  MetricSpec metric;
  std::vector<int> sizes;     // N_list
  std::vector<double> gammas; // gamma_list
  std::string output_path;

  // energy_sweep
  std::string correlators_path;
  // entropy_profile
  CftForm cft_form = CftForm::Auto;
  double central_charge = 1.0;
  // force_sweep
  FitResult constants = FitResult::dirac_chain();
  ForceForm variant = ForceForm::Smooth;
  // fit
  std::string input_path;
  FitModel fit_model = FitModel::Flat;
  FitOptions fit;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  int line = 0;
  int key_column = 0;
  int value_column = 0;
};

class ValueReader {
 public:
  ValueReader(std::string key, const Entry& entry) : key_(std::move(key)), entry_(entry) {}

  [[noreturn]] void fail(const std::string& why, int offset = 0) const {
    throw config_error(key_ + ": " + why + " (line " + std::to_string(entry_.line) + ", column " +
                           std::to_string(entry_.value_column + offset) + ")",
                       entry_.line, entry_.value_column + offset, key_);
  }

  double real(std::string_view text, int offset = 0) const {
    text = trim(text);
    if (text.empty()) fail("expected a number", offset);
    double value = 1.0;
    char op = '*';
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto next = text.find_first_of("*/", pos);
      const auto token = trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
      double factor = 0.0;
      if (token == "pi") {
        factor = std::numbers::pi;
      } else if (token.size() > 2 && token.substr(token.size() - 2) == "pi") {
        factor = number(token.substr(0, token.size() - 2), offset) * std::numbers::pi;
      } else {
        factor = number(token, offset);
      }
      value = op == '*' ? value * factor : value / factor;
      if (next == std::string_view::npos) break;
      op = text[next];
      pos = next + 1;
    }
    if (!std::isfinite(value)) fail("value is not finite", offset);
    return value;
  }

  int integer(std::string_view text, int offset = 0) const {
    text = trim(text);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      fail("expected an integer, got '" + std::string(text) + "'", offset);
    }
    return v;
  }

  std::vector<std::pair<std::string_view, int>> items() const {
    std::vector<std::pair<std::string_view, int>> out;
    std::string_view v = entry_.value;
    std::size_t pos = 0;
    for (;;) {
      const auto comma = v.find(',', pos);
      const auto item = v.substr(pos, comma == std::string_view::npos ? v.npos : comma - pos);
      if (trim(item).empty()) fail("empty list item", static_cast<int>(pos));
      out.emplace_back(item, static_cast<int>(pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }

  std::vector<int> integer_list() const {
    std::vector<int> out;
    for (auto [item, offset] : items()) {
      const auto t = trim(item);
      const auto c1 = t.find(':');
      if (c1 == std::string_view::npos) {
        out.push_back(integer(t, offset));
        continue;
      }
      const auto c2 = t.find(':', c1 + 1);
      const int start = integer(t.substr(0, c1), offset);
      const int stop = integer(t.substr(c1 + 1, c2 == std::string_view::npos ? t.npos : c2 - c1 - 1), offset);
      const int step = c2 == std::string_view::npos ? 1 : integer(t.substr(c2 + 1), offset);
      if (step <= 0) fail("range step must be positive", offset);
      for (int n = start; n <= stop; n += step) out.push_back(n);
    }
    return out;
  }

  std::vector<double> real_list() const {
    std::vector<double> out;
    for (auto [item, offset] : items()) out.push_back(real(item, offset));
    return out;
  }

 private:
  double number(std::string_view token, int offset) const {
    token = trim(token);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      fail("expected a number, got '" + std::string(token) + "'", offset);
    }
    return v;
  }

  std::string key_;
  const Entry& entry_;
};

[[noreturn]] inline void invalid_field(const std::string& field, const std::string& why,
                                       const Entry* entry = nullptr) {
  if (entry) {
    throw config_error(why + " (line " + std::to_string(entry->line) + ")", entry->line,
                       entry->value_column, field);
  }
  throw config_error(why, 0, 0, field);
}

}  // namespace detail

/// Parses and validates a config document. `fallback` supplies the experiment
/// when the document has no `experiment` key (the CLI passes its subcommand);
/// if both are present they must agree.
inline ExperimentConfig parse_config(std::string_view text,
                                     std::optional<ExperimentKind> fallback = std::nullopt) {
  static const std::set<std::string, std::less<>> known = {
      "experiment", "metric",   "J0",     "a",         "A",          "k",
      "h",          "N_list",   "gamma_list", "output", "correlators_output", "cft_form",
      "central_charge", "c0",   "cB",     "cvF",       "variant",    "input",
      "fit_model",  "fit_order", "parity"};

  std::map<std::string, detail::Entry, std::less<>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (detail::trim(raw).empty()) continue;
    const auto eq = raw.find('=');
    const auto first = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
    if (eq == std::string_view::npos) {
      throw config_error("expected 'key = value' (line " + std::to_string(line_no) + ", column " +
                             std::to_string(first) + ")",
                         line_no, first);
    }
    const std::string key(detail::trim(raw.substr(0, eq)));
    if (key.empty()) {
      throw config_error("missing key (line " + std::to_string(line_no) + ", column " +
                             std::to_string(first) + ")",
                         line_no, first);
    }
    if (!known.contains(key)) {
      throw config_error("unknown key '" + key + "' (line " + std::to_string(line_no) +
                             ", column " + std::to_string(first) + ")",
                         line_no, first, key);
    }
    if (entries.contains(key)) {
      throw config_error("duplicate key '" + key + "' (line " + std::to_string(line_no) + ")",
                         line_no, first, key);
    }
    const auto value_part = raw.substr(eq + 1);
    const auto lead = value_part.find_first_not_of(" \t");
    const int value_column =
        static_cast<int>(eq) + 2 + static_cast<int>(lead == std::string_view::npos ? 0 : lead);
    entries.emplace(key, detail::Entry{std::string(detail::trim(value_part)), line_no, first,
                                       value_column});
  }

  auto find = [&](std::string_view key) -> const detail::Entry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  auto reader = [&](const char* key) { return detail::ValueReader(key, *find(key)); };

  ExperimentConfig cfg;

  if (const auto* e = find("experiment")) {
    const auto kind = parse_experiment_kind(e->value);
    if (!kind) reader("experiment").fail("unknown experiment '" + e->value + "'");
    if (fallback && *fallback != *kind) {
      reader("experiment").fail("config says '" + e->value + "' but the command runs '" +
                                std::string(to_string(*fallback)) + "'");
    }
    cfg.experiment = *kind;
  } else if (fallback) {
    cfg.experiment = *fallback;
  } else {
    detail::invalid_field("experiment", "experiment must be set");
  }

  if (const auto* e = find("metric")) {
    const auto kind = parse_metric_kind(e->value);
    if (!kind) reader("metric").fail("unknown metric '" + e->value + "'");
    cfg.metric.kind = *kind;
  }
  if (find("J0")) cfg.metric.J0 = reader("J0").real(find("J0")->value);
  if (find("a")) cfg.metric.a = reader("a").real(find("a")->value);
  if (find("A")) cfg.metric.A = reader("A").real(find("A")->value);
  if (find("k")) cfg.metric.k = reader("k").real(find("k")->value);
  if (find("h")) cfg.metric.h = reader("h").real(find("h")->value);

  if (!(cfg.metric.J0 > 0.0)) detail::invalid_field("J0", "J0 must be positive", find("J0"));
  if (cfg.metric.h < 0.0) detail::invalid_field("h", "h must be nonnegative", find("h"));

  if (find("N_list")) cfg.sizes = reader("N_list").integer_list();
  if (find("gamma_list")) cfg.gammas = reader("gamma_list").real_list();
  if (const auto* e = find("output")) cfg.output_path = e->value;
  if (const auto* e = find("correlators_output")) cfg.correlators_path = e->value;
  if (const auto* e = find("input")) cfg.input_path = e->value;

  if (const auto* e = find("cft_form")) {
    static const std::map<std::string, CftForm, std::less<>> forms = {
        {"auto", CftForm::Auto},       {"flat", CftForm::Flat},
        {"deformed", CftForm::Deformed}, {"rainbow", CftForm::Rainbow},
        {"rindler", CftForm::Rindler}};
    const auto it = forms.find(e->value);
    if (it == forms.end()) reader("cft_form").fail("unknown cft_form '" + e->value + "'");
    cfg.cft_form = it->second;
  }
  if (find("central_charge")) cfg.central_charge = reader("central_charge").real(find("central_charge")->value);
  if (find("c0")) cfg.constants.c0 = reader("c0").real(find("c0")->value);
  if (find("cB")) cfg.constants.cB = reader("cB").real(find("cB")->value);
  if (find("cvF")) cfg.constants.cvF = reader("cvF").real(find("cvF")->value);
  if (const auto* e = find("variant")) {
    if (e->value == "eq19") cfg.variant = ForceForm::Smooth;
    else if (e->value == "eq20") cfg.variant = ForceForm::WeakDeformation;
    else reader("variant").fail("variant must be eq19 or eq20");
  }
  if (const auto* e = find("fit_model")) {
    if (e->value == "flat") cfg.fit_model = FitModel::Flat;
    else if (e->value == "curved") cfg.fit_model = FitModel::Curved;
    else reader("fit_model").fail("fit_model must be flat or curved");
  }
  if (const auto* e = find("fit_order")) {
    if (e->value == "leading") cfg.fit.order = FitOrder::Leading;
    else if (e->value == "subleading") cfg.fit.order = FitOrder::Subleading;
    else reader("fit_order").fail("fit_order must be leading or subleading");
  }
  if (const auto* e = find("parity")) {
    if (e->value == "even_only") cfg.fit.parity = ParityMode::EvenOnly;
    else if (e->value == "odd_only") cfg.fit.parity = ParityMode::OddOnly;
    else if (e->value == "paired") cfg.fit.parity = ParityMode::Paired;
    else reader("parity").fail("parity must be even_only, odd_only or paired");
  }

  // Cross-field validation.
  if (cfg.experiment == ExperimentKind::Fit) {
    if (cfg.input_path.empty()) detail::invalid_field("input", "fit needs an input CSV");
    return cfg;
  }
  const auto* sizes_entry = find("N_list");
  if (cfg.sizes.empty()) detail::invalid_field("N_list", "N_list must be a nonempty list", sizes_entry);
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    const int n = cfg.sizes[i];
    if (n < 2 || n % 2 != 0) {
      detail::invalid_field("N_list", "N_list value " + std::to_string(n) + " is not an even size >= 2",
                            sizes_entry);
    }
    if (i > 0 && n <= cfg.sizes[i - 1]) {
      detail::invalid_field("N_list", "N_list must be strictly increasing (" +
                                          std::to_string(cfg.sizes[i - 1]) + " then " +
                                          std::to_string(n) + ")",
                            sizes_entry);
    }
    if (cfg.experiment == ExperimentKind::ForceSweep && n < 6) {
      detail::invalid_field("N_list", "force sweeps need N >= 6, got " + std::to_string(n), sizes_entry);
    }
  }
  for (int n : cfg.sizes) {
    try {
      validate(cfg.metric, n);
    } catch (const invalid_metric& err) {
      detail::invalid_field("metric", std::string("metric invalid for N = ") + std::to_string(n) +
                                          ": " + err.what());
    }
  }
  if (cfg.experiment == ExperimentKind::PotentialScan) {
    const auto* g = find("gamma_list");
    if (cfg.gammas.empty()) detail::invalid_field("gamma_list", "potential_scan needs gamma_list", g);
    for (double gamma : cfg.gammas) {
      if (!(gamma > 0.0 && gamma <= 1.0)) {
        detail::invalid_field("gamma_list", "gamma " + std::to_string(gamma) + " outside (0, 1]", g);
      }
    }
  }
  return cfg;
}

}  // namespace curvchain
