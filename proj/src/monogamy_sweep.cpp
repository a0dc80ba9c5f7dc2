#include "cvs/monogamy_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace cvs {

namespace {

constexpr ModePair kInputPair{kModeP, kModeQ};
constexpr double kCrossingNoise = 1e-12;

CorrelationReport input_report(double s, double vn_log_base, const ThetaSearchOptions& theta) {
  return correlation_report(tmsv(s), kInputPair, vn_log_base, theta);
}

double scenario_monogamy(Scenario scenario, double s, const FieldParams& fp, Family family,
                         Measure measure, double vn_log_base) {
  const ChannelOutput out = apply_channel(scenario, s, fp);
  return monogamy_score(input_report(s, vn_log_base, {}), correlation_reports(out, vn_log_base),
                        family, measure);
}

double pq_mu_minus(double s, Scenario scenario, double x) {
  const ChannelOutput out = apply_channel(scenario, s, FieldParams{x});
  return pt_min_symplectic_eigenvalue(reduce_pair(out, kInputPair));
}

double vn_mi_score(double s, Scenario scenario, double x) {
  return scenario_monogamy(scenario, s, FieldParams{x}, Family::VonNeumann, Measure::MutualInfo,
                           kLogBaseBits);
}

}  // namespace

double monogamy_score(const CorrelationReport& input, const std::vector<CorrelationReport>& outputs,
                      Family family, Measure measure) {
  double score = input.value(family, measure);
  for (const auto& r : outputs) score -= r.value(family, measure);
  return score;
}

double monogamy_unilateral(double s, const FieldParams& fp, Family family, Measure measure,
                           double vn_log_base) {
  return scenario_monogamy(Scenario::Unilateral, s, fp, family, measure, vn_log_base);
}

double monogamy_bilateral(double s, const FieldParams& fp, Family family, Measure measure,
                          double vn_log_base) {
  return scenario_monogamy(Scenario::Bilateral, s, fp, family, measure, vn_log_base);
}

std::optional<double> sudden_death_root(double s, Scenario scenario, double x_max) {
  // mu_- - 1 is negative at x = 0 for s > 0; walk outwards for a sign change.
  double lo = 0.0;
  double hi = 1.0;
  while (pq_mu_minus(s, scenario, hi) < 1.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > x_max) return std::nullopt;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (pq_mu_minus(s, scenario, mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SuddenDeath find_sudden_death(double s, Scenario scenario) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError(fmt::format("sudden death needs s > 0, got {}", s));
  }
  const auto root = sudden_death_root(s, scenario);
  if (!root) {
    throw NumericalError(fmt::format(
        "no sign change of mu_- - 1 for the (p,q) pair ({} scenario, s = {})",
        to_string(scenario), s));
  }
  SuddenDeath sd;
  sd.x_root = *root;
  const double c = std::cosh(2 * s);
  const double sh = std::sinh(2 * s);
  sd.x_closed_form = std::numbers::pi / std::log((1 + c - sh) / (1 - c + sh));
  sd.x_coth = std::numbers::pi / std::log(1.0 / std::tanh(s));
  sd.rel_diff = std::abs(sd.x_root - sd.x_closed_form) / sd.x_closed_form;
  return sd;
}

void GridSpec::validate() const {
  if (count < 2) throw DomainError(fmt::format("grid needs at least 2 points, got {}", count));
  if (!(min >= 0.0) || !std::isfinite(max) || !(max >= min)) {
    throw DomainError(fmt::format("grid bounds must satisfy 0 <= min <= max, got {}:{}", min, max));
  }
  if (spacing == Spacing::Log && !(min > 0.0)) {
    throw DomainError("log-spaced grid needs min > 0");
  }
}

std::vector<double> GridSpec::values() const {
  validate();
  std::vector<double> xs(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    xs[i] = spacing == Spacing::Linear
                ? min + t * (max - min)
                : std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
  }
  // exact endpoints
  xs.front() = min;
  xs.back() = max;
  return xs;
}

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4) {
    throw DomainError(fmt::format("grid '{}' is not min:max:count:log|lin", text));
  }
  GridSpec g;
  try {
    std::size_t used = 0;
    g.min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("min");
    g.max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("max");
    g.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("count");
  } catch (const std::logic_error&) {
    throw DomainError(fmt::format("grid '{}' has a malformed number", text));
  }
  if (parts[3] == "log") {
    g.spacing = Spacing::Log;
  } else if (parts[3] == "lin") {
    g.spacing = Spacing::Linear;
  } else {
    throw DomainError(fmt::format("grid spacing '{}' is not log or lin", parts[3]));
  }
  g.validate();
  return g;
}

std::optional<double> vn_mutual_info_crossing(double s, Scenario scenario, const GridSpec& grid) {
  // Scores below this floor are rounding noise of a difference of O(I_in)
  // terms (at small x the true score is O(|beta|^4)) and carry no sign.
  const double floor = kCrossingNoise * std::max(1.0, mutual_information_vn(tmsv(s)));
  const std::vector<double> xs = grid.values();
  double prev_x = 0.0;
  double prev = 0.0;
  bool have_prev = false;
  for (double x : xs) {
    if (x <= 0.0) continue;
    const double v = vn_mi_score(s, scenario, x);
    if (std::abs(v) <= floor) continue;
    if (have_prev && ((prev < 0.0) != (v < 0.0))) {
      double lo = prev_x;
      double hi = x;
      const bool lo_negative = prev < 0.0;
      for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        ((vn_mi_score(s, scenario, mid) < 0.0) == lo_negative ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    prev_x = x;
    prev = v;
    have_prev = true;
  }
  return std::nullopt;
}

SweepConfig SweepConfig::defaults(Scenario scenario, double s) {
  SweepConfig cfg;
  cfg.scenario = scenario;
  cfg.s = s;
  cfg.pairs = scenario_pairs(scenario);
  return cfg;
}

void SweepConfig::validate() const {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("squeezing s must be finite and >= 0");
  grid.validate();
  if (families.empty()) throw DomainError("sweep needs at least one measure family");
  if (pairs.empty()) throw DomainError("sweep needs at least one mode pair");
  if (parallelism < 1) throw DomainError("parallelism must be a positive integer");
  const std::vector<ModePair> allowed = scenario_pairs(scenario);
  for (const ModePair& p : pairs) {
    if (std::find(allowed.begin(), allowed.end(), p) == allowed.end()) {
      throw DomainError(
          fmt::format("pair {} is not part of the {} scenario", pair_tag(p), to_string(scenario)));
    }
  }
}

SweepRecord sweep_point(const SweepConfig& cfg, double x) {
  const ChannelOutput out = apply_channel(cfg.scenario, cfg.s, FieldParams{x});
  const std::vector<CorrelationReport> all = correlation_reports(out, cfg.vn_log_base, cfg.theta);
  const CorrelationReport input = input_report(cfg.s, cfg.vn_log_base, cfg.theta);

  SweepRecord rec;
  rec.x = x;
  for (const ModePair& p : cfg.pairs) {
    for (const auto& r : all) {
      if (r.pair == p) rec.reports.push_back(r);
    }
  }
  for (Family family : cfg.families) {
    for (Measure m : kMonogamyMeasures) {
      rec.monogamy.push_back({family, m, monogamy_score(input, all, family, m)});
    }
  }
  return rec;
}

namespace {

void raise_failures(const std::vector<double>& xs, const std::vector<std::string>& errors) {
  std::vector<std::pair<std::size_t, std::string>> failures;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) failures.emplace_back(i, errors[i]);
  }
  if (failures.empty()) return;
  std::string msg = fmt::format("{} of {} sweep points failed:", failures.size(), xs.size());
  for (const auto& [i, what] : failures) msg += fmt::format(" [{} x={}] {};", i, xs[i], what);
  throw SweepError(msg, std::move(failures));
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<double> xs = cfg.grid.values();
  const long n = static_cast<long>(xs.size());
  std::vector<SweepRecord> records(xs.size());
  std::vector<std::string> errors(xs.size());

  // Each index writes only its own slot, so the result is independent of
  // scheduling.
#pragma omp parallel for schedule(dynamic) num_threads(cfg.parallelism)
  for (long i = 0; i < n; ++i) {
    try {
      records[i] = sweep_point(cfg, xs[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  raise_failures(xs, errors);
  return records;
}

std::vector<SweepRecord> run_sweep_serial(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<double> xs = cfg.grid.values();
  std::vector<SweepRecord> records;
  std::vector<std::string> errors(xs.size());
  records.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    try {
      records.push_back(sweep_point(cfg, xs[i]));
    } catch (const std::exception& e) {
      records.emplace_back();
      errors[i] = e.what();
    }
  }
  raise_failures(xs, errors);
  return records;
}

}  // namespace cvs
