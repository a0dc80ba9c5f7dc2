#pragma once

// Monogamy scores, entanglement sudden death and field-strength sweeps.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvs/correlations.hpp"
#include "cvs/errors.hpp"

namespace cvs {

/// Input correlation minus the sum over all output pairs of the scenario.
/// `measure` is one of DiscordAB, DiscordBA, MutualInfo; Negativity gives the
/// entanglement counterpart (an extension beyond the discord/MI scores).
double monogamy_score(const CorrelationReport& input, const std::vector<CorrelationReport>& outputs,
                      Family family, Measure measure);

double monogamy_unilateral(double s, const FieldParams& fp, Family family, Measure measure,
                           double vn_log_base = kLogBaseBits);
double monogamy_bilateral(double s, const FieldParams& fp, Family family, Measure measure,
                          double vn_log_base = kLogBaseBits);

struct SuddenDeath {
  double x_root = 0.0;         // bisection on mu_- - 1 of the (p, q) pair
  double x_closed_form = 0.0;  // pi / ln[(1 + cosh 2s - sinh 2s) / (1 - cosh 2s + sinh 2s)]
  double x_coth = 0.0;         // pi / ln coth s
  double rel_diff = 0.0;       // |x_root - x_closed_form| / x_closed_form
  int iterations = 0;
};

/// Smallest x with mu_-(x) = 1 for the (p, q) pair, if mu_- - 1 changes sign
/// on (0, x_max].
std::optional<double> sudden_death_root(double s, Scenario scenario, double x_max = 1e12);

/// Throws DomainError for s <= 0 and NumericalError when no sign change is
/// bracketed (the unilateral case).
SuddenDeath find_sudden_death(double s, Scenario scenario = Scenario::Bilateral);

enum class Spacing { Linear, Log };

struct GridSpec {
  double min = 1e-2;
  double max = 1e3;
  int count = 200;
  Spacing spacing = Spacing::Log;

  /// Throws DomainError: count < 2, min < 0, max < min, log spacing with min = 0.
  void validate() const;
  std::vector<double> values() const;
  /// "min:max:count:log|lin".
  static GridSpec parse(const std::string& text);
};

/// First x on the grid (x > 0) where the von Neumann mutual-information
/// monogamy score changes sign, refined by bisection. Grid points whose score
/// is within rounding noise of zero are skipped.
std::optional<double> vn_mutual_info_crossing(double s, Scenario scenario, const GridSpec& grid);

struct SweepConfig {
  Scenario scenario = Scenario::Unilateral;
  double s = 1.0;
  GridSpec grid;
  std::vector<Family> families{Family::VonNeumann, Family::Renyi2};
  std::vector<ModePair> pairs{{kModeP, kModeQ}, {kModeP, kModeMinusQ}};
  int parallelism = 1;
  double vn_log_base = kLogBaseBits;
  ThetaSearchOptions theta;

  /// All pairs of the scenario, both families, default grid.
  static SweepConfig defaults(Scenario scenario, double s);
  void validate() const;
};

struct MonogamyScore {
  Family family = Family::VonNeumann;
  Measure measure = Measure::MutualInfo;
  double value = 0.0;
};

struct SweepRecord {
  double x = 0.0;
  std::vector<CorrelationReport> reports;  // cfg.pairs order
  std::vector<MonogamyScore> monogamy;     // per family: DAB, DBA, I, then N
};

inline constexpr std::array<Measure, 4> kMonogamyMeasures{
    Measure::DiscordAB, Measure::DiscordBA, Measure::MutualInfo, Measure::Negativity};

class SweepError : public NumericalError {
 public:
  SweepError(std::string message, std::vector<std::pair<std::size_t, std::string>> failures)
      : NumericalError(std::move(message)), failures_(std::move(failures)) {}
  const std::vector<std::pair<std::size_t, std::string>>& failures() const { return failures_; }

 private:
  std::vector<std::pair<std::size_t, std::string>> failures_;
};

SweepRecord sweep_point(const SweepConfig& cfg, double x);

/// OpenMP over grid points with cfg.parallelism threads. Records come back
/// in grid order and do not depend on the thread count. Per-point failures
/// are collected and rethrown together as SweepError.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);
/// Single-threaded reference of run_sweep.
std::vector<SweepRecord> run_sweep_serial(const SweepConfig& cfg);

}  // namespace cvs
