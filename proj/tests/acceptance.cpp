// Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion plus
// details for failures; exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cvs/fock_oracle.hpp"
#include "cvs/monogamy_sweep.hpp"
#include "cvs/reference_forms.hpp"

using namespace cvs;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, std::string what) {
    if (!ok) {
      pass = false;
      if (details.size() < 12) details.push_back(std::move(what));
    }
  }
};

const GridSpec kGrid{1e-2, 1e3, 200, Spacing::Log};
constexpr double kRounding = 1e-12;

std::vector<SweepRecord> full_sweep(Scenario sc, double s) {
  SweepConfig cfg = SweepConfig::defaults(sc, s);
  cfg.grid = kGrid;
  return run_sweep(cfg);
}

const MonogamyScore& score(const SweepRecord& r, Family f, Measure m) {
  for (const auto& ms : r.monogamy) {
    if (ms.family == f && ms.measure == m) return ms;
  }
  throw std::logic_error("missing monogamy score");
}

Outcome bogoliubov_identity() {
  Outcome o;
  for (int i = 0; i < 100; ++i) {
    const double zeta = std::pow(10.0, -3.0 + 6.0 * i / 99.0);
    const BogoliubovCoeffs bc = bogoliubov(FieldParams{1.0 / zeta});
    const double d = std::norm(bc.alpha) - std::norm(bc.beta) - 1.0;
    o.require(std::abs(d) < 1e-10, fmt::format("zeta={:.6g}: |alpha|^2-|beta|^2-1={:.3g}", zeta, d));
  }
  return o;
}

Outcome reduced_cm_fidelity() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ds(0.0, 2.0), dx(0.0, 50.0);
  for (int i = 0; i < 50; ++i) {
    const double s = ds(rng), x = dx(rng);
    for (Scenario sc : {Scenario::Unilateral, Scenario::Bilateral}) {
      const ChannelOutput out = apply_channel(sc, s, FieldParams{x});
      for (const ModePair& p : scenario_pairs(sc)) {
        const auto printed = reference::printed_reduced_cm(s, FieldParams{x}, sc, p);
        if (!printed) continue;
        const TwoModeStdForm got = reduce_pair(out, p);
        const double d = std::max({std::abs(got.a - printed->state.a), std::abs(got.b - printed->state.b),
                                   std::abs(got.c1 - printed->state.c1), std::abs(got.c2 - printed->state.c2)});
        o.require(d < 1e-12, fmt::format("{} s={:.4g} x={:.4g}: max diff {:.3g}", printed->equation, s, x, d));
      }
    }
  }
  return o;
}

Outcome conservation_law(const std::vector<SweepRecord>& uni) {
  Outcome o;
  const double target = 2.0 * std::log(std::cosh(2.0));
  for (const auto& r : uni) {
    const double sum = r.reports[0].renyi2.mutual_info + r.reports[1].renyi2.mutual_info;
    o.require(std::abs(sum - target) < 1e-10, fmt::format("x={:.6g}: I2 sum off by {:.3g}", r.x, sum - target));
    const double d = score(r, Family::Renyi2, Measure::MutualInfo).value;
    o.require(std::abs(d) < 1e-10, fmt::format("x={:.6g}: dI2={:.3g}", r.x, d));
  }
  return o;
}

Outcome non_redistribution(const std::vector<SweepRecord>& uni, const std::vector<SweepRecord>& bi) {
  Outcome o;
  auto check = [&](const std::vector<SweepRecord>& recs, const char* label) {
    for (const auto& r : recs) {
      for (const auto& rep : r.reports) {
        if (rep.pair == ModePair{kModeP, kModeQ}) continue;
        o.require(rep.vn.negativity == 0.0 && rep.renyi2.entanglement == 0.0,
                  fmt::format("{} {} x={:.6g}: N1={:.3g} N2={:.3g}", label, pair_tag(rep.pair), r.x,
                              rep.vn.negativity, rep.renyi2.entanglement));
      }
    }
  };
  check(uni, "unilateral");
  check(bi, "bilateral");
  return o;
}

Outcome sudden_death() {
  Outcome o;
  const SuddenDeath sd = find_sudden_death(1.0, Scenario::Bilateral);
  const double target = M_PI / std::log(1.0 / std::tanh(1.0));
  const double rel = std::abs(sd.x_root - target) / target;
  o.require(rel < 1e-6, fmt::format("root {:.15g} vs {:.15g}, rel {:.3g}", sd.x_root, target, rel));
  o.require(!sudden_death_root(1.0, Scenario::Unilateral).has_value(), "unilateral root found");
  return o;
}

Outcome monotonicity(const std::vector<SweepRecord>& uni, const std::vector<SweepRecord>& bi) {
  Outcome o;
  auto check = [&](const std::vector<SweepRecord>& recs, const char* label) {
    for (std::size_t p = 0; p < recs.front().reports.size(); ++p) {
      const ModePair pair = recs.front().reports[p].pair;
      const bool input_pair = pair == ModePair{kModeP, kModeQ};
      for (Family f : kFamilies) {
        for (Measure m : kMeasures) {
          if (!input_pair && m == Measure::Negativity) continue;
          // Worst violation of the expected direction along the grid.
          double worst = 0.0, at = 0.0;
          for (std::size_t i = 1; i < recs.size(); ++i) {
            const double prev = recs[i - 1].reports[p].value(f, m);
            const double cur = recs[i].reports[p].value(f, m);
            const double step = input_pair ? cur - prev : prev - cur;
            const double excess = step - kRounding * std::max(1.0, std::abs(prev));
            if (excess > worst) {
              worst = excess;
              at = recs[i].x;
            }
          }
          o.require(worst <= 0.0, fmt::format("{} {} {}.{}: wrong-direction step {:.3g} at x={:.4g}", label,
                                              pair_tag(pair), to_string(f), to_string(m), worst, at));
          const double last = recs.back().reports[p].value(f, m);
          o.require(std::isfinite(last) && std::abs(last) < 100.0,
                    fmt::format("{} {} {}.{} unbounded at x=1e3: {}", label, pair_tag(pair), to_string(f),
                                to_string(m), last));
        }
      }
    }
  };
  check(uni, "unilateral");
  check(bi, "bilateral");
  return o;
}

Outcome lossiness(const std::vector<SweepRecord>& uni, const std::vector<SweepRecord>& bi) {
  Outcome o;
  for (const auto* recs : {&uni, &bi}) {
    const char* label = recs == &uni ? "unilateral" : "bilateral";
    for (const auto& r : *recs) {
      for (const auto& ms : r.monogamy) {
        if (ms.measure == Measure::MutualInfo) continue;
        o.require(ms.value >= -kRounding, fmt::format("{} x={:.6g}: d{}.{}={:.3g}", label, r.x,
                                                       to_string(ms.family), to_string(ms.measure), ms.value));
      }
    }
  }
  // The bilateral score scales as |beta|^4 at weak field. Below |beta|^4 =
  // 1e-12 it is smaller than the rounding of the subtracted mutual
  // informations, so there only score <= 1e-12 is checked.
  for (const auto& r : bi) {
    const double d = score(r, Family::Renyi2, Measure::MutualInfo).value;
    const double beta_sq = bogoliubov(FieldParams{r.x}).beta_sq;
    if (beta_sq * beta_sq >= 1e-12) {
      o.require(d < 0.0, fmt::format("bilateral x={:.6g}: dI2={:.3g} not negative", r.x, d));
    } else {
      o.require(d <= kRounding, fmt::format("bilateral x={:.6g}: dI2={:.3g} positive", r.x, d));
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (double s : {0.25, 0.5, 0.75}) {
    for (double x : {0.5, 1.0, 2.0}) {
      const TruncatedState st = channel_fock(Scenario::Unilateral, s, FieldParams{x}, 40);
      const ChannelOutput out = apply_unilateral(s, FieldParams{x});
      for (const ModePair& p : scenario_pairs(Scenario::Unilateral)) {
        const OracleMeasures om = oracle_measures(st, p);
        const TwoModeStdForm sf = reduce_pair(out, p);
        const std::vector<std::pair<const char*, double>> diffs{
            {"N1", om.log_negativity - log_negativity(sf)},
            {"I1", om.mutual_info_vn - mutual_information_vn(sf)},
            {"I2", om.mutual_info_renyi2 - mutual_information_renyi2(sf)},
            {"S2_pair", om.renyi2_pair - 0.5 * std::log(sf.det())},
            {"S2_first", om.renyi2_first - std::log(sf.a)},
            {"S2_second", om.renyi2_second - std::log(sf.b)},
        };
        for (const auto& [name, d] : diffs) {
          o.require(std::abs(d) < 1e-4,
                    fmt::format("s={} x={} {} {}: diff {:.3g}", s, x, pair_tag(p), name, d));
        }
      }
    }
  }
  return o;
}

Outcome trivial_collapses() {
  Outcome o;
  for (Scenario sc : {Scenario::Unilateral, Scenario::Bilateral}) {
    for (double s : {0.3, 1.0, 1.8}) {
      const std::vector<CorrelationReport> reps = correlation_reports(apply_channel(sc, s, FieldParams{0.0}));
      const CorrelationReport input = correlation_report(tmsv(s), {kModeP, kModeQ});
      for (const auto& r : reps) {
        const bool in = r.pair == ModePair{kModeP, kModeQ};
        for (Family f : kFamilies) {
          for (Measure m : kMeasures) {
            const double want = in ? input.value(f, m) : 0.0;
            o.require(r.value(f, m) == want, fmt::format("{} s={} x=0 {} {}.{}: {} vs {}", to_string(sc), s,
                                                         pair_tag(r.pair), to_string(f), to_string(m),
                                                         r.value(f, m), want));
          }
        }
      }
    }
  }
  for (const TwoModeStdForm& prod : {TwoModeStdForm{1.0, 1.0, 0.0, 0.0}, TwoModeStdForm{2.5, 4.0, 0.0, 0.0},
                                     TwoModeStdForm{1.0, 7.0, 0.0, 0.0}}) {
    const CorrelationReport r = correlation_report(prod, {kModeP, kModeQ});
    for (Family f : kFamilies) {
      for (Measure m : kMeasures) {
        o.require(std::abs(r.value(f, m)) < kRounding,
                  fmt::format("product a={} b={} {}.{}={:.3g}", prod.a, prod.b, to_string(f), to_string(m),
                              r.value(f, m)));
      }
    }
  }
  for (double s : {0.1, 0.5, 1.0, 1.5, 2.0}) {
    const double e = entanglement_renyi2(tmsv(s));
    const double want = std::log(std::cosh(2 * s));
    o.require(std::abs(e - want) < 1e-8, fmt::format("pure s={}: E2={:.15g} vs {:.15g}", s, e, want));
  }
  return o;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

bool same_number(const std::string& text, double v) {
  const double c = std::stod(text);
  if (std::isnan(c) || std::isnan(v)) return std::isnan(c) && std::isnan(v);
  return std::abs(c - v) <= 1e-12 * std::max(1.0, std::abs(v));
}

Outcome crosscheck_report() {
  Outcome o;
  const std::string dir = std::string(CVS_SOURCE_DIR) + "/results/";
  std::ifstream doc_in(dir + "crosscheck_flags.md");
  std::stringstream doc_ss;
  doc_ss << doc_in.rdbuf();
  const std::string doc = doc_ss.str();
  o.require(!doc.empty(), "results/crosscheck_flags.md missing");

  for (double x : {0.0, 1.0, 3.0}) {
    const reference::DiscrepancyReport rep = reference::crosscheck(1.0, FieldParams{x});
    const std::string name = fmt::format("crosscheck_s1_x{}.csv", x);
    const auto rows = read_csv(dir + name);
    o.require(rows.size() == rep.entries.size() + 1, fmt::format("{}: {} rows, report has {}", name,
                                                                 rows.size(), rep.entries.size() + 1));
    for (std::size_t i = 0; i < rep.entries.size() && i + 1 < rows.size(); ++i) {
      const auto& e = rep.entries[i];
      const auto& row = rows[i + 1];
      const bool match = row.size() == 8 && row[0] == to_string(e.scenario) && row[1] == pair_tag(e.pair) &&
                         row[2] == e.quantity && row[3] == e.equation && same_number(row[4], e.pipeline) &&
                         same_number(row[5], e.reference) && row[7] == (e.flagged ? "flag" : "pass");
      o.require(match, fmt::format("{} row {} differs from the regenerated report", name, i + 1));
    }
    for (const std::string& tag : rep.flagged_equations()) {
      const std::regex word("(^|[^A-Za-z0-9])" + tag + "([^A-Za-z0-9]|$)");
      o.require(std::regex_search(doc, word), fmt::format("flag {} at x={} undocumented", tag, x));
    }
  }
  return o;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<SweepRecord> uni = full_sweep(Scenario::Unilateral, 1.0);
  const std::vector<SweepRecord> bi = full_sweep(Scenario::Bilateral, 1.0);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Bogoliubov identity via the Gamma route", bogoliubov_identity},
      {"reduced covariance matrices match the closed forms", reduced_cm_fidelity},
      {"Renyi-2 mutual information conservation", [&] { return conservation_law(uni); }},
      {"no entanglement redistribution", [&] { return non_redistribution(uni, bi); }},
      {"bilateral sudden death position", sudden_death},
      {"monotonicity and boundedness in the field", [&] { return monotonicity(uni, bi); }},
      {"lossiness signs of the monogamy scores", [&] { return lossiness(uni, bi); }},
      {"Fock oracle equivalence", oracle_equivalence},
      {"trivial collapses", trivial_collapses},
      {"committed cross-check report", crosscheck_report},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(fmt::format("exception: {}", e.what()));
    }
    fmt::print("criterion {:>2}: {} ({})\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first);
    for (const auto& d : o.details) fmt::print("    {}\n", d);
    failed += o.pass ? 0 : 1;
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  fmt::print("{} of {} criteria passed in {:.2f} s\n", criteria.size() - failed, criteria.size(), dt.count());
  return failed == 0 ? 0 : 1;
}
