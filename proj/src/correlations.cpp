#include "cvs/correlations.hpp"

namespace cvs {

const char* to_string(Family family) {
  return family == Family::VonNeumann ? "vn" : "renyi2";
}

const char* to_string(Measure measure) {
  switch (measure) {
    case Measure::Negativity: return "N";
    case Measure::DiscordAB: return "DAB";
    case Measure::DiscordBA: return "DBA";
    case Measure::MutualInfo: return "I";
  }
  return "?";
}

double CorrelationReport::value(Family family, Measure measure) const {
  if (family == Family::VonNeumann) {
    switch (measure) {
      case Measure::Negativity: return vn.negativity;
      case Measure::DiscordAB: return vn.discord_a_given_b;
      case Measure::DiscordBA: return vn.discord_b_given_a;
      case Measure::MutualInfo: return vn.mutual_info;
    }
  }
  switch (measure) {
    case Measure::Negativity: return renyi2.entanglement;
    case Measure::DiscordAB: return renyi2.discord_a_given_b;
    case Measure::DiscordBA: return renyi2.discord_b_given_a;
    case Measure::MutualInfo: return renyi2.mutual_info;
  }
  return 0.0;
}

CorrelationReport correlation_report(const TwoModeStdForm& sf, const ModePair& pair,
                                     double vn_log_base, const ThetaSearchOptions& options) {
  CorrelationReport r;
  r.pair = pair;
  r.state = sf;
  r.vn = vn_report(sf, vn_log_base);
  r.renyi2 = renyi2_report(sf, options);
  return r;
}

std::vector<CorrelationReport> correlation_reports(const ChannelOutput& out, double vn_log_base,
                                                   const ThetaSearchOptions& options) {
  std::vector<CorrelationReport> reports;
  for (const ModePair& pair : scenario_pairs(out.kind)) {
    reports.push_back(correlation_report(reduce_pair(out, pair), pair, vn_log_base, options));
  }
  return reports;
}

}  // namespace cvs
