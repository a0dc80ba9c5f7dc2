#pragma once

// Both measure families for one mode pair, bundled.

#include <string>
#include <vector>

#include "cvs/renyi2_measures.hpp"
#include "cvs/schwinger_channel.hpp"
#include "cvs/vn_measures.hpp"

namespace cvs {

enum class Family { VonNeumann, Renyi2 };
enum class Measure { Negativity, DiscordAB, DiscordBA, MutualInfo };

inline constexpr std::array<Family, 2> kFamilies{Family::VonNeumann, Family::Renyi2};
inline constexpr std::array<Measure, 4> kMeasures{Measure::Negativity, Measure::DiscordAB,
                                                  Measure::DiscordBA, Measure::MutualInfo};

/// "vn" / "renyi2".
const char* to_string(Family family);
/// "N", "DAB", "DBA", "I".
const char* to_string(Measure measure);

struct CorrelationReport {
  ModePair pair{kModeP, kModeQ};
  TwoModeStdForm state;
  VnReport vn;
  Renyi2Report renyi2;

  double value(Family family, Measure measure) const;
};

CorrelationReport correlation_report(const TwoModeStdForm& sf, const ModePair& pair,
                                     double vn_log_base = kLogBaseBits,
                                     const ThetaSearchOptions& options = {});

/// One report per scenario pair of the channel output, in scenario_pairs order.
std::vector<CorrelationReport> correlation_reports(const ChannelOutput& out,
                                                   double vn_log_base = kLogBaseBits,
                                                   const ThetaSearchOptions& options = {});

}  // namespace cvs
