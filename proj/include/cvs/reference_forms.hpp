#pragma once

// Literal transcriptions of the closed-form expressions for the
// reduced states and their correlations. They are kept apart from the
// pipeline and used only to cross-check it; disagreements are reported, not
// corrected.

#include <optional>
#include <string>
#include <vector>

#include "cvs/correlations.hpp"

namespace cvs::reference {

struct ReducedForm {
  TwoModeStdForm state;
  std::string equation;
};

/// Transcribed (a, b, c1, c2) of a reduced pair. The bilateral (-p, q) pair is
/// not transcribed and yields nullopt.
std::optional<ReducedForm> printed_reduced_cm(double s, const FieldParams& fp, Scenario scenario,
                                              const ModePair& pair);

struct ReferenceValue {
  double value = 0.0;
  std::string equation;
};

bool has_reference(Scenario scenario, const ModePair& pair, Family family, Measure measure);

/// Closed-form value; von Neumann family in bits, Renyi-2 family in nats.
/// Negativities include the max(0, .) of the definition. Entropy terms with
/// an argument below 1 evaluate to NaN rather than throwing. Throws
/// DomainError for combinations with no transcribed expression.
ReferenceValue reference_correlation(double s, const FieldParams& fp, Scenario scenario,
                                     const ModePair& pair, Family family, Measure measure);

inline constexpr double kCrosscheckTol = 1e-8;

struct DiscrepancyEntry {
  Scenario scenario = Scenario::Unilateral;
  ModePair pair{kModeP, kModeQ};
  /// "vn.N", "renyi2.I", ... for correlations; "cm.a", "cm.c1", ... for
  /// reduced-state entries.
  std::string quantity;
  std::string equation;
  double pipeline = 0.0;
  double reference = 0.0;
  double abs_diff = 0.0;
  bool flagged = false;
};

struct DiscrepancyReport {
  double s = 0.0;
  double x = 0.0;
  double tolerance = kCrosscheckTol;
  std::vector<DiscrepancyEntry> entries;

  std::size_t flagged_count() const;
  /// Distinct equation tags of the flagged entries, in order of appearance.
  std::vector<std::string> flagged_equations() const;
};

/// Every transcribed (scenario, pair, family, measure) value against the
/// pipeline (von Neumann family in bits), plus the transcribed reduced states
/// entry by entry.
DiscrepancyReport crosscheck(double s, const FieldParams& fp, double tol = kCrosscheckTol);

}  // namespace cvs::reference
