#pragma once

// Constant-field pair creation as a two-mode squeezing channel acting on the
// particle/antiparticle pairs (p, -p) and (q, -q).

#include <complex>
#include <vector>

#include "cvs/gaussian_core.hpp"

namespace cvs {

/// ln Gamma(z) on the principal branch (imaginary part continuous away from
/// the negative real axis). Throws DomainError at the poles.
std::complex<double> complex_lgamma(std::complex<double> z);
std::complex<double> complex_gamma(std::complex<double> z);

/// Dimensionless field strength x = e E0 / (k_perp^2 + m^2).
struct FieldParams {
  double x = 0.0;

  /// Throws DomainError for a non-positive denominator or negative x.
  static FieldParams from_raw(double mass, double charge, double field, double k_perp);
  /// zeta = 1/x; +inf at x = 0.
  double zeta() const;
};

struct BogoliubovCoeffs {
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};
  double alpha_sq = 1.0;
  double beta_sq = 0.0;
};

/// |beta|^2 = exp(-pi zeta). alpha comes from the Gamma-function expression
/// and must agree with sqrt(1 + |beta|^2) to 1e-8 (NumericalError otherwise).
/// x = 0 gives the identity channel.
BogoliubovCoeffs bogoliubov(const FieldParams& fp);

/// [[|alpha| I, |beta| Z], [|beta| Z, |alpha| I]] on (k, -k).
Eigen::Matrix4d squeeze_symplectic(const BogoliubovCoeffs& bc);

enum class Scenario { Unilateral, Bilateral };

const char* to_string(Scenario scenario);

struct ChannelOutput {
  MultimodeCM cm;
  double s = 0.0;
  FieldParams field;
  Scenario kind = Scenario::Unilateral;
};

/// Field acts on Bob's pair (q, -q) only.
ChannelOutput apply_unilateral(double s, const FieldParams& fp);
/// Same field on (p, -p) and (q, -q).
ChannelOutput apply_bilateral(double s, const FieldParams& fp);
ChannelOutput apply_channel(Scenario scenario, double s, const FieldParams& fp);

TwoModeStdForm reduce_pair(const ChannelOutput& out, const ModePair& pair);

/// Mode pairs that carry Alice-Bob correlations in each scenario:
/// (p,q), (p,-q) unilaterally; additionally (-p,q), (-p,-q) bilaterally.
std::vector<ModePair> scenario_pairs(Scenario scenario);

}  // namespace cvs
