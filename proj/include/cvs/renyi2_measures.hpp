#pragma once

// Renyi-2 entropy based entanglement, discord and mutual information of
// two-mode Gaussian states (natural logarithm throughout).

#include "cvs/gaussian_core.hpp"
#include "cvs/vn_measures.hpp"

namespace cvs {

/// S2 = 1/2 ln det(sigma). Throws NumericalError for det <= 0.
double entropy_renyi2(const MultimodeCM& cm);
double entropy_renyi2(const Eigen::MatrixXd& cm);

struct ThetaSearchOptions {
  int grid_points = 720;
  double theta_tol = 1e-10;
};

/// Angle-independent coefficients of the objective
///   m(theta) = 1 + (p + r cos theta)^2 / (q + w sin theta - y cos theta)
/// that is minimised over theta to obtain the Renyi-2 entanglement.
struct EntanglementObjective {
  double p = 0.0;
  double r = 0.0;
  double q = 1.0;
  double w = 0.0;
  double y = 0.0;

  double operator()(double theta) const;
};

/// Coefficients for a block-form state, after rotating it to c1 >= |c2|.
EntanglementObjective entanglement_objective(const TwoModeStdForm& sf);

struct EntanglementDetail {
  double value = 0.0;
  bool separable = true;
  double theta = 0.0;
  double m_min = 1.0;
  int evaluations = 0;
};

EntanglementDetail entanglement_renyi2_detail(const TwoModeStdForm& sf,
                                              const ThetaSearchOptions& options = {});
double entanglement_renyi2(const TwoModeStdForm& sf, const ThetaSearchOptions& options = {});

enum class GammaBranch {
  Product,      // measured mode pure: shortcut, discord 0
  Correlated,   // branch condition >= 0
  Homodyne,     // branch condition < 0
};

struct Renyi2DiscordDetail {
  double value = 0.0;
  double gamma = 1.0;
  GammaBranch branch = GammaBranch::Product;
  double branch_condition = 0.0;
  /// Both branch expressions, when the measured mode is not pure.
  double gamma_correlated = 0.0;
  double gamma_homodyne = 0.0;
};

Renyi2DiscordDetail discord_renyi2_detail(const TwoModeStdForm& sf, Direction direction);
double discord_renyi2(const TwoModeStdForm& sf, Direction direction);

/// ln a + ln b - 1/2 ln det sigma.
double mutual_information_renyi2(const TwoModeStdForm& sf);

struct Renyi2Report {
  double entanglement = 0.0;
  double discord_a_given_b = 0.0;
  double discord_b_given_a = 0.0;
  double mutual_info = 0.0;
};

Renyi2Report renyi2_report(const TwoModeStdForm& sf, const ThetaSearchOptions& options = {});

}  // namespace cvs
