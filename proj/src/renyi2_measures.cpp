#include "cvs/renyi2_measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "cvs/errors.hpp"
#include "cvs/golden_section.hpp"
#include "quad.hpp"

namespace cvs {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSqrtClamp = 1e-10;
// Relative size of input rounding in a degree-6 polynomial of the entries.
constexpr double kInputNoise = 1e-13;

using quad::real;

// Rotates the state so that c1 >= |c2|; local rotations leave every
// correlation measure unchanged.
TwoModeStdForm rotate_to_standard(TwoModeStdForm sf) {
  if (std::abs(sf.c2) > std::abs(sf.c1)) std::swap(sf.c1, sf.c2);
  if (sf.c1 < 0.0) {
    sf.c1 = -sf.c1;
    sf.c2 = -sf.c2;
  }
  return sf;
}

}  // namespace

double entropy_renyi2(const Eigen::MatrixXd& cm) {
  Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (cm + cm.transpose()));
  if (llt.info() != Eigen::Success) {
    throw NumericalError("Renyi-2 entropy needs a positive definite covariance matrix");
  }
  // 1/2 ln det = sum ln L_ii
  double half_log_det = 0.0;
  for (Eigen::Index i = 0; i < cm.rows(); ++i) half_log_det += std::log(llt.matrixL()(i, i));
  return half_log_det;
}

double entropy_renyi2(const MultimodeCM& cm) { return entropy_renyi2(cm.matrix()); }

double EntanglementObjective::operator()(double theta) const {
  const double num = p + r * std::cos(theta);
  const double den = q + w * std::sin(theta) - y * std::cos(theta);
  if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 + num * num / den;
}

EntanglementObjective entanglement_objective(const TwoModeStdForm& input) {
  const TwoModeStdForm sf = rotate_to_standard(input);
  const real a = sf.a;
  const real b = sf.b;
  const real c1 = sf.c1;
  const real c2 = sf.c2;
  const double scale = std::max({1.0, sf.a, sf.b, std::abs(sf.c1), std::abs(sf.c2)});
  const real noise = kInputNoise * std::pow(scale, 6);

  const real k = a * b - c2 * c2;
  real radicand = (a - b * k) * (b - a * k);
  const real x = c1 * k + c2;
  const real y_poly = 2 * a * b * c2 * c2 * c2 + (a * a + b * b) * c1 * c2 * c2 +
                      ((1 - 2 * b * b) * a * a + b * b) * c2 - a * b * (a * a + b * b - 2) * c1;

  EntanglementObjective obj;
  obj.p = quad::to_double(c1 * k - c2);
  obj.q = quad::to_double(2 * k * (a * a + b * b + 2 * c1 * c2));

  if (radicand < 0 && radicand > -noise) radicand = 0;
  if (radicand < 0) {
    obj.r = obj.w = obj.y = kNaN;
    return obj;
  }
  if (radicand == 0) {
    // Degenerate limit: the angle-dependent terms vanish together.
    obj.r = 0.0;
    obj.w = 0.0;
    obj.y = quad::abs(y_poly) <= noise ? 0.0 : kNaN;
    return obj;
  }
  const real root = quad::sqrt(radicand);
  real w_arg = radicand - x * x;
  if (w_arg < 0 && w_arg > -quad::max(kSqrtClamp * radicand, noise)) w_arg = 0;
  obj.r = quad::to_double(root);
  obj.w = w_arg < 0 ? kNaN : quad::to_double((a * a - b * b) * quad::sqrt(w_arg) / root);
  obj.y = quad::to_double(y_poly / root);
  return obj;
}

EntanglementDetail entanglement_renyi2_detail(const TwoModeStdForm& sf,
                                              const ThetaSearchOptions& options) {
  EntanglementDetail detail;
  if (is_ppt(sf)) return detail;  // two-mode Gaussian: PPT means separable

  const EntanglementObjective objective = entanglement_objective(sf);
  const ScalarMinimum best = grid_then_golden(objective, 0.0, 2.0 * std::numbers::pi,
                                              options.grid_points, options.theta_tol,
                                              /*periodic=*/true);
  if (!best.found()) {
    throw NumericalError(fmt::format(
        "Renyi-2 entanglement objective is non-finite on the whole angle grid "
        "(a={}, b={}, c1={}, c2={})",
        sf.a, sf.b, sf.c1, sf.c2));
  }
  detail.separable = false;
  detail.theta = std::remainder(best.argmin, 2.0 * std::numbers::pi);
  if (detail.theta < 0) detail.theta += 2.0 * std::numbers::pi;
  detail.m_min = best.value;
  detail.evaluations = best.evaluations;
  detail.value = 0.5 * std::log(best.value);
  return detail;
}

double entanglement_renyi2(const TwoModeStdForm& sf, const ThetaSearchOptions& options) {
  return entanglement_renyi2_detail(sf, options).value;
}

Renyi2DiscordDetail discord_renyi2_detail(const TwoModeStdForm& sf, Direction direction) {
  // B|A follows from A|B with a <-> b and c1 <-> c2.
  const TwoModeStdForm s =
      direction == Direction::AGivenB ? sf : TwoModeStdForm{sf.b, sf.a, sf.c2, sf.c1};
  Renyi2DiscordDetail detail;
  if (s.b <= 1.0 || (s.c1 == 0.0 && s.c2 == 0.0)) {
    // Pure measured mode: the state is a product across the cut.
    detail.branch = GammaBranch::Product;
    detail.gamma = s.a * s.a;
    return detail;
  }

  const real a = s.a;
  const real b = s.b;
  const real c1s = real(s.c1) * s.c1;
  const real c2s = real(s.c2) * s.c2;
  const real abs_c1c2 = quad::abs(real(s.c1) * s.c2);
  const real det = (a * b - c1s) * (a * b - c2s);
  const real u = b * b - 1;

  const real cond = (a * b * b * c2s - c1s * (a + b * c2s)) * (a * b * b * c1s - c2s * (a + b * c1s));
  real g = (a * b * b - a - b * c2s) * (a * b * b - a - b * c1s);
  if (g < 0 && g > -kSqrtClamp) g = 0;
  const real gamma_corr = (2 * abs_c1c2 * quad::sqrt(g) + g + c1s * c2s) / (u * u);
  const real gamma_hom = a * (a - c1s / b);

  detail.branch_condition = quad::to_double(cond);
  detail.gamma_correlated = g < 0 ? kNaN : quad::to_double(gamma_corr);
  detail.gamma_homodyne = quad::to_double(gamma_hom);
  detail.branch = cond >= 0 ? GammaBranch::Correlated : GammaBranch::Homodyne;
  const real gamma = cond >= 0 ? gamma_corr : gamma_hom;
  if (!(gamma > 0) || !(det > 0) || (cond >= 0 && g < 0)) {
    throw NumericalError(fmt::format(
        "Renyi-2 discord: invalid gamma {:.6e} on the {} branch (a={}, b={}, c1={}, c2={})",
        quad::to_double(gamma), cond >= 0 ? "correlated" : "homodyne", s.a, s.b, s.c1, s.c2));
  }
  detail.gamma = quad::to_double(gamma);
  detail.value = quad::to_double(quad::log(b) - quad::log(det) / 2 + quad::log(gamma) / 2);
  return detail;
}

double discord_renyi2(const TwoModeStdForm& sf, Direction direction) {
  return discord_renyi2_detail(sf, direction).value;
}

double mutual_information_renyi2(const TwoModeStdForm& sf) {
  if (sf.c1 == 0.0 && sf.c2 == 0.0) return 0.0;  // product state
  const real a = sf.a;
  const real b = sf.b;
  const real det = (a * b - real(sf.c1) * sf.c1) * (a * b - real(sf.c2) * sf.c2);
  if (!(det > 0)) throw NumericalError("Renyi-2 mutual information needs det sigma > 0");
  return quad::to_double(quad::log(a) + quad::log(b) - quad::log(det) / 2);
}

Renyi2Report renyi2_report(const TwoModeStdForm& sf, const ThetaSearchOptions& options) {
  Renyi2Report r;
  r.entanglement = entanglement_renyi2(sf, options);
  r.discord_a_given_b = discord_renyi2(sf, Direction::AGivenB);
  r.discord_b_given_a = discord_renyi2(sf, Direction::BGivenA);
  r.mutual_info = mutual_information_renyi2(sf);
  return r;
}

}  // namespace cvs
