#include "cvs/schwinger_channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "cvs/errors.hpp"

namespace cvs {

namespace {

constexpr double kGammaRouteTol = 1e-8;
constexpr double kPi = std::numbers::pi;

}  // namespace

FieldParams FieldParams::from_raw(double mass, double charge, double field, double k_perp) {
  const double denom = k_perp * k_perp + mass * mass;
  if (!(denom > 0.0)) throw DomainError("field parameters: k_perp^2 + m^2 must be positive");
  const double x = charge * field / denom;
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(fmt::format("field parameters give x = {}, expected x >= 0", x));
  }
  return FieldParams{x};
}

double FieldParams::zeta() const {
  return x == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / x;
}

BogoliubovCoeffs bogoliubov(const FieldParams& fp) {
  if (!(fp.x >= 0.0) || !std::isfinite(fp.x)) {
    throw DomainError(fmt::format("field strength x = {} must be finite and >= 0", fp.x));
  }
  BogoliubovCoeffs bc;
  if (fp.x == 0.0) return bc;

  const double zeta = fp.zeta();
  // eta = -1/2 - i zeta/2
  const std::complex<double> eta{-0.5, -0.5 * zeta};
  const std::complex<double> i{0.0, 1.0};
  bc.beta_sq = std::exp(-kPi * zeta);
  bc.beta = std::exp(-i * kPi * eta);
  bc.alpha_sq = 1.0 + bc.beta_sq;
  // alpha = sqrt(2 pi) / Gamma(-eta) * exp(-i pi (eta + 1) / 2), assembled in
  // log form since Gamma(-eta) underflows for small x.
  bc.alpha = std::exp(0.5 * std::log(2.0 * kPi) - complex_lgamma(-eta) -
                      i * kPi * (eta + 1.0) / 2.0);

  const double direct = std::sqrt(bc.alpha_sq);
  const double mismatch = std::abs(std::abs(bc.alpha) - direct);
  if (!(mismatch <= kGammaRouteTol)) {
    throw NumericalError(fmt::format(
        "Gamma-function route gives |alpha| = {:.17g}, expected {:.17g} (x = {})",
        std::abs(bc.alpha), direct, fp.x));
  }
  return bc;
}

Eigen::Matrix4d squeeze_symplectic(const BogoliubovCoeffs& bc) {
  const double ca = std::sqrt(bc.alpha_sq);
  const double cb = std::sqrt(bc.beta_sq);
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s.diagonal().setConstant(ca);
  s(0, 2) = s(2, 0) = cb;
  s(1, 3) = s(3, 1) = -cb;
  return s;
}

const char* to_string(Scenario scenario) {
  return scenario == Scenario::Unilateral ? "unilateral" : "bilateral";
}

ChannelOutput apply_unilateral(double s, const FieldParams& fp) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("squeezing s must be finite and >= 0");
  const Eigen::Matrix4d sq = squeeze_symplectic(bogoliubov(fp));
  MultimodeCM in = embed_input(tmsv(s));
  const Eigen::MatrixXd t = embed_pair_transform(sq, {kModeQ, kModeMinusQ}, in.modes());
  return {apply_symplectic(in, t), s, fp, Scenario::Unilateral};
}

ChannelOutput apply_bilateral(double s, const FieldParams& fp) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("squeezing s must be finite and >= 0");
  const Eigen::Matrix4d sq = squeeze_symplectic(bogoliubov(fp));
  MultimodeCM in = embed_input(tmsv(s));
  const Eigen::MatrixXd t = embed_pair_transform(sq, {kModeP, kModeMinusP}, in.modes()) *
                            embed_pair_transform(sq, {kModeQ, kModeMinusQ}, in.modes());
  return {apply_symplectic(in, t), s, fp, Scenario::Bilateral};
}

ChannelOutput apply_channel(Scenario scenario, double s, const FieldParams& fp) {
  return scenario == Scenario::Unilateral ? apply_unilateral(s, fp) : apply_bilateral(s, fp);
}

TwoModeStdForm reduce_pair(const ChannelOutput& out, const ModePair& pair) {
  return to_std_form(partial_trace(out.cm, pair));
}

std::vector<ModePair> scenario_pairs(Scenario scenario) {
  if (scenario == Scenario::Unilateral) return {{kModeP, kModeQ}, {kModeP, kModeMinusQ}};
  return {{kModeP, kModeQ}, {kModeP, kModeMinusQ}, {kModeMinusP, kModeQ},
          {kModeMinusP, kModeMinusQ}};
}

}  // namespace cvs
