#pragma once

// Logarithmic negativity and von Neumann mutual information / discord of
// two-mode Gaussian states in block form.

#include <numbers>

#include "cvs/gaussian_core.hpp"

namespace cvs {

/// Default base for this measure family (bits).
inline constexpr double kLogBaseBits = 2.0;
inline constexpr double kLogBaseNats = std::numbers::e;

enum class Direction {
  AGivenB,  // measurement on B
  BGivenA,  // measurement on A
};

/// Entropy of a single-mode thermal state with symplectic eigenvalue x.
/// f(1) = 0; arguments in [1 - 1e-9, 1) are clamped, smaller ones throw
/// DomainError.
double f_vn(double x, double log_base = kLogBaseBits);

/// Smallest symplectic eigenvalue of the partial transpose.
double pt_min_symplectic_eigenvalue(const TwoModeStdForm& sf);

/// Positive partial transpose. A block-form state with c1 c2 >= 0 is always
/// PPT (transposition only flips the sign of c1 c2, and the PPT condition is
/// then implied by physicality); otherwise mu_- >= 1 decides.
bool is_ppt(const TwoModeStdForm& sf);

double log_negativity(const TwoModeStdForm& sf, double log_base = kLogBaseBits);
double mutual_information_vn(const TwoModeStdForm& sf, double log_base = kLogBaseBits);

/// Conditional-variance parameter entering the discord: the symplectic
/// eigenvalue of the measured-on party's conditional state.
double discord_epsilon(const TwoModeStdForm& sf, Direction direction);

double discord_vn(const TwoModeStdForm& sf, Direction direction,
                  double log_base = kLogBaseBits);

struct VnReport {
  double negativity = 0.0;
  double discord_a_given_b = 0.0;
  double discord_b_given_a = 0.0;
  double mutual_info = 0.0;
  double log_base = kLogBaseBits;
};

VnReport vn_report(const TwoModeStdForm& sf, double log_base = kLogBaseBits);

}  // namespace cvs
