#pragma once

// Number-basis brute force: the input state and the pair-creation channel
// are built as truncated pure states, and measures follow from spectra of
// reduced density matrices. Used to certify the Gaussian formulas at small
// squeezing.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cvs/gaussian_core.hpp"
#include "cvs/schwinger_channel.hpp"

namespace cvs {

inline constexpr double kFockTailTol = 1e-8;
inline constexpr double kFockMaxTail = 1e-6;

/// Pure state on modes[0..K), photon numbers 0..n_max per mode. Basis index
/// is sum_i n_i (n_max + 1)^i. Amplitudes are real (channel phases dropped).
struct TruncatedState {
  int n_max = 0;
  std::vector<ModeLabel> modes;
  Eigen::VectorXd amplitudes;
  /// Probability mass lost to truncation so far.
  double tail_weight = 0.0;
  std::vector<std::string> warnings;

  std::size_t dim_per_mode() const { return static_cast<std::size_t>(n_max) + 1; }
  double norm_sq() const { return amplitudes.squaredNorm(); }
  std::size_t index(const std::vector<int>& occupation) const;
  double amplitude(const std::vector<int>& occupation) const;
};

/// sech s sum_n tanh^n s |n, n> on (p, q). A tail above kFockTailTol is
/// recorded in `warnings`.
TruncatedState tmsv_fock(double s, int n_max);

/// Tensors a vacuum mode onto the state.
TruncatedState append_vacuum(const TruncatedState& state, ModeLabel mode);

/// Two-mode squeezer of the channel on (pair.first, pair.second); the second
/// (antiparticle) arm must be in vacuum. Uses
///   S|n, 0> = sum_k |alpha|^-(n+1) (|beta|/|alpha|)^k sqrt(C(n+k, k)) |n+k, k>.
/// Throws DomainError if the second arm is populated and TruncationError if
/// the accumulated tail exceeds kFockMaxTail.
TruncatedState apply_schwinger_fock(const TruncatedState& state, const BogoliubovCoeffs& bc,
                                    const ModePair& pair);

/// Unilateral: modes (p, q, -q). Bilateral: modes (p, q, -p, -q).
TruncatedState channel_fock(Scenario scenario, double s, const FieldParams& fp, int n_max);

/// Eigenvalues of a symmetric matrix, diagonalising each connected component
/// of its nonzero pattern separately.
std::vector<double> block_spectrum(const Eigen::MatrixXd& m);

/// Normalised two-mode reduced density matrix, row index n_first + (n_max+1) n_second.
Eigen::MatrixXd reduced_density(const TruncatedState& state, const ModePair& pair);

struct OracleMeasures {
  double log_negativity = 0.0;  // bits
  double mutual_info_vn = 0.0;  // bits
  double mutual_info_renyi2 = 0.0;
  double renyi2_pair = 0.0;     // -ln tr rho^2 of the pair
  double renyi2_first = 0.0;
  double renyi2_second = 0.0;
  double vn_pair = 0.0;         // bits
  double vn_first = 0.0;
  double vn_second = 0.0;
  double trace = 0.0;           // of the unnormalised reduced state
};

OracleMeasures oracle_measures(const TruncatedState& state, const ModePair& pair);

}  // namespace cvs
