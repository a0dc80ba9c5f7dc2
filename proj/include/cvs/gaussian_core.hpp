#pragma once

// Zero-mean multimode Gaussian states described by their covariance matrix
// (CM). Quadratures are ordered (x1, p1, x2, p2, ...) and normalised so that
// the vacuum CM is the identity.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cvs {

enum class Owner { Alice, Bob };
enum class Species { Particle, Antiparticle };

struct ModeLabel {
  Owner owner;
  Species species;

  friend constexpr auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
};

inline constexpr ModeLabel kModeP{Owner::Alice, Species::Particle};
inline constexpr ModeLabel kModeQ{Owner::Bob, Species::Particle};
inline constexpr ModeLabel kModeMinusP{Owner::Alice, Species::Antiparticle};
inline constexpr ModeLabel kModeMinusQ{Owner::Bob, Species::Antiparticle};

/// (p, q, -p, -q)
inline constexpr std::array<ModeLabel, 4> kCanonicalModes{kModeP, kModeQ, kModeMinusP,
                                                          kModeMinusQ};

using ModePair = std::pair<ModeLabel, ModeLabel>;

/// "p", "q", "-p", "-q"
std::string to_string(ModeLabel mode);
/// Compact tag used in table headers: "pq", "pmq", "mpq", "mpmq".
std::string pair_tag(const ModePair& pair);
/// Inverse of pair_tag; also accepts "p,-q" style.
std::optional<ModePair> parse_pair(const std::string& text);

class MultimodeCM {
 public:
  /// Throws DomainError when the matrix is not 2N x 2N or labels repeat.
  MultimodeCM(std::vector<ModeLabel> modes, Eigen::MatrixXd entries);

  std::size_t num_modes() const { return modes_.size(); }
  const std::vector<ModeLabel>& modes() const { return modes_; }
  const Eigen::MatrixXd& matrix() const { return entries_; }
  std::optional<std::size_t> index_of(ModeLabel mode) const;

 private:
  std::vector<ModeLabel> modes_;
  Eigen::MatrixXd entries_;
};

/// sigma = [[a I, C], [C, b I]] with C = diag(c1, c2).
struct TwoModeStdForm {
  double a = 1.0;
  double b = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;

  Eigen::Matrix4d matrix() const;
  double det() const { return (a * b - c1 * c1) * (a * b - c2 * c2); }
  /// Exchanges the roles of the two modes.
  TwoModeStdForm swapped() const { return {b, a, c1, c2}; }
};

struct SymplecticInvariants {
  double j1 = 0.0;
  double j2 = 0.0;
  double j3 = 0.0;
  double j4 = 0.0;     // det sigma
  double sum = 0.0;    // J1 + J2 + 2 J3
  double diff = 0.0;   // J1 + J2 - 2 J3, the partially transposed counterpart
};

SymplecticInvariants invariants(const TwoModeStdForm& std_form);

/// Two-mode squeezed vacuum with squeezing s.
TwoModeStdForm tmsv(double s);

/// TMSV (or any two-mode state) on (p, q) tensored with vacuum on (-p, -q).
MultimodeCM embed_input(const TwoModeStdForm& std_form);

/// Block-diagonal Omega = [[0, 1], [-1, 0]]^{(+) n}.
Eigen::MatrixXd symplectic_form(std::size_t num_modes);

/// N symplectic eigenvalues, ascending, from the spectrum of Omega * sigma.
std::vector<double> symplectic_eigenvalues(const MultimodeCM& cm);
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cm);

/// Closed-form (nu_minus, nu_plus) of a two-mode state. With
/// partial_transpose = true returns the eigenvalues of the partially
/// transposed state instead (c2 -> -c2).
std::pair<double, double> symplectic_eigenvalues(const TwoModeStdForm& std_form,
                                                 bool partial_transpose = false);

inline constexpr double kPhysicalityTol = 1e-9;

struct PhysicalityReport {
  bool physical = false;
  bool symmetric = false;
  bool positive_definite = false;
  double min_symplectic_eigenvalue = 0.0;
  double max_asymmetry = 0.0;
  std::vector<std::string> failures;
};

PhysicalityReport check_physical(const MultimodeCM& cm, double tol = kPhysicalityTol);
PhysicalityReport check_physical(const TwoModeStdForm& std_form, double tol = kPhysicalityTol);

bool is_symplectic(const Eigen::MatrixXd& s, double tol = 1e-10);

/// S sigma S^T. Throws DomainError if S is not symplectic.
MultimodeCM apply_symplectic(const MultimodeCM& cm, const Eigen::MatrixXd& s);

/// Lifts a 4x4 two-mode transform acting on `pair` (in that order) to the
/// full 2N-dimensional phase space of `modes`; identity elsewhere.
Eigen::MatrixXd embed_pair_transform(const Eigen::Matrix4d& s4, const ModePair& pair,
                                     std::span<const ModeLabel> modes);

/// Keeps the quadratures of `keep`, in the order given.
MultimodeCM partial_trace(const MultimodeCM& cm, std::span<const ModeLabel> keep);
MultimodeCM partial_trace(const MultimodeCM& cm, const ModePair& keep);

/// Reads (a, b, c1, c2) off a 4x4 CM already in block form. Throws ShapeError
/// otherwise; no symplectic reduction is attempted.
TwoModeStdForm to_std_form(const MultimodeCM& cm, double tol = 1e-10);
TwoModeStdForm to_std_form(const Eigen::Matrix4d& cm, double tol = 1e-10);

}  // namespace cvs
