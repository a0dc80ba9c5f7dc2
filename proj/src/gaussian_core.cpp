#include "cvs/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <fmt/format.h>

#include "cvs/errors.hpp"

namespace cvs {

namespace {

std::size_t require_index(const std::vector<ModeLabel>& modes, ModeLabel mode) {
  auto it = std::find(modes.begin(), modes.end(), mode);
  if (it == modes.end()) {
    throw DomainError(fmt::format("mode {} is not part of the state", to_string(mode)));
  }
  return static_cast<std::size_t>(it - modes.begin());
}

double scale_of(const Eigen::MatrixXd& m) {
  return std::max(1.0, m.cwiseAbs().maxCoeff());
}

}  // namespace

std::string to_string(ModeLabel mode) {
  std::string name = mode.owner == Owner::Alice ? "p" : "q";
  return mode.species == Species::Particle ? name : "-" + name;
}

std::string pair_tag(const ModePair& pair) {
  auto tag = [](ModeLabel m) {
    std::string t = m.owner == Owner::Alice ? "p" : "q";
    return m.species == Species::Particle ? t : "m" + t;
  };
  return tag(pair.first) + tag(pair.second);
}

std::optional<ModePair> parse_pair(const std::string& text) {
  for (ModeLabel first : kCanonicalModes) {
    for (ModeLabel second : kCanonicalModes) {
      if (first == second) continue;
      ModePair pair{first, second};
      if (text == pair_tag(pair) || text == to_string(first) + "," + to_string(second)) {
        return pair;
      }
    }
  }
  return std::nullopt;
}

MultimodeCM::MultimodeCM(std::vector<ModeLabel> modes, Eigen::MatrixXd entries)
    : modes_(std::move(modes)), entries_(std::move(entries)) {
  const auto dim = static_cast<Eigen::Index>(2 * modes_.size());
  if (modes_.empty() || entries_.rows() != dim || entries_.cols() != dim) {
    throw DomainError(fmt::format("covariance matrix must be {0}x{0} for {1} modes, got {2}x{3}",
                                  dim, modes_.size(), entries_.rows(), entries_.cols()));
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    for (std::size_t j = i + 1; j < modes_.size(); ++j) {
      if (modes_[i] == modes_[j]) {
        throw DomainError(fmt::format("mode {} listed twice", to_string(modes_[i])));
      }
    }
  }
}

std::optional<std::size_t> MultimodeCM::index_of(ModeLabel mode) const {
  auto it = std::find(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - modes_.begin());
}

Eigen::Matrix4d TwoModeStdForm::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = m(1, 1) = a;
  m(2, 2) = m(3, 3) = b;
  m(0, 2) = m(2, 0) = c1;
  m(1, 3) = m(3, 1) = c2;
  return m;
}

SymplecticInvariants invariants(const TwoModeStdForm& sf) {
  SymplecticInvariants inv;
  inv.j1 = sf.a * sf.a;
  inv.j2 = sf.b * sf.b;
  inv.j3 = sf.c1 * sf.c2;
  inv.j4 = sf.det();
  inv.sum = inv.j1 + inv.j2 + 2.0 * inv.j3;
  inv.diff = inv.j1 + inv.j2 - 2.0 * inv.j3;
  return inv;
}

TwoModeStdForm tmsv(double s) {
  if (!std::isfinite(s)) throw DomainError("squeezing parameter must be finite");
  const double ch = std::cosh(2.0 * s);
  const double sh = std::sinh(2.0 * s);
  return {ch, ch, sh, -sh};
}

MultimodeCM embed_input(const TwoModeStdForm& sf) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(8, 8);
  m.topLeftCorner<4, 4>() = sf.matrix();
  return MultimodeCM({kCanonicalModes.begin(), kCanonicalModes.end()}, std::move(m));
}

Eigen::MatrixXd symplectic_form(std::size_t num_modes) {
  const auto dim = static_cast<Eigen::Index>(2 * num_modes);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  return omega;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& cm) {
  if (!cm.allFinite()) throw NumericalError("covariance matrix has non-finite entries");
  const auto n = static_cast<std::size_t>(cm.rows() / 2);
  const Eigen::MatrixXd product = symplectic_form(n) * cm;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(product, false);
  if (solver.info() != Eigen::Success) throw NumericalError("eigen-solver failed on Omega*sigma");
  std::vector<double> moduli;
  moduli.reserve(2 * n);
  for (const auto& ev : solver.eigenvalues()) moduli.push_back(std::abs(ev));
  std::sort(moduli.begin(), moduli.end());
  // Eigenvalues come in +-i nu pairs.
  std::vector<double> nus(n);
  for (std::size_t k = 0; k < n; ++k) nus[k] = 0.5 * (moduli[2 * k] + moduli[2 * k + 1]);
  return nus;
}

std::vector<double> symplectic_eigenvalues(const MultimodeCM& cm) {
  return symplectic_eigenvalues(cm.matrix());
}

std::pair<double, double> symplectic_eigenvalues(const TwoModeStdForm& sf, bool partial_transpose) {
  const double c2 = partial_transpose ? -sf.c2 : sf.c2;
  const double a = sf.a;
  const double b = sf.b;
  const double c1 = sf.c1;
  const double sum = a * a + b * b + 2.0 * c1 * c2;
  const double det = sf.det();
  // sum^2 - 4 det, expanded to avoid cancellation between two O(a^4) terms
  // when the eigenvalues are nearly degenerate.
  double disc = (a * a - b * b) * (a * a - b * b) + 4.0 * (a * c1 + b * c2) * (a * c2 + b * c1);
  if (disc < 0.0) {
    if (disc < -1e-12 * std::max(1.0, sum * sum)) {
      throw NumericalError(fmt::format("negative symplectic discriminant {:.3e}", disc));
    }
    disc = 0.0;
  }
  const double plus_sq = 0.5 * (sum + std::sqrt(disc));
  if (!(plus_sq > 0.0) || !(det >= 0.0)) {
    throw NumericalError("two-mode state is not positive definite");
  }
  return {std::sqrt(det / plus_sq), std::sqrt(plus_sq)};
}

PhysicalityReport check_physical(const MultimodeCM& cm, double tol) {
  PhysicalityReport report;
  const Eigen::MatrixXd& m = cm.matrix();
  if (!m.allFinite()) {
    report.failures.push_back("non-finite entries");
    return report;
  }
  report.max_asymmetry = (m - m.transpose()).cwiseAbs().maxCoeff();
  report.symmetric = report.max_asymmetry <= tol * scale_of(m);
  if (!report.symmetric) {
    report.failures.push_back(fmt::format("asymmetry {:.3e} exceeds tolerance", report.max_asymmetry));
  }
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(sym);
  report.positive_definite = llt.info() == Eigen::Success;
  if (!report.positive_definite) report.failures.push_back("not positive definite");
  const auto nus = symplectic_eigenvalues(sym);
  report.min_symplectic_eigenvalue = nus.front();
  if (report.min_symplectic_eigenvalue < 1.0 - tol) {
    report.failures.push_back(
        fmt::format("symplectic eigenvalue {:.12g} below 1", report.min_symplectic_eigenvalue));
  }
  report.physical = report.failures.empty();
  return report;
}

PhysicalityReport check_physical(const TwoModeStdForm& sf, double tol) {
  return check_physical(MultimodeCM({kModeP, kModeQ}, sf.matrix()), tol);
}

bool is_symplectic(const Eigen::MatrixXd& s, double tol) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0 || !s.allFinite()) return false;
  const Eigen::MatrixXd omega = symplectic_form(static_cast<std::size_t>(s.rows() / 2));
  return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() <= tol * scale_of(s);
}

MultimodeCM apply_symplectic(const MultimodeCM& cm, const Eigen::MatrixXd& s) {
  if (s.rows() != cm.matrix().rows() || s.cols() != cm.matrix().cols()) {
    throw DomainError("transform dimension does not match the state");
  }
  if (!is_symplectic(s)) throw DomainError("transform is not symplectic");
  Eigen::MatrixXd out = s * cm.matrix() * s.transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return MultimodeCM(cm.modes(), std::move(out));
}

Eigen::MatrixXd embed_pair_transform(const Eigen::Matrix4d& s4, const ModePair& pair,
                                     std::span<const ModeLabel> modes) {
  std::vector<ModeLabel> order(modes.begin(), modes.end());
  if (pair.first == pair.second) throw DomainError("pair must name two distinct modes");
  const std::array<std::size_t, 2> idx{require_index(order, pair.first),
                                       require_index(order, pair.second)};
  const auto dim = static_cast<Eigen::Index>(2 * order.size());
  Eigen::MatrixXd full = Eigen::MatrixXd::Identity(dim, dim);
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      full.block(static_cast<Eigen::Index>(2 * idx[bi]), static_cast<Eigen::Index>(2 * idx[bj]), 2, 2) =
          s4.block<2, 2>(2 * bi, 2 * bj);
    }
  }
  return full;
}

MultimodeCM partial_trace(const MultimodeCM& cm, std::span<const ModeLabel> keep) {
  if (keep.empty()) throw DomainError("partial trace must keep at least one mode");
  std::vector<Eigen::Index> rows;
  std::vector<ModeLabel> kept;
  for (ModeLabel mode : keep) {
    if (std::find(kept.begin(), kept.end(), mode) != kept.end()) {
      throw DomainError(fmt::format("mode {} kept twice", to_string(mode)));
    }
    const auto k = static_cast<Eigen::Index>(require_index(cm.modes(), mode));
    rows.push_back(2 * k);
    rows.push_back(2 * k + 1);
    kept.push_back(mode);
  }
  const auto dim = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) out(i, j) = cm.matrix()(rows[i], rows[j]);
  }
  return MultimodeCM(std::move(kept), std::move(out));
}

MultimodeCM partial_trace(const MultimodeCM& cm, const ModePair& keep) {
  const std::array<ModeLabel, 2> modes{keep.first, keep.second};
  return partial_trace(cm, modes);
}

TwoModeStdForm to_std_form(const Eigen::Matrix4d& m, double tol) {
  const double t = tol * scale_of(m);
  auto near = [t](double x, double y) { return std::abs(x - y) <= t; };
  const bool block_form = near(m(0, 0), m(1, 1)) && near(m(2, 2), m(3, 3)) && near(m(0, 1), 0.0) &&
                          near(m(1, 0), 0.0) && near(m(2, 3), 0.0) && near(m(3, 2), 0.0) &&
                          near(m(0, 3), 0.0) && near(m(1, 2), 0.0) && near(m(3, 0), 0.0) &&
                          near(m(2, 1), 0.0) && near(m(0, 2), m(2, 0)) && near(m(1, 3), m(3, 1));
  if (!block_form) {
    throw ShapeError("covariance matrix is not in (a, b, c1, c2) block form");
  }
  return {0.5 * (m(0, 0) + m(1, 1)), 0.5 * (m(2, 2) + m(3, 3)), 0.5 * (m(0, 2) + m(2, 0)),
          0.5 * (m(1, 3) + m(3, 1))};
}

TwoModeStdForm to_std_form(const MultimodeCM& cm, double tol) {
  if (cm.num_modes() != 2) throw ShapeError("standard form needs a two-mode state");
  return to_std_form(Eigen::Matrix4d(cm.matrix()), tol);
}

}  // namespace cvs
