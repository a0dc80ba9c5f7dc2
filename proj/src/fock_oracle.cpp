#include "cvs/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "cvs/errors.hpp"

namespace cvs {

namespace {

std::size_t mode_position(const TruncatedState& state, ModeLabel mode) {
  const auto it = std::find(state.modes.begin(), state.modes.end(), mode);
  if (it == state.modes.end()) {
    throw DomainError(fmt::format("mode {} is not part of the truncated state", to_string(mode)));
  }
  return static_cast<std::size_t>(it - state.modes.begin());
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Union-find over matrix indices.
std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

double vn_entropy_bits(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double l : spectrum) {
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

double renyi2_entropy(const std::vector<double>& spectrum) {
  double purity = 0.0;
  for (double l : spectrum) purity += l * l;
  return -std::log(purity);
}

}  // namespace

std::size_t TruncatedState::index(const std::vector<int>& occupation) const {
  if (occupation.size() != modes.size()) throw ShapeError("occupation has the wrong number of modes");
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (int n : occupation) {
    if (n < 0 || n > n_max) throw DomainError(fmt::format("occupation {} outside 0..{}", n, n_max));
    idx += static_cast<std::size_t>(n) * stride;
    stride *= dim_per_mode();
  }
  return idx;
}

double TruncatedState::amplitude(const std::vector<int>& occupation) const {
  return amplitudes[static_cast<Eigen::Index>(index(occupation))];
}

TruncatedState tmsv_fock(double s, int n_max) {
  if (!(s >= 0.0) || n_max < 0) throw DomainError("tmsv_fock needs s >= 0 and n_max >= 0");
  TruncatedState st;
  st.n_max = n_max;
  st.modes = {kModeP, kModeQ};
  const std::size_t d = st.dim_per_mode();
  st.amplitudes = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d * d));
  const double t = std::tanh(s);
  double amp = 1.0 / std::cosh(s);
  for (int n = 0; n <= n_max; ++n) {
    st.amplitudes[static_cast<Eigen::Index>(n + n * d)] = amp;
    amp *= t;
  }
  st.tail_weight = std::pow(t, 2.0 * (n_max + 1));
  if (st.tail_weight > kFockTailTol) {
    st.warnings.push_back(fmt::format("TMSV tail weight {:.3g} exceeds {:.0e} at n_max = {}",
                                      st.tail_weight, kFockTailTol, n_max));
  }
  return st;
}

TruncatedState append_vacuum(const TruncatedState& state, ModeLabel mode) {
  if (std::find(state.modes.begin(), state.modes.end(), mode) != state.modes.end()) {
    throw DomainError(fmt::format("mode {} already present", to_string(mode)));
  }
  TruncatedState out = state;
  out.modes.push_back(mode);
  // The new mode has the largest stride; n = 0 keeps the old indices.
  out.amplitudes = Eigen::VectorXd::Zero(state.amplitudes.size() *
                                         static_cast<Eigen::Index>(state.dim_per_mode()));
  out.amplitudes.head(state.amplitudes.size()) = state.amplitudes;
  return out;
}

TruncatedState apply_schwinger_fock(const TruncatedState& state, const BogoliubovCoeffs& bc,
                                    const ModePair& pair) {
  const std::size_t ip = mode_position(state, pair.first);
  const std::size_t ia = mode_position(state, pair.second);
  const std::size_t d = state.dim_per_mode();
  const std::size_t stride_p = power(d, ip);
  const std::size_t stride_a = power(d, ia);
  const int n_max = state.n_max;

  const double inv_alpha = 1.0 / std::sqrt(bc.alpha_sq);
  const double t = std::sqrt(bc.beta_sq) * inv_alpha;

  TruncatedState out = state;
  out.amplitudes.setZero();
  double lost = 0.0;
  std::vector<double> coeff(static_cast<std::size_t>(n_max) + 1);

  for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
    const double amp = state.amplitudes[idx];
    if (amp == 0.0) continue;
    const std::size_t u = static_cast<std::size_t>(idx);
    const int n = static_cast<int>((u / stride_p) % d);
    const int m = static_cast<int>((u / stride_a) % d);
    if (m != 0) {
      throw DomainError(fmt::format("antiparticle mode {} is populated before the channel",
                                    to_string(pair.second)));
    }
    const std::size_t base = u - static_cast<std::size_t>(n) * stride_p;
    double c = std::pow(inv_alpha, n + 1);
    double kept = 0.0;
    for (int k = 0; n + k <= n_max; ++k) {
      out.amplitudes[static_cast<Eigen::Index>(base + (n + k) * stride_p + k * stride_a)] +=
          amp * c;
      kept += c * c;
      c *= t * std::sqrt(static_cast<double>(n + k + 1) / (k + 1));
    }
    lost += amp * amp * std::max(0.0, 1.0 - kept);
  }
  out.tail_weight = state.tail_weight + lost;
  if (out.tail_weight > kFockMaxTail) {
    throw TruncationError(fmt::format(
        "truncation tail {:.3g} exceeds {:.0e} at n_max = {}; increase n_max", out.tail_weight,
        kFockMaxTail, n_max));
  }
  return out;
}

TruncatedState channel_fock(Scenario scenario, double s, const FieldParams& fp, int n_max) {
  const BogoliubovCoeffs bc = bogoliubov(fp);
  TruncatedState st = tmsv_fock(s, n_max);
  if (scenario == Scenario::Unilateral) {
    st = append_vacuum(st, kModeMinusQ);
    return apply_schwinger_fock(st, bc, {kModeQ, kModeMinusQ});
  }
  st = append_vacuum(append_vacuum(st, kModeMinusP), kModeMinusQ);
  st = apply_schwinger_fock(st, bc, {kModeP, kModeMinusP});
  return apply_schwinger_fock(st, bc, {kModeQ, kModeMinusQ});
}

std::vector<double> block_spectrum(const Eigen::MatrixXd& m) {
  const std::size_t n = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      if (m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != 0.0) {
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  }
  std::vector<std::vector<Eigen::Index>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) {
    blocks[find_root(parent, i)].push_back(static_cast<Eigen::Index>(i));
  }

  std::vector<double> spectrum;
  spectrum.reserve(n);
  for (const auto& idx : blocks) {
    if (idx.empty()) continue;
    if (idx.size() == 1) {
      spectrum.push_back(m(idx[0], idx[0]));
      continue;
    }
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd sub(k, k);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("block eigensolver did not converge");
    for (Eigen::Index a = 0; a < k; ++a) spectrum.push_back(es.eigenvalues()[a]);
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

Eigen::MatrixXd reduced_density(const TruncatedState& state, const ModePair& pair) {
  const std::size_t i1 = mode_position(state, pair.first);
  const std::size_t i2 = mode_position(state, pair.second);
  const std::size_t d = state.dim_per_mode();
  const std::size_t rest_dim = static_cast<std::size_t>(state.amplitudes.size()) / (d * d);

  // Amplitudes reshaped to (pair index) x (index of the traced modes).
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d * d),
                                              static_cast<Eigen::Index>(rest_dim));
  for (Eigen::Index idx = 0; idx < state.amplitudes.size(); ++idx) {
    const double amp = state.amplitudes[idx];
    if (amp == 0.0) continue;
    std::size_t u = static_cast<std::size_t>(idx);
    std::size_t row = 0;
    std::size_t col = 0;
    std::size_t col_stride = 1;
    for (std::size_t mode = 0; mode < state.modes.size(); ++mode) {
      const std::size_t n = u % d;
      u /= d;
      if (mode == i1) {
        row += n;
      } else if (mode == i2) {
        row += n * d;
      } else {
        col += n * col_stride;
        col_stride *= d;
      }
    }
    psi(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amp;
  }
  Eigen::MatrixXd rho = psi * psi.transpose();
  const double tr = rho.trace();
  if (!(tr > 0.0)) throw NumericalError("reduced density matrix has zero trace");
  return rho / tr;
}

OracleMeasures oracle_measures(const TruncatedState& state, const ModePair& pair) {
  const std::size_t d = state.dim_per_mode();
  const auto di = static_cast<Eigen::Index>(d);
  OracleMeasures out;
  out.trace = state.norm_sq();
  const Eigen::MatrixXd rho = reduced_density(state, pair);

  Eigen::MatrixXd rho_first = Eigen::MatrixXd::Zero(di, di);
  Eigen::MatrixXd rho_second = Eigen::MatrixXd::Zero(di, di);
  Eigen::MatrixXd rho_pt(rho.rows(), rho.cols());
  for (Eigen::Index n2 = 0; n2 < di; ++n2) {
    for (Eigen::Index n1 = 0; n1 < di; ++n1) {
      for (Eigen::Index m2 = 0; m2 < di; ++m2) {
        for (Eigen::Index m1 = 0; m1 < di; ++m1) {
          const double v = rho(n1 + di * n2, m1 + di * m2);
          if (n2 == m2) rho_first(n1, m1) += v;
          if (n1 == m1) rho_second(n2, m2) += v;
          // transpose on the second mode
          rho_pt(n1 + di * m2, m1 + di * n2) = v;
        }
      }
    }
  }

  const std::vector<double> sp_pair = block_spectrum(rho);
  const std::vector<double> sp_first = block_spectrum(rho_first);
  const std::vector<double> sp_second = block_spectrum(rho_second);
  const std::vector<double> sp_pt = block_spectrum(rho_pt);

  double trace_norm = 0.0;
  for (double l : sp_pt) trace_norm += std::abs(l);
  out.log_negativity = std::max(0.0, std::log2(trace_norm));

  out.vn_pair = vn_entropy_bits(sp_pair);
  out.vn_first = vn_entropy_bits(sp_first);
  out.vn_second = vn_entropy_bits(sp_second);
  out.renyi2_pair = renyi2_entropy(sp_pair);
  out.renyi2_first = renyi2_entropy(sp_first);
  out.renyi2_second = renyi2_entropy(sp_second);
  out.mutual_info_vn = out.vn_first + out.vn_second - out.vn_pair;
  out.mutual_info_renyi2 = out.renyi2_first + out.renyi2_second - out.renyi2_pair;
  return out;
}

}  // namespace cvs
