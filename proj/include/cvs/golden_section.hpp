#pragma once

// One-dimensional bracketing minimisation: a coarse scan followed by
// golden-section refinement. No derivatives are used, so the objective may
// have kinks or be undefined (non-finite) on parts of the interval.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cvs {

struct ScalarMinimum {
  double argmin = std::numeric_limits<double>::quiet_NaN();
  double value = std::numeric_limits<double>::infinity();
  int evaluations = 0;
  bool found() const { return std::isfinite(value); }
};

namespace detail {

template <class F>
double finite_or_inf(F& f, double x) {
  const double v = f(x);
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace detail

/// Golden-section search on [lo, hi] until the bracket is narrower than tol.
/// Assumes a single minimum inside the bracket.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = std::numbers::phi - 1.0;  // 0.618...
  ScalarMinimum out;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = detail::finite_or_inf(f, x1);
  double f2 = detail::finite_or_inf(f, x2);
  out.evaluations = 2;
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = detail::finite_or_inf(f, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = detail::finite_or_inf(f, x2);
    }
    ++out.evaluations;
    if (out.evaluations > 10000) break;
  }
  if (f1 <= f2) {
    out.argmin = x1;
    out.value = f1;
  } else {
    out.argmin = x2;
    out.value = f2;
  }
  return out;
}

/// Scans `grid_points` equally spaced points of [lo, hi), then refines the
/// best one with golden-section search on its neighbouring cell. With
/// periodic = true the neighbours of the first and last grid points wrap
/// around (the objective is evaluated outside [lo, hi]).
template <class F>
ScalarMinimum grid_then_golden(F&& f, double lo, double hi, int grid_points, double tol,
                               bool periodic) {
  ScalarMinimum best;
  if (grid_points < 2 || !(hi > lo)) return best;
  const double step = (hi - lo) / (periodic ? grid_points : grid_points - 1);
  int best_index = -1;
  for (int i = 0; i < grid_points; ++i) {
    const double x = lo + i * step;
    const double v = detail::finite_or_inf(f, x);
    ++best.evaluations;
    if (v < best.value) {
      best.value = v;
      best.argmin = x;
      best_index = i;
    }
  }
  if (best_index < 0) return best;

  double left = best.argmin - step;
  double right = best.argmin + step;
  if (!periodic) {
    left = std::max(left, lo);
    right = std::min(right, hi);
  }
  ScalarMinimum refined = golden_section_minimize(f, left, right, tol);
  refined.evaluations += best.evaluations;
  if (refined.value <= best.value) return refined;
  best.evaluations = refined.evaluations;
  return best;
}

}  // namespace cvs
