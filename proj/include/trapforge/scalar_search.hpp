#pragma once

#include <cmath>
#include <utility>

// Derivative-free scalar maximization: bracketing grid pre-scan followed by
// golden-section refinement. Robust to the flat maxima these geometry
// figures of merit tend to have.

namespace trapforge {

struct ScalarMax {
  double x = 0.0;
  double fx = 0.0;
};

template <class F>
ScalarMax golden_section_max(F&& f, double lo, double hi, double rel_tol = 1e-6,
                             int max_iter = 200) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > rel_tol * (std::abs(a) + std::abs(b)) * 0.5; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

// Grid pre-scan (log- or linear-spaced), then golden section on the winning
// bracket. Ties keep the earlier (smaller) abscissa.
template <class F>
ScalarMax maximize_scalar(F&& f, double lo, double hi, int grid_n = 512,
                          bool log_spaced = true, double rel_tol = 1e-6) {
  int best = 0;
  double best_f = -HUGE_VAL;
  auto grid_at = [&](int i) {
    const double t = static_cast<double>(i) / (grid_n - 1);
    return log_spaced ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
  };
  for (int i = 0; i < grid_n; ++i) {
    const double fx = f(grid_at(i));
    if (fx > best_f) {
      best_f = fx;
      best = i;
    }
  }
  const double bl = grid_at(best > 0 ? best - 1 : best);
  const double bh = grid_at(best < grid_n - 1 ? best + 1 : best);
  if (bl == bh) return {bl, best_f};
  return golden_section_max(f, bl, bh, rel_tol);
}

} // namespace trapforge
