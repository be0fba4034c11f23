#include "efsolve/quadrature.hpp"

#include <cmath>

#include "efsolve/errors.hpp"

namespace efsolve {

namespace {

double simpson_step(const RealFn& f, double a, double fa, double b, double fb,
                    double m, double fm, double whole, double tol, int depth,
                    int max_depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = b - a;
  const double left = h / 12.0 * (fa + 4.0 * flm + fm);
  const double right = h / 12.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth >= max_depth || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, max_depth) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const RealFn& f, double a, double b, double tol,
                        int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 0, max_depth);
}

TailIntegral integrate_to_infinity(const RealFn& f, const TailOptions& opt) {
  TailIntegral out;
  double partial = 0.0;
  double prev_diff = 0.0;
  double diff = 0.0;
  int streak = 0;
  double t_prev = 0.0;
  double t = 1.0;

  for (int k = 0; k <= opt.max_doublings; ++k) {
    const double seg_tol =
        opt.simpson_tol * (1.0 + std::abs(partial)) / (opt.max_doublings + 1);
    partial += adaptive_simpson(f, t_prev, t, seg_tol);
    out.partials.push_back(partial);
    out.last_partial = partial;
    out.truncation_radius = t;

    if (k >= 1) {
      prev_diff = diff;
      diff = out.partials[k] - out.partials[k - 1];
      if (std::abs(diff) < opt.tol * (1.0 + std::abs(partial))) {
        ++streak;
      } else {
        streak = 0;
      }
      if (streak >= opt.required_streak) {
        out.verdict = TailIntegral::Verdict::kConvergent;
        break;
      }
    }
    t_prev = t;
    t *= 2.0;
  }

  if (out.verdict != TailIntegral::Verdict::kConvergent) {
    const std::size_t n = out.partials.size();
    if (n >= 6 &&
        out.partials[n - 1] - out.partials[n - 6] > opt.divergence_margin) {
      out.verdict = TailIntegral::Verdict::kDivergent;
    }
    out.value = out.last_partial;
    out.error_estimate = std::abs(diff);
    return out;
  }

  // Geometric tail correction: if the diffs decay with ratio rho, the
  // remaining tail is approximately diff * rho / (1 - rho).
  out.value = partial;
  out.error_estimate = std::abs(diff);
  if (diff > 0.0 && prev_diff > 0.0) {
    const double rho = diff / prev_diff;
    if (rho > 0.0 && rho < 0.95) {
      const double correction = diff * rho / (1.0 - rho);
      out.value += correction;
      out.error_estimate = correction * rho + opt.simpson_tol;
    }
  }
  return out;
}

CumulativeIntegral::CumulativeIntegral(RealFn f, double rel_tol)
    : f_(std::move(f)), rel_tol_(rel_tol) {
  cache_.emplace(0.0, 0.0);
}

double CumulativeIntegral::operator()(double x) {
  if (x < 0.0) {
    throw quadrature_error("cumulative integral queried at negative radius");
  }
  auto it = cache_.upper_bound(x);
  // cache_ always holds x = 0, so there is a point at or below any x >= 0.
  --it;
  if (it->first == x) return it->second;
  const double base_x = it->first;
  const double base_v = it->second;
  const double tol = rel_tol_ * (1.0 + std::abs(base_v));
  const double v = base_v + adaptive_simpson(f_, base_x, x, tol);
  cache_.emplace(x, v);
  return v;
}

}  // namespace efsolve
