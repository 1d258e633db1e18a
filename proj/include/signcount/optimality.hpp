#ifndef SIGNCOUNT_OPTIMALITY_HPP
#define SIGNCOUNT_OPTIMALITY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "signcount/format.hpp"
#include "signcount/sign.hpp"
#include "signcount/transition.hpp"

namespace signcount {

// ---------------------------------------------------------------------------
// One-dimensional example: min x^2 cos(2x) on [-2pi, 2pi]
//
// Multipliers lambda_1(x) = |x - c1| exp|x - c1| for -x - 2pi <= 0, lambda_2 = 0.

struct OneDProblem {
  double c1 = -4.8;
  double sigma = 1.0;

  static double objective(double x) { return x * x * std::cos(2.0 * x); }
  double lambda1(double x) const {
    const double u = std::abs(x - c1);
    return u * std::exp(u);
  }
  /// K = -f(c1); 22.687 at c1 = -4.8.
  double level() const { return -objective(c1); }

  /// The three residuals that must be nonnegative.
  std::array<double, 3> residuals(double x) const {
    const double f = objective(x);
    const double k = level();
    const double mult = lambda1(x) * (x + 2.0 * std::numbers::pi);
    const double dist = std::abs(x - c1);
    return {-mult + f + k, -mult - f - k + sigma * dist, 2.0 * f + 2.0 * k - sigma * dist};
  }
};

struct ConditionReport {
  std::size_t grid_points = 0;
  double lo = 0.0;
  double hi = 0.0;
  std::array<double, 3> min_residual{};
  std::array<double, 3> argmin{};
  std::array<std::size_t, 3> violations{};  // grid points below -tol
  double tolerance = 0.0;
  bool pass = false;
};

/// Evaluates the three inequalities on a uniform grid (endpoints included).
inline ConditionReport oned_condition_check(const OneDProblem &p, std::size_t grid_points, double tol,
                                            double lo = -2.0 * std::numbers::pi, double hi = 0.0) {
  if (grid_points < 100) {
    throw std::invalid_argument("oned_condition_check: grid_points must be at least 100");
  }
  ConditionReport report;
  report.grid_points = grid_points;
  report.lo = lo;
  report.hi = hi;
  report.tolerance = tol;
  report.min_residual.fill(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const auto r = p.residuals(x);
    for (std::size_t j = 0; j < 3; ++j) {
      if (r[j] < report.min_residual[j]) {
        report.min_residual[j] = r[j];
        report.argmin[j] = x;
      }
      if (r[j] < -tol) ++report.violations[j];
    }
  }
  report.pass = true;
  for (double m : report.min_residual) report.pass = report.pass && m >= -tol;
  return report;
}

/// Global minimizer of x^2 cos(2x) on [-2pi, 2pi]: grid scan then golden-section
/// refinement inside the neighbouring cells. The objective is even, so grid values
/// within a relative 1e-12 of the minimum count as ties and the leftmost wins.
inline double oned_global_min(std::size_t grid_points) {
  if (grid_points < 10000) {
    throw std::invalid_argument("oned_global_min: grid_points must be at least 1e4");
  }
  const double lo = -2.0 * std::numbers::pi;
  const double hi = 2.0 * std::numbers::pi;
  const double h = (hi - lo) / static_cast<double>(grid_points - 1);
  auto grid_x = [&](std::size_t i) { return lo + h * static_cast<double>(i); };
  double best_f = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_points; ++i) best_f = std::min(best_f, OneDProblem::objective(grid_x(i)));
  const double slack = 1e-12 * std::abs(best_f);
  std::size_t best_i = 0;
  while (OneDProblem::objective(grid_x(best_i)) > best_f + slack) ++best_i;
  const double best_x = grid_x(best_i);
  double a = std::max(lo, best_x - h);
  double b = std::min(hi, best_x + h);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  for (int it = 0; it < 100 && b - a > 1e-14; ++it) {
    if (OneDProblem::objective(c) < OneDProblem::objective(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - ratio * (b - a);
    d = a + ratio * (b - a);
  }
  return 0.5 * (a + b);
}

/// CSV `x,f,ineq_a,ineq_b,ineq_c` on a uniform grid over [lo, hi].
inline std::string oned_csv(const OneDProblem &p, std::size_t grid_points,
                            double lo = -2.0 * std::numbers::pi, double hi = 0.0) {
  std::string out = "x,f,ineq_a,ineq_b,ineq_c\n";
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const auto r = p.residuals(x);
    out += format_number(x) + ',' + format_number(OneDProblem::objective(x)) + ',' + format_number(r[0]) +
           ',' + format_number(r[1]) + ',' + format_number(r[2]) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sign-grid Lagrangian equation
//
//   sum_i lambda_i d_i (1 - 3 z_i^2) + t(z) - sum_pairs (d_i + d_j + k_ij d_i d_j)^2 (d_i d_j - 1)^2
//
// The gradient term comes from the equality constraints x_i (1 - x_i^2) = 0.

/// One k per adjacent pair of `topo`; a single value is broadcast to every pair.
inline double lagrangian_residual(const SignVector &z, std::span<const double> lambda,
                                  std::span<const double> pair_k, std::span<const double> d, Topology topo) {
  const std::size_t n = z.size();
  if (lambda.size() != n || d.size() != n) {
    throw std::invalid_argument("lagrangian_residual: dimension mismatch");
  }
  const auto pairs = adjacent_pairs(n, topo);
  if (pair_k.size() != 1 && pair_k.size() != pairs.size()) {
    throw std::invalid_argument("lagrangian_residual: need one k per pair or a single k");
  }
  double acc = static_cast<double>(sign_changes(z, topo));
  for (std::size_t i = 0; i < n; ++i) acc += lambda[i] * d[i] * (1.0 - 3.0 * z[i] * z[i]);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const double k = pair_k.size() == 1 ? pair_k[0] : pair_k[p];
    const double a = d[pairs[p].first];
    const double b = d[pairs[p].second];
    const double lin = a + b + k * a * b;
    const double prod = a * b - 1.0;
    acc -= lin * lin * prod * prod;
  }
  return acc;
}

inline void require_open_angle(double phi, const char *who) {
  if (!(phi > 0.0) || !(phi < std::numbers::pi)) {
    throw std::invalid_argument(std::string(who) + ": angle must lie in (0, pi)");
  }
}

/// d = (cos phi, sin phi).
inline RealVector polar_direction(double phi) { return {std::cos(phi), std::sin(phi)}; }

/// d = (cos phi1, cos phi2 sin phi1, sin phi2 sin phi1).
inline RealVector spherical_direction(double phi1, double phi2) {
  return {std::cos(phi1), std::cos(phi2) * std::sin(phi1), std::sin(phi2) * std::sin(phi1)};
}

/// lambda_2 at z = (-1, 1), lambda_1 = 0, k = 0:
///   4 lambda_2 sin phi = 4 - (cos phi + sin phi)^2 (sin 2phi - 2)^2.
inline double lambda2_closed_form(double phi1) {
  require_open_angle(phi1, "lambda2_closed_form");
  const double s = std::cos(phi1) + std::sin(phi1);
  const double w = std::sin(2.0 * phi1) - 2.0;
  return (4.0 - s * s * w * w) / (4.0 * std::sin(phi1));
}

/// lambda_3 at z = (1, -1, 1), lambda_1 = lambda_2 = 0, all k = 0.
inline double lambda3_closed_form(double phi1, double phi2) {
  require_open_angle(phi1, "lambda3_closed_form");
  require_open_angle(phi2, "lambda3_closed_form");
  const double c1 = std::cos(phi1), s1 = std::sin(phi1);
  const double c2 = std::cos(phi2), s2 = std::sin(phi2);
  const double t1 = c1 + c2 * s1;
  const double w1 = c2 * std::sin(2.0 * phi1) - 2.0;
  const double t2 = c2 + s2;
  const double w2 = s1 * s1 * std::sin(2.0 * phi2) - 2.0;
  const double t3 = c1 + s1 * s2;
  const double w3 = s2 * std::sin(2.0 * phi1) - 2.0;
  const double rhs = 8.0 - t1 * t1 * w1 * w1 - s1 * s1 * t2 * t2 * w2 * w2 - t3 * t3 * w3 * w3;
  return rhs / (8.0 * s1 * s2);
}

/// i-th of `resolution` interior grid angles in (0, pi), endpoints excluded.
inline double open_angle(std::size_t i, std::size_t resolution) {
  return std::numbers::pi * static_cast<double>(i + 1) / static_cast<double>(resolution + 1);
}

enum class SurfaceDim { Two, Three };

/// CSV `phi1,lambda2` (2-D, `resolution` rows) or `phi1,phi2,lambda3` (3-D, resolution^2 rows).
inline std::string condition_surface_csv(SurfaceDim which, std::size_t resolution) {
  if (resolution < 16) {
    throw std::invalid_argument("condition_surface_csv: resolution must be at least 16");
  }
  std::string out;
  if (which == SurfaceDim::Two) {
    out = "phi1,lambda2\n";
    for (std::size_t i = 0; i < resolution; ++i) {
      const double phi = open_angle(i, resolution);
      out += format_number(phi) + ',' + format_number(lambda2_closed_form(phi)) + '\n';
    }
  } else {
    out = "phi1,phi2,lambda3\n";
    for (std::size_t i = 0; i < resolution; ++i) {
      for (std::size_t j = 0; j < resolution; ++j) {
        const double p1 = open_angle(i, resolution);
        const double p2 = open_angle(j, resolution);
        out += format_number(p1) + ',' + format_number(p2) + ',' + format_number(lambda3_closed_form(p1, p2)) +
               '\n';
      }
    }
  }
  return out;
}

}  // namespace signcount

#endif  // SIGNCOUNT_OPTIMALITY_HPP
