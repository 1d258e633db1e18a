#ifndef SIGNCOUNT_SUBGRADIENT_HPP
#define SIGNCOUNT_SUBGRADIENT_HPP

#include <cmath>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "signcount/sign.hpp"
#include "signcount/transition.hpp"

namespace signcount {

/// Parameters of the decoupled gap, constrained by 0 < |k_y| <= 1/2 <= |k_x|.
struct GapParams {
  double k_y;
  double k_x;

  GapParams(double ky, double kx) : k_y(ky), k_x(kx) {
    if (!std::isfinite(ky) || !std::isfinite(kx) || !(std::abs(ky) > 0.0) ||
        !(std::abs(ky) <= 0.5) || !(std::abs(kx) >= 0.5)) {
      throw std::invalid_argument("GapParams: require 0 < |k_y| <= 1/2 <= |k_x|");
    }
  }
};

/// The neutral (coupled) subgradient ||l(y; 1/2)||^2, which coincides with t(y).
inline double coupled_subgradient_value(std::span<const double> y, Topology topo) {
  return norm_sq_l(y, 0.5, topo);
}

inline void require_same_size(std::span<const double> a, std::span<const double> b, const char *who) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  }
}

inline RealVector add(std::span<const double> x, std::span<const double> d) {
  RealVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + d[i];
  return out;
}

/// q(x,d) - q(x,0) = ||l(x+d; k_y)||^2 - ||l(x; k_x)||^2.
/// Satisfies t(x+d) - t(x) >= ft_gap(x, d) for every d.
inline double ft_gap(std::span<const double> x, std::span<const double> d, GapParams p, Topology topo) {
  require_same_size(x, d, "ft_gap");
  const RealVector moved = add(x, d);
  return norm_sq_l(moved, p.k_y, topo) - norm_sq_l(x, p.k_x, topo);
}

inline double ft_gap(const SignVector &from, const SignVector &to, GapParams p, Topology topo) {
  return norm_sq_l(to, p.k_y, topo) - norm_sq_l(from, p.k_x, topo);
}

/// Closed form of ft_gap at d = 0:
///   (k_y - k_x) sum (s_i s_j - 1)^2 ((k_y + k_x) s_i^2 s_j^2 + 2 s_i s_j (s_i + s_j)).
/// Each summand is 4(k_y^2 - k_x^2) on a flip and 0 elsewhere.
inline double qhat_gap(std::span<const double> x, GapParams p, Topology topo) {
  const SignVector s = SignVector::of(x);
  double acc = 0.0;
  for (auto [i, j] : adjacent_pairs(s.size(), topo)) {
    const double a = s[i];
    const double b = s[j];
    const double ab = a * b;
    acc += (ab - 1.0) * (ab - 1.0) * ((p.k_y + p.k_x) * ab * ab + 2.0 * ab * (a + b));
  }
  return (p.k_y - p.k_x) * acc;
}

/// k -> ft_gap(x, d, (k, k_x)) kept as exact counts:
///   gap(k) = weak(x+d) + 4 flips(x+d) k^2 - (weak(x) + 4 k_x^2 flips(x)).
struct KProfile {
  std::size_t weak = 0;         // constant term
  std::size_t flips = 0;        // quad_coeff / 4
  std::size_t offset_weak = 0;  // weak transitions of x
  std::size_t offset_flips = 0; // flips of x
  double k_x = 1.0;

  double constant() const noexcept { return static_cast<double>(weak); }
  double quad_coeff() const noexcept { return 4.0 * static_cast<double>(flips); }
  double offset() const noexcept {
    return -(static_cast<double>(offset_weak) + 4.0 * k_x * k_x * static_cast<double>(offset_flips));
  }
  double operator()(double k) const noexcept { return constant() + quad_coeff() * k * k + offset(); }
};

inline KProfile k_profile(std::span<const double> x, std::span<const double> d, double k_x, Topology topo) {
  require_same_size(x, d, "k_profile");
  if (!(std::abs(k_x) >= 0.5) || !std::isfinite(k_x)) {
    throw std::invalid_argument("k_profile: require |k_x| >= 1/2");
  }
  const RealVector moved = add(x, d);
  const TransitionCounts target = transition_counts(SignVector::of(moved), topo);
  const TransitionCounts base = transition_counts(SignVector::of(x), topo);
  return KProfile{target.weak, target.flips, base.weak, base.flips, k_x};
}

/// Sampled profile at k = step, 2 step, ... up to 1/2.
struct ProfileSample {
  double k;
  double gap;
};

inline std::vector<ProfileSample> sample_profile(const KProfile &profile, double step = 1.0 / 200.0) {
  if (!(step > 0.0) || step > 0.5) {
    throw std::invalid_argument("sample_profile: step must lie in (0, 1/2]");
  }
  std::vector<ProfileSample> rows;
  const auto count = static_cast<std::size_t>(std::floor(0.5 / step + 1e-9));
  rows.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const double k = step * static_cast<double>(i);
    rows.push_back({k, profile(k)});
  }
  return rows;
}

}  // namespace signcount

#endif  // SIGNCOUNT_SUBGRADIENT_HPP
