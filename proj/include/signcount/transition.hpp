#ifndef SIGNCOUNT_TRANSITION_HPP
#define SIGNCOUNT_TRANSITION_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "signcount/sign.hpp"

namespace signcount {

/// Adjacency convention for consecutive components.
enum class Topology { Circular, Linear };

inline std::string_view to_string(Topology topo) {
  return topo == Topology::Circular ? "circular" : "linear";
}

inline Topology parse_topology(std::string_view name) {
  if (name == "circular") return Topology::Circular;
  if (name == "linear") return Topology::Linear;
  throw std::invalid_argument("unknown topology: " + std::string(name));
}

/// Adjacent index pairs (0-based). Circular wraps n-1 -> 0; Linear stops at n-2.
inline std::vector<std::pair<std::size_t, std::size_t>> adjacent_pairs(std::size_t n, Topology topo) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (n == 0) return pairs;
  const std::size_t count = topo == Topology::Circular ? n : n - 1;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pairs.emplace_back(i, (i + 1) % n);
  return pairs;
}

/// l_i = (a + b + k*a*b)(a*b - 1) for adjacent signs a, b.
inline double transition_component(int s_a, int s_b, double k) {
  if (s_a == s_b) return 0.0;  // the formula gives -0 for (0,0) and (-1,-1)
  const int prod = s_a * s_b;
  return (s_a + s_b + k * prod) * (prod - 1);
}

/// The image l(x; k) of the transition map.
struct TransitionVector {
  std::vector<double> values;
  double k = 0.0;
};

inline TransitionVector transition_map(const SignVector &s, double k, Topology topo) {
  TransitionVector out{{}, k};
  for (auto [i, j] : adjacent_pairs(s.size(), topo)) {
    out.values.push_back(transition_component(s[i], s[j], k));
  }
  return out;
}

inline TransitionVector transition_map(std::span<const double> x, double k, Topology topo) {
  return transition_map(SignVector::of(x), k, topo);
}

/// Adjacent-pair census of a sign pattern.
///   weak: exactly one of the two signs is zero
///   flips: signs +1/-1 or -1/+1
struct TransitionCounts {
  std::size_t weak = 0;
  std::size_t flips = 0;

  std::size_t changes() const noexcept { return weak + flips; }
  friend bool operator==(const TransitionCounts &, const TransitionCounts &) = default;
};

inline TransitionCounts transition_counts(const SignVector &s, Topology topo) {
  TransitionCounts counts;
  for (auto [i, j] : adjacent_pairs(s.size(), topo)) {
    const int prod = s[i] * s[j];
    if (prod < 0) {
      ++counts.flips;
    } else if (prod == 0 && s[i] != s[j]) {
      ++counts.weak;
    }
  }
  return counts;
}

/// t(x): number of adjacent pairs whose signs differ.
inline std::size_t sign_changes(const SignVector &s, Topology topo) {
  if (s.size() < 2) {
    throw std::invalid_argument("sign_changes: dimension must be at least 2");
  }
  return transition_counts(s, topo).changes();
}

inline std::size_t sign_changes(std::span<const double> x, Topology topo) {
  return sign_changes(SignVector::of(x), topo);
}

/// ||l(x;k)||^2 = weak + 4k^2 * flips.
inline double norm_sq_l(const SignVector &s, double k, Topology topo) {
  const TransitionCounts counts = transition_counts(s, topo);
  return static_cast<double>(counts.weak) + 4.0 * k * k * static_cast<double>(counts.flips);
}

inline double norm_sq_l(std::span<const double> x, double k, Topology topo) {
  return norm_sq_l(SignVector::of(x), k, topo);
}

/// The same quantity written with Hadamard products and the circular shift Z:
/// < ((I+Z)s + k(s o Zs))^2, ((s o Zs) - e)^2 >, s = sign(x).
inline double hadamard_norm_sq(std::span<const double> x, double k) {
  const SignVector s = SignVector::of(x);
  const std::size_t n = s.size();
  std::vector<double> shifted(n), prod(n), left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = s[(i + 1) % n];
  for (std::size_t i = 0; i < n; ++i) prod[i] = s[i] * shifted[i];
  for (std::size_t i = 0; i < n; ++i) {
    left[i] = s[i] + shifted[i] + k * prod[i];
    right[i] = prod[i] - 1.0;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += (left[i] * left[i]) * (right[i] * right[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Smoothed minorant

struct SmoothingParams {
  double epsilon;

  explicit SmoothingParams(double eps) : epsilon(eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw std::invalid_argument("SmoothingParams: epsilon must be positive");
    }
  }
};

/// Smoothed count of nonzeros; any pointwise minorant of the 0/1 indicator that
/// increases to it as epsilon -> 0 fits here.
using SmoothedCounter = std::function<double(std::span<const double>, SmoothingParams)>;

/// c_eps(y) = sum y_i^2 / (y_i^2 + eps).
inline double smoothed_count(std::span<const double> y, SmoothingParams eps) {
  double acc = 0.0;
  for (double v : y) {
    const double sq = v * v;
    acc += sq / (sq + eps.epsilon);
  }
  return acc;
}

/// t_eps(x) = c_eps(l(x; 1/2)), a minorant of t converging to it as eps -> 0.
inline double smoothed_sign_changes(std::span<const double> x, SmoothingParams eps, Topology topo,
                                    const SmoothedCounter &counter = smoothed_count) {
  const TransitionVector l = transition_map(x, 0.5, topo);
  return counter(l.values, eps);
}

// ---------------------------------------------------------------------------
// n = 2 curvature of l_1(x; +-1/2) = (x1 + x2 +- x1 x2 / 2)(x1 x2 - 1)

enum class HessianBranch { Plus, Minus };

struct Hessian2 {
  double a11 = 0.0;
  double a12 = 0.0;  // == a21
  double a22 = 0.0;
  HessianBranch branch = HessianBranch::Plus;
};

/// [[x2(2 +- x2), 2(-+1/4 + x1 + x2 +- x1 x2)], [., x1(2 +- x1)]], the exact
/// Hessian of l_1(x; +-1/2). H_minus(-x) = -H_plus(x).
inline Hessian2 hessian_l2(std::span<const double> x, HessianBranch branch) {
  if (x.size() != 2) {
    throw std::invalid_argument("hessian_l2: dimension must be 2");
  }
  const double pm = branch == HessianBranch::Plus ? 1.0 : -1.0;
  const double x1 = x[0];
  const double x2 = x[1];
  Hessian2 h;
  h.a11 = x2 * (2.0 + pm * x2);
  h.a22 = x1 * (2.0 + pm * x1);
  h.a12 = 2.0 * (-pm * 0.25 + x1 + x2 + pm * x1 * x2);
  h.branch = branch;
  return h;
}

/// Eigenvalues of a symmetric 2x2 matrix, larger first.
inline std::array<double, 2> eigenvalues(const Hessian2 &h) {
  const double mean = 0.5 * (h.a11 + h.a22);
  const double half_diff = 0.5 * (h.a11 - h.a22);
  const double radius = std::hypot(half_diff, h.a12);
  return {mean + radius, mean - radius};
}

}  // namespace signcount

#endif  // SIGNCOUNT_TRANSITION_HPP
