#ifndef SIGNCOUNT_SIGN_HPP
#define SIGNCOUNT_SIGN_HPP

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace signcount {

using RealVector = std::vector<double>;

/// Throws std::invalid_argument when an entry is NaN or infinite.
inline void require_finite(std::span<const double> x, const char *what = "vector") {
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

/// Signum. A positive `tol` treats |alpha| <= tol as zero; the default is exact.
template <std::floating_point T>
int sign(T alpha, T tol = T(0)) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("sign: non-finite input");
  }
  if (alpha > tol) return 1;
  if (alpha < -tol) return -1;
  return 0;
}

template <std::integral T>
int sign(T alpha) {
  return (alpha > 0) - (alpha < 0);
}

/// A vector with entries in {-1, 0, +1}.
class SignVector {
 public:
  SignVector() = default;

  explicit SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int s : entries_) {
      if (s < -1 || s > 1) {
        throw std::invalid_argument("SignVector: entry outside {-1,0,1}");
      }
    }
  }

  SignVector(std::initializer_list<int> entries) : SignVector(std::vector<int>(entries)) {}

  /// Componentwise sign of a real vector.
  static SignVector of(std::span<const double> x) {
    std::vector<int> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = sign(x[i]);
    return SignVector(std::move(s), Unchecked{});
  }

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int> &entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  SignVector operator-() const {
    std::vector<int> neg(entries_.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -entries_[i];
    return SignVector(std::move(neg), Unchecked{});
  }

  RealVector as_real() const { return RealVector(entries_.begin(), entries_.end()); }

  friend bool operator==(const SignVector &, const SignVector &) = default;
  friend auto operator<=>(const SignVector &, const SignVector &) = default;

 private:
  struct Unchecked {};
  SignVector(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}

  std::vector<int> entries_;
};

/// Partition of {0..n-1} by whether the component is zero. Indices are 0-based.
struct IndexSets {
  std::vector<std::size_t> parallel;    // zero components
  std::vector<std::size_t> orthogonal;  // nonzero components
};

/// Number of nonzero components, c(x).
inline std::size_t count_nonzero(std::span<const double> x) {
  std::size_t c = 0;
  for (double v : x) c += (sign(v) != 0);
  return c;
}

inline std::size_t count_nonzero(const SignVector &s) {
  std::size_t c = 0;
  for (int v : s) c += (v != 0);
  return c;
}

/// Squared Euclidean norm of sign(x); equals count_nonzero(x).
inline std::size_t sign_norm_sq(std::span<const double> x) {
  std::size_t acc = 0;
  for (double v : x) {
    const int s = sign(v);
    acc += static_cast<std::size_t>(s * s);
  }
  return acc;
}

inline IndexSets index_sets(std::span<const double> x) {
  IndexSets sets;
  for (std::size_t i = 0; i < x.size(); ++i) {
    (sign(x[i]) == 0 ? sets.parallel : sets.orthogonal).push_back(i);
  }
  return sets;
}

/// Membership of xstar in the Frechet/proximal/Clarke subdifferential of c at x:
/// xstar must vanish on every nonzero coordinate of x.
inline bool is_subgradient_of_c(std::span<const double> x, std::span<const double> xstar) {
  if (x.size() != xstar.size()) {
    throw std::invalid_argument("is_subgradient_of_c: dimension mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sign(x[i]) != 0 && xstar[i] != 0.0) return false;
  }
  return true;
}

/// c(x) - <e, |x|> / ||x||, which is nonnegative for every x != 0.
inline double sign_minorant_gap(std::span<const double> x) {
  require_finite(x, "sign_minorant_gap");
  double norm_sq = 0.0;
  double abs_sum = 0.0;
  for (double v : x) {
    norm_sq += v * v;
    abs_sum += std::abs(v);
  }
  if (norm_sq == 0.0) {
    throw std::invalid_argument("sign_minorant_gap: zero vector");
  }
  return static_cast<double>(count_nonzero(x)) - abs_sum / std::sqrt(norm_sq);
}

struct ProbeReport {
  double min_quotient = std::numeric_limits<double>::infinity();
  RealVector argmin;  // sample point attaining min_quotient
  std::size_t evaluated = 0;
};

namespace detail {

// Radical inverse in the given prime base (Halton sequence component).
inline double radical_inverse(std::uint64_t index, std::uint32_t base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

inline std::uint32_t nth_prime(std::size_t n) {
  std::uint32_t candidate = 2;
  std::size_t found = 0;
  for (;; ++candidate) {
    bool prime = true;
    for (std::uint32_t p = 2; p * p <= candidate; ++p) {
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime && found++ == n) return candidate;
  }
}

}  // namespace detail

/// Minimum of (c(y) - c(x) - <xstar, y - x>) / ||y - x|| over deterministic
/// probes y in the ball B(x, radius): the 2n axis points x +- radius*e_i, then
/// `samples` Halton points (offset by `seed`) mapped into the cube of half-width
/// radius and kept when inside the ball.
inline ProbeReport frechet_inequality_probe(std::span<const double> x, std::span<const double> xstar,
                                            std::size_t samples, double radius,
                                            std::uint64_t seed = 1) {
  if (x.size() != xstar.size()) {
    throw std::invalid_argument("frechet_inequality_probe: dimension mismatch");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("frechet_inequality_probe: radius must be positive");
  }
  require_finite(x, "frechet_inequality_probe");
  const std::size_t n = x.size();
  const double cx = static_cast<double>(count_nonzero(x));
  ProbeReport report;
  RealVector y(n);

  auto visit = [&](const RealVector &point) {
    double dist_sq = 0.0;
    double inner = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double step = point[i] - x[i];
      dist_sq += step * step;
      inner += xstar[i] * step;
    }
    if (dist_sq == 0.0) return;
    const double q = (static_cast<double>(count_nonzero(point)) - cx - inner) / std::sqrt(dist_sq);
    ++report.evaluated;
    if (q < report.min_quotient) {
      report.min_quotient = q;
      report.argmin = point;
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (double dir : {-1.0, 1.0}) {
      y.assign(x.begin(), x.end());
      y[i] += dir * radius;
      visit(y);
    }
  }

  std::vector<std::uint32_t> bases(n);
  for (std::size_t i = 0; i < n; ++i) bases[i] = detail::nth_prime(i);
  for (std::size_t s = 0; s < samples; ++s) {
    double dist_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = 2.0 * detail::radical_inverse(seed + s, bases[i]) - 1.0;
      y[i] = x[i] + radius * u;
      dist_sq += radius * radius * u * u;
    }
    if (dist_sq <= radius * radius) visit(y);
  }
  return report;
}

}  // namespace signcount

#endif  // SIGNCOUNT_SIGN_HPP
