#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "brute.hpp"
#include "signcount/transition.hpp"

using namespace signcount;

TEST(TransitionComponent, CaseTable) {
  EXPECT_EQ(transition_component(-1, 0, 0.3), 1.0);
  EXPECT_EQ(transition_component(0, -1, 0.3), 1.0);
  EXPECT_EQ(transition_component(0, 1, 0.3), -1.0);
  EXPECT_EQ(transition_component(1, 0, 0.3), -1.0);
  EXPECT_EQ(transition_component(1, 1, 0.3), 0.0);
  EXPECT_EQ(transition_component(-1, -1, 0.3), 0.0);
  EXPECT_EQ(transition_component(0, 0, 0.3), 0.0);
  // (1 - 1 - k)(-1 - 1) = 2k, and the mirrored flip is also +2k
  EXPECT_EQ(transition_component(1, -1, 0.5), 1.0);
  EXPECT_EQ(transition_component(-1, 1, 0.5), 1.0);
  EXPECT_EQ(transition_component(-1, 1, -0.75), -1.5);
}

TEST(TransitionMap, Examples) {
  for (std::size_t n : {1u, 2u, 5u}) {
    const auto l = transition_map(RealVector(n, 0.0), 0.37, Topology::Circular);
    for (double v : l.values) EXPECT_EQ(v, 0.0);
  }
  const auto a = transition_map(RealVector{-1, 1}, 0.5, Topology::Circular);
  ASSERT_EQ(a.values.size(), 2u);
  EXPECT_EQ(std::abs(a.values[0]), 1.0);
  EXPECT_EQ(std::abs(a.values[1]), 1.0);
  const auto b = transition_map(RealVector{1, 0}, 0.5, Topology::Linear);
  ASSERT_EQ(b.values.size(), 1u);
  EXPECT_EQ(std::abs(b.values[0]), 1.0);
}

TEST(SignChanges, Examples) {
  EXPECT_EQ(sign_changes(RealVector{-24, -30, 19, 14, 0}, Topology::Circular), 3u);
  EXPECT_EQ(sign_changes(RealVector{1, 1, 1, 1}, Topology::Circular), 0u);
  EXPECT_EQ(sign_changes(RealVector{1, -1, 1, -1}, Topology::Circular), 4u);
  EXPECT_EQ(sign_changes(RealVector{1, -1, 1, -1}, Topology::Linear), 3u);
  EXPECT_THROW(sign_changes(RealVector{1}, Topology::Circular), std::invalid_argument);
}

TEST(NormSqL, Examples) {
  const RealVector x{1, -1, 0};
  EXPECT_EQ(norm_sq_l(x, 0.5, Topology::Circular), 3.0);
  EXPECT_EQ(norm_sq_l(x, 0.25, Topology::Circular), 2.25);
  EXPECT_EQ(norm_sq_l(x, 1.0, Topology::Circular), 6.0);
  for (double k : {0.5, 0.25, 1.0}) EXPECT_EQ(norm_sq_l(x, k, Topology::Circular), brute::l_norm_sq(x, k, true));
}

TEST(Hadamard, Examples) {
  EXPECT_EQ(hadamard_norm_sq(RealVector{0, 0, 0}, 0.5), 0.0);
  EXPECT_EQ(hadamard_norm_sq(RealVector{1, -1, 0}, 0.5), 3.0);
  const RealVector x{-1, 1, 1, 0, -1, 0, 0};
  EXPECT_EQ(hadamard_norm_sq(x, 0.5), 5.0);
  EXPECT_EQ(brute::l_norm_sq(x, 0.5, true), 5.0);
}

TEST(TransitionProperties, ExhaustivePatterns) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto &x : brute::patterns(n)) {
      for (bool circ : {true, false}) {
        const Topology topo = circ ? Topology::Circular : Topology::Linear;
        const double t = static_cast<double>(brute::changes(x, circ));
        ASSERT_EQ(sign_changes(x, topo), brute::changes(x, circ));
        EXPECT_EQ(norm_sq_l(x, 0.5, topo), t);
        EXPECT_EQ(norm_sq_l(x, -0.5, topo), t);
        for (double k : {0.1, 0.3, 0.5, 0.9, 2.0}) {
          EXPECT_DOUBLE_EQ(norm_sq_l(x, k, topo), brute::l_norm_sq(x, k, circ));
          if (k <= 0.5) {
            EXPECT_LE(norm_sq_l(x, k, topo), t);
          }
          if (k >= 0.5) {
            EXPECT_GE(norm_sq_l(x, k, topo), t);
          }
          std::size_t nz = 0;
          for (double v : transition_map(x, k, topo).values) {
            nz += v != 0.0;
            const double mag = std::abs(v);
            EXPECT_TRUE(mag == 0.0 || mag == 1.0 || mag == 2.0 * k);
          }
          EXPECT_EQ(nz, brute::changes(x, circ));
        }
        RealVector neg = x;
        for (double &v : neg) v = -v;
        EXPECT_EQ(sign_changes(neg, topo), sign_changes(x, topo));
      }
    }
  }
}

TEST(TransitionProperties, RandomRealVectors) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> val(-100, 100);
  std::uniform_int_distribution<int> mask(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    RealVector x(2 + trial % 9);
    for (double &v : x) v = mask(rng) == 0 ? 0.0 : val(rng);
    const double k = val(rng) / 50.0;
    EXPECT_NEAR(hadamard_norm_sq(x, k), norm_sq_l(x, k, Topology::Circular), 1e-12);
    RealVector scaled = x;
    for (double &v : scaled) v *= 3.5;
    EXPECT_EQ(sign_changes(scaled, Topology::Linear), sign_changes(x, Topology::Linear));
  }
}

TEST(Smoothing, Examples) {
  const RealVector x{1, -1};
  EXPECT_DOUBLE_EQ(smoothed_sign_changes(x, SmoothingParams(1.0), Topology::Circular), 1.0);
  EXPECT_EQ(smoothed_sign_changes(RealVector{0, 0, 0}, SmoothingParams(0.1), Topology::Circular), 0.0);
  EXPECT_NEAR(smoothed_sign_changes(x, SmoothingParams(1e-9), Topology::Circular), 2.0, 1e-8);
  EXPECT_THROW(SmoothingParams(0.0), std::invalid_argument);
  EXPECT_THROW(SmoothingParams(-1.0), std::invalid_argument);
}

TEST(Smoothing, PluggableCounter) {
  const SmoothedCounter abs_ratio = [](std::span<const double> y, SmoothingParams eps) {
    double acc = 0.0;
    for (double v : y) acc += std::abs(v) / (std::abs(v) + eps.epsilon);
    return acc;
  };
  const RealVector x{1, 0, -1, -1};
  const double a = smoothed_sign_changes(x, SmoothingParams(1e-3), Topology::Circular, abs_ratio);
  EXPECT_LE(a, 3.0);
  EXPECT_NEAR(a, 3.0, 1e-2);
}

TEST(Hessian2, PaperPoints) {
  auto two_lambda = [](double x1, double x2, HessianBranch b) {
    const auto ev = eigenvalues(hessian_l2(RealVector{x1, x2}, b));
    return std::array<double, 2>{2 * ev[0], 2 * ev[1]};
  };
  auto a = two_lambda(0, 0, HessianBranch::Plus);
  EXPECT_NEAR(a[0], 1.0, 1e-12);
  EXPECT_NEAR(a[1], -1.0, 1e-12);
  a = two_lambda(-1, -1, HessianBranch::Plus);
  EXPECT_NEAR(a[0], 3.0, 1e-12);
  EXPECT_NEAR(a[1], -7.0, 1e-12);
  a = two_lambda(0, 1, HessianBranch::Plus);
  EXPECT_NEAR(a[0], 3.0 + 3.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(a[1], 3.0 - 3.0 * std::sqrt(2.0), 1e-12);
  EXPECT_THROW(hessian_l2(RealVector{1, 2, 3}, HessianBranch::Plus), std::invalid_argument);
}

TEST(Hessian2, ClosedFormMatchesCharacteristicPolynomial) {
  for (auto b : {HessianBranch::Plus, HessianBranch::Minus}) {
    for (double x1 = -1.5; x1 <= 1.5; x1 += 0.25) {
      for (double x2 = -1.5; x2 <= 1.5; x2 += 0.25) {
        const Hessian2 h = hessian_l2(RealVector{x1, x2}, b);
        const auto ev = eigenvalues(h);
        const auto [hi, lo] = brute::eig2(h.a11, h.a12, h.a22);
        EXPECT_NEAR(ev[0], hi, 1e-10);
        EXPECT_NEAR(ev[1], lo, 1e-10);
      }
    }
  }
}

TEST(Hessian2, NegationSymmetry) {
  // H(-x; -1/2) = -H(x; +1/2)
  for (const auto &x : brute::patterns(2)) {
    const Hessian2 p = hessian_l2(x, HessianBranch::Plus);
    const Hessian2 m = hessian_l2(RealVector{-x[0], -x[1]}, HessianBranch::Minus);
    EXPECT_EQ(p.a11, -m.a11);
    EXPECT_EQ(p.a12, -m.a12);
    EXPECT_EQ(p.a22, -m.a22);
  }
}

TEST(Hessian2, MatchesFiniteDifferences) {
  // Central second differences of (x1 + x2 + k x1 x2)(x1 x2 - 1); exact for this
  // polynomial up to rounding since its partial degree is 2 in each variable.
  for (auto b : {HessianBranch::Plus, HessianBranch::Minus}) {
    const double k = b == HessianBranch::Plus ? 0.5 : -0.5;
    auto f = [k](double a, double c) { return (a + c + k * a * c) * (a * c - 1); };
    const double h = 1e-3;
    for (double x1 = -1.0; x1 <= 1.0; x1 += 0.5) {
      for (double x2 = -1.0; x2 <= 1.0; x2 += 0.5) {
        const Hessian2 m = hessian_l2(RealVector{x1, x2}, b);
        const double f11 = (f(x1 + h, x2) - 2 * f(x1, x2) + f(x1 - h, x2)) / (h * h);
        const double f22 = (f(x1, x2 + h) - 2 * f(x1, x2) + f(x1, x2 - h)) / (h * h);
        const double f12 =
            (f(x1 + h, x2 + h) - f(x1 + h, x2 - h) - f(x1 - h, x2 + h) + f(x1 - h, x2 - h)) / (4 * h * h);
        EXPECT_NEAR(m.a11, f11, 1e-6);
        EXPECT_NEAR(m.a22, f22, 1e-6);
        EXPECT_NEAR(m.a12, f12, 1e-6);
      }
    }
  }
}
