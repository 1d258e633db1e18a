#include <gtest/gtest.h>

#include <vector>

#include "brute.hpp"
#include "signcount/subgradient.hpp"

using namespace signcount;

TEST(GapParams, Constraint) {
  EXPECT_NO_THROW(GapParams(0.5, 0.5));
  EXPECT_NO_THROW(GapParams(-0.25, -2.0));
  EXPECT_THROW(GapParams(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(GapParams(0.6, 1.0), std::invalid_argument);
  EXPECT_THROW(GapParams(0.25, 0.4), std::invalid_argument);
}

TEST(CoupledSubgradient, Examples) {
  EXPECT_EQ(coupled_subgradient_value(RealVector{1, -1}, Topology::Circular), 2.0);
  EXPECT_EQ(coupled_subgradient_value(RealVector{0, 0, 0}, Topology::Circular), 0.0);
  EXPECT_EQ(coupled_subgradient_value(RealVector{-1, 1, 1, 0, -1, 0, 0}, Topology::Circular), 5.0);
}

TEST(FtGap, Examples) {
  const GapParams p(0.5, 1.0);
  EXPECT_EQ(ft_gap(RealVector{1, -1}, RealVector{0, 0}, p, Topology::Circular), -6.0);
  const RealVector x{1, 1}, d{0, -2};
  EXPECT_EQ(ft_gap(x, d, p, Topology::Circular), 2.0);
  EXPECT_EQ(double(sign_changes(add(x, d), Topology::Circular)) - double(sign_changes(x, Topology::Circular)), 2.0);
  EXPECT_EQ(ft_gap(RealVector{0, 0, 0}, RealVector{0, 0, 0}, GapParams(0.1, 3.0), Topology::Linear), 0.0);
  EXPECT_THROW(ft_gap(RealVector{1, 2}, RealVector{1}, p, Topology::Circular), std::invalid_argument);
}

TEST(QhatGap, Examples) {
  EXPECT_EQ(qhat_gap(RealVector{1, -1}, GapParams(0.5, 1.0), Topology::Circular), -6.0);
  EXPECT_EQ(qhat_gap(RealVector{1, 1}, GapParams(0.3, 0.9), Topology::Circular), 0.0);
  EXPECT_EQ(qhat_gap(RealVector{1, -1, 0}, GapParams(0.25, 1.0), Topology::Circular), -3.75);
}

TEST(KProfile, Examples) {
  const auto a = k_profile(RealVector{1, -1}, RealVector{0, 0}, 1.0, Topology::Circular);
  EXPECT_EQ(a.constant(), 0.0);
  EXPECT_EQ(a.quad_coeff(), 8.0);
  EXPECT_EQ(a.offset(), -8.0);

  const auto b = k_profile(RealVector{1, 1}, RealVector{0, 0}, 1.0, Topology::Circular);
  for (double k : {0.1, 0.3, 0.5}) EXPECT_EQ(b(k), 0.0);

  // sign(x + d) = (-1,1,1,0,-1,-1,0): 4 weak, 1 flip. x itself: 4 weak, 1 flip,
  // so ||l(x;1)||^2 = 4 + 4 = 8.
  const RealVector x{-1, 1, 1, 0, -1, 0, 0};
  const RealVector d{0, 74, 75, 0, -40, -50, 0};
  const auto c = k_profile(x, d, 1.0, Topology::Circular);
  EXPECT_EQ(c.constant(), 4.0);
  EXPECT_EQ(c.quad_coeff(), 4.0);
  EXPECT_EQ(c.offset(), -8.0);
  EXPECT_EQ(brute::l_norm_sq(x, 1.0, true), 8.0);
  for (double k : {0.05, 0.2, 0.5}) {
    EXPECT_DOUBLE_EQ(c(k), ft_gap(x, d, GapParams(k, 1.0), Topology::Circular));
  }
  EXPECT_THROW(k_profile(x, d, 0.4, Topology::Circular), std::invalid_argument);
}

TEST(KProfile, Sampling) {
  const auto prof = k_profile(RealVector{1, -1}, RealVector{0, 0}, 1.0, Topology::Circular);
  const auto rows = sample_profile(prof);
  ASSERT_EQ(rows.size(), 100u);
  EXPECT_DOUBLE_EQ(rows.front().k, 0.005);
  EXPECT_DOUBLE_EQ(rows.back().k, 0.5);
  EXPECT_DOUBLE_EQ(rows.back().gap, -6.0);
  EXPECT_THROW(sample_profile(prof, 0.0), std::invalid_argument);
}

// Inequality over every pattern pair (s, s') realized as x = s, d = s' - s.
TEST(FtInequality, ExhaustiveSmallN) {
  const std::vector<GapParams> params{{0.1, 0.5}, {0.25, 0.75}, {0.5, 1.0}, {0.5, 2.0}, {-0.3, -0.6}};
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto pats = brute::patterns(n);
    for (bool circ : {true, false}) {
      const Topology topo = circ ? Topology::Circular : Topology::Linear;
      for (const auto &s : pats) {
        for (const auto &s2 : pats) {
          RealVector d(n);
          for (std::size_t i = 0; i < n; ++i) d[i] = s2[i] - s[i];
          const double dt = double(brute::changes(s2, circ)) - double(brute::changes(s, circ));
          for (const auto &p : params) EXPECT_GE(dt, ft_gap(s, d, p, topo));
          EXPECT_EQ(dt, coupled_subgradient_value(s2, topo) - coupled_subgradient_value(s, topo));
        }
      }
    }
  }
}

TEST(FtInequality, ConvexBlendOfGaps) {
  const GapParams g1(0.1, 2.0), g2(0.5, 0.5);
  for (const auto &s : brute::patterns(4)) {
    for (const auto &s2 : brute::patterns(4)) {
      RealVector d(4);
      for (std::size_t i = 0; i < 4; ++i) d[i] = s2[i] - s[i];
      const double dt = double(brute::changes(s2, true)) - double(brute::changes(s, true));
      for (double alpha : {0.0, 0.3, 0.7, 1.0}) {
        const double blend = alpha * ft_gap(s, d, g1, Topology::Circular) +
                             (1 - alpha) * ft_gap(s, d, g2, Topology::Circular);
        EXPECT_GE(dt, blend);
      }
    }
  }
}

TEST(FtGap, MonotoneInParameters) {
  const RealVector x{1, -1, 0, 1};
  const RealVector zero(4, 0.0);
  double prev = ft_gap(x, zero, GapParams(0.3, 0.5), Topology::Circular);
  for (double kx : {0.6, 0.9, 1.5, 3.0}) {
    const double g = ft_gap(x, zero, GapParams(0.3, kx), Topology::Circular);
    EXPECT_LT(g, prev);
    prev = g;
  }
  prev = ft_gap(x, zero, GapParams(0.05, 1.0), Topology::Circular);
  for (double ky : {0.1, 0.2, 0.5}) {
    const double g = ft_gap(x, zero, GapParams(ky, 1.0), Topology::Circular);
    EXPECT_GT(g, prev);
    prev = g;
  }
}

TEST(QhatGap, MatchesGapAtZeroDirection) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto &x : brute::patterns(n)) {
      const RealVector zero(n, 0.0);
      for (const auto &p : {GapParams(0.25, 1.0), GapParams(0.5, 0.75), GapParams(-0.5, 2.0)}) {
        const double q = qhat_gap(x, p, Topology::Circular);
        EXPECT_EQ(q, ft_gap(x, zero, p, Topology::Circular));
        EXPECT_LE(q, 0.0);
      }
    }
  }
}
