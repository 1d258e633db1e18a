#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "signcount/optimality.hpp"

using namespace signcount;

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t count_lines(const std::string &text) {
  std::size_t n = 0;
  for (char ch : text) n += ch == '\n';
  return n;
}

}  // namespace

TEST(OneDProblem, LevelAndObjective) {
  const OneDProblem p;
  EXPECT_NEAR(p.level(), 22.687, 1e-3);
  EXPECT_EQ(OneDProblem::objective(0.0), 0.0);
  EXPECT_NEAR(OneDProblem::objective(kPi), kPi * kPi, 1e-12);
  EXPECT_EQ(p.lambda1(p.c1), 0.0);
  EXPECT_NEAR(p.lambda1(p.c1 + 1.0), std::exp(1.0), 1e-12);
}

TEST(OneDProblem, ResidualsVanishAtCandidate) {
  const OneDProblem p;
  const auto r = p.residuals(p.c1);
  EXPECT_NEAR(r[0], 0.0, 1e-12);
  EXPECT_NEAR(r[1], 0.0, 1e-12);
  EXPECT_NEAR(r[2], 0.0, 1e-12);
}

TEST(OneDProblem, ResidualsMatchDirectFormulas) {
  const OneDProblem p{-4.8, 0.5};
  for (double x = -2 * kPi; x <= 0.0; x += 0.37) {
    const double f = x * x * std::cos(2 * x);
    const double u = std::abs(x + 4.8);
    const double m = u * std::exp(u) * (x + 2 * kPi);
    const double k = -(4.8 * 4.8) * std::cos(9.6);
    const auto r = p.residuals(x);
    EXPECT_NEAR(r[0], -m + f + k, 1e-9);
    EXPECT_NEAR(r[1], -m - f - k + 0.5 * u, 1e-9);
    EXPECT_NEAR(r[2], 2 * f + 2 * k - 0.5 * u, 1e-9);
  }
}

TEST(OneDProblem, GlobalMinimizer) {
  const double xm = oned_global_min(10000);
  EXPECT_NEAR(xm, -4.8, 0.05);
  // First-order condition: 2x cos 2x - 2x^2 sin 2x = 0.
  EXPECT_NEAR(2 * xm * std::cos(2 * xm) - 2 * xm * xm * std::sin(2 * xm), 0.0, 1e-4);
  EXPECT_LE(OneDProblem::objective(xm), -22.2);
  EXPECT_DOUBLE_EQ(OneDProblem::objective(-xm), OneDProblem::objective(xm));
  EXPECT_THROW(oned_global_min(100), std::invalid_argument);
}

TEST(OneDConditionCheck, NonMinimizerFailsFirstInequality) {
  const auto rep = oned_condition_check(OneDProblem{-1.0, 1.0}, 10000, 1e-6);
  EXPECT_FALSE(rep.pass);
  EXPECT_GT(rep.violations[0], 0u);
}

TEST(OneDConditionCheck, SigmaMonotonicity) {
  const OneDProblem lo{-4.8, 0.5}, hi{-4.8, 2.0};
  for (double x = -2 * kPi; x <= 0.0; x += 0.1) {
    EXPECT_GE(lo.residuals(x)[2], hi.residuals(x)[2]);
    EXPECT_LE(lo.residuals(x)[1], hi.residuals(x)[1]);
  }
}

TEST(OneDConditionCheck, ReportShape) {
  const OneDProblem p;
  const auto rep = oned_condition_check(p, 10000, 1e-6);
  EXPECT_EQ(rep.grid_points, 10000u);
  EXPECT_DOUBLE_EQ(rep.lo, -2 * kPi);
  EXPECT_DOUBLE_EQ(rep.hi, 0.0);
  bool all_ok = true;
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(p.residuals(rep.argmin[j])[j], rep.min_residual[j], 1e-12);
    all_ok = all_ok && rep.violations[j] == 0;
  }
  EXPECT_EQ(rep.pass, all_ok);
  EXPECT_THROW(oned_condition_check(p, 10, 1e-6), std::invalid_argument);
}

TEST(OneDConditionCheck, Csv) {
  const std::string csv = oned_csv(OneDProblem{}, 101);
  EXPECT_EQ(csv.rfind("x,f,ineq_a,ineq_b,ineq_c\n", 0), 0u);
  EXPECT_EQ(count_lines(csv), 102u);
}

TEST(LagrangianResidual, ZeroDirectionLeavesT) {
  // At d = 0 every pair term is (0)^2 (0 - 1)^2 = 0, leaving t(z).
  const SignVector z{1, -1, 0};
  const std::vector<double> lambda{1, 2, 3}, k{0.0}, d{0, 0, 0};
  EXPECT_EQ(lagrangian_residual(z, lambda, k, d, Topology::Circular), 3.0);
  EXPECT_EQ(lagrangian_residual(z, lambda, k, d, Topology::Linear), 2.0);
  EXPECT_EQ(lagrangian_residual(SignVector{1, 1, 1}, lambda, k, d, Topology::Circular), 0.0);
  EXPECT_THROW(lagrangian_residual(z, lambda, std::vector<double>{0, 0}, d, Topology::Circular),
               std::invalid_argument);
  EXPECT_THROW(lagrangian_residual(z, std::vector<double>{1}, k, d, Topology::Circular), std::invalid_argument);
}

TEST(LagrangianResidual, HandValue) {
  // z = (1,-1), d = (1,0), lambda = (2,0), k = 0.5 circular:
  // 2*1*(-2) + 2 - 2 * (1)^2 (0 - 1)^2 = -4.
  const SignVector z{1, -1};
  EXPECT_EQ(lagrangian_residual(z, std::vector<double>{2, 0}, std::vector<double>{0.5}, std::vector<double>{1, 0},
                                Topology::Circular),
            -4.0);
  // Per-pair k: (1 + 1 + 0.5)^2 (1 - 1)^2 = 0 and (1 + 1 + 2)^2 * 0 = 0 at d = (1, 1).
  EXPECT_EQ(lagrangian_residual(z, std::vector<double>{0, 0}, std::vector<double>{0.5, 2.0},
                                std::vector<double>{1, 1}, Topology::Circular),
            2.0);
}

TEST(ClosedForms, TwoDimensionalZeroesResidual) {
  const SignVector z{-1, 1};
  for (std::size_t i = 0; i < 360; ++i) {
    const double phi = open_angle(i, 360);
    const double l2 = lambda2_closed_form(phi);
    const RealVector d = polar_direction(phi);
    EXPECT_NEAR(lagrangian_residual(z, std::vector<double>{0, l2}, std::vector<double>{0.0}, d, Topology::Circular),
                0.0, 1e-10);
  }
  EXPECT_NEAR(lambda2_closed_form(kPi / 2), 0.0, 1e-12);  // 4 - 1 * 4 = 0
  EXPECT_NEAR(lambda2_closed_form(kPi / 4), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_THROW(lambda2_closed_form(0.0), std::invalid_argument);
  EXPECT_THROW(lambda2_closed_form(kPi), std::invalid_argument);
}

TEST(ClosedForms, ThreeDimensionalZeroesResidual) {
  const SignVector z{1, -1, 1};
  for (std::size_t i = 0; i < 64; ++i) {
    for (std::size_t j = 0; j < 64; ++j) {
      const double p1 = open_angle(i, 64), p2 = open_angle(j, 64);
      const double l3 = lambda3_closed_form(p1, p2);
      const RealVector d = spherical_direction(p1, p2);
      EXPECT_NEAR(lagrangian_residual(z, std::vector<double>{0, 0, l3}, std::vector<double>{0.0}, d,
                                      Topology::Circular),
                  0.0, 1e-10);
    }
  }
  EXPECT_THROW(lambda3_closed_form(1.0, -0.1), std::invalid_argument);
}

TEST(ClosedForms, DirectionsAreUnit) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  for (int i = 0; i < 200; ++i) {
    const RealVector a = polar_direction(ang(rng));
    const RealVector b = spherical_direction(ang(rng), ang(rng));
    EXPECT_NEAR(std::hypot(a[0], a[1]), 1.0, 1e-14);
    EXPECT_NEAR(std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]), 1.0, 1e-14);
  }
}

TEST(SurfaceCsv, Shapes) {
  const std::string two = condition_surface_csv(SurfaceDim::Two, 360);
  EXPECT_EQ(two.rfind("phi1,lambda2\n", 0), 0u);
  EXPECT_EQ(count_lines(two), 361u);
  const std::string three = condition_surface_csv(SurfaceDim::Three, 16);
  EXPECT_EQ(three.rfind("phi1,phi2,lambda3\n", 0), 0u);
  EXPECT_EQ(count_lines(three), 257u);
  EXPECT_THROW(condition_surface_csv(SurfaceDim::Two, 8), std::invalid_argument);
  EXPECT_EQ(condition_surface_csv(SurfaceDim::Three, 20), condition_surface_csv(SurfaceDim::Three, 20));
}

TEST(SurfaceCsv, OpenAngles) {
  EXPECT_GT(open_angle(0, 360), 0.0);
  EXPECT_LT(open_angle(359, 360), kPi);
  EXPECT_DOUBLE_EQ(open_angle(179, 359), kPi / 2);
}
