#include "qf/finsler.hpp"
#include "qf/paths.hpp"
#include "qf/quotient.hpp"
#include "qf/scenarios.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qf;

namespace {

Eigen::VectorXd v2(double x, double y) { return Eigen::Vector2d(x, y); }

}  // namespace

TEST(PathLength, ConstantPathIsZero) {
  const auto S = build_hyperbolic_two_points();
  QuotientPath p{{{v2(0.3, 1.2)}, {v2(0.3, 1.2)}}, {0.0, 1.0}};
  for (double s : path_length(S, p, 4).sums) EXPECT_EQ(s, 0.0);
}

TEST(PathLength, EuclideanOrbitHasLengthOne) {
  const auto S = build_rn_translation(2, {v2(0, 0)});
  const auto seq = path_length(S, orbit_path(S, v2(1, 0), 0.0, 1.0), 5);
  ASSERT_EQ(seq.sums.size(), 6u);
  for (double s : seq.sums) EXPECT_NEAR(s, 1.0, 1e-15);
}

TEST(PathLength, HyperbolicOrbitConvergesToClosedForm) {
  // F(v_{pi/2}) = sqrt(a^2 + b^2) / b = sqrt 2 at a = b = 1; the orbit has
  // constant speed, so its length over [0, 1] is sqrt 2.
  const auto S = build_hyperbolic_two_points(1.0, 1.0);
  const auto seq = path_length(S, orbit_path(S, v2(0, 1), 0.0, 1.0), 10);
  EXPECT_NEAR(seq.value, std::numbers::sqrt2, 1e-6);
  for (std::size_t k = 1; k < seq.sums.size(); ++k) EXPECT_GE(seq.sums[k], seq.sums[k - 1] - 1e-15);
}

TEST(PathLength, RejectsMalformedPaths) {
  const auto S = build_rn_translation(2, {});
  EXPECT_THROW(path_length(S, QuotientPath{{{v2(0, 0)}}, {0.0}}, 1), std::invalid_argument);
  EXPECT_THROW(path_length(S, QuotientPath{{{v2(0, 0)}, {v2(1, 0)}}, {1.0, 0.0}}, 1), std::invalid_argument);
  EXPECT_THROW(orbit_path(S, v2(1, 0), 1.0, 1.0), std::invalid_argument);
}

TEST(OrbitHomogeneity, UnitIntervalIsZero) {
  const auto S = build_hyperbolic_two_points();
  EXPECT_EQ(orbit_length_homogeneity(S, v2(1, 0), 0.0, 1.0, 4), 0.0);
}

TEST(OrbitHomogeneity, HyperbolicAndTorus) {
  const auto H = build_hyperbolic_two_points();
  EXPECT_LE(orbit_length_homogeneity(H, v2(1, 0), 0.0, 2.0, 8), 1e-3);
  const auto T = build_torus_minus_square(32);
  EXPECT_LE(orbit_length_homogeneity(T, v2(0.05, 0.03), 1.0, 3.0, 6), 1e-3);
}

TEST(IntrinsicDistance, EqualEndpointsGiveZero) {
  const auto S = build_hyperbolic_two_points();
  EXPECT_EQ(intrinsic_distance(S, {v2(0.4, 2.0)}, {v2(0.4, 2.0)}, 3, 1000).value, 0.0);
}

TEST(IntrinsicDistance, StraightSegmentIsOptimalInEuclideanSpace) {
  const auto S = build_rn_translation(2, {v2(0, 0)});
  const auto r = intrinsic_distance(S, {v2(0, 0)}, {v2(1.5, -2.0)}, 3, 100000);
  EXPECT_NEAR(r.value, 2.5, 1e-9);
  EXPECT_GE(r.value, r.induced - 1e-12);
  EXPECT_EQ(r.polyline.size(), 5u);
}

TEST(IntrinsicDistance, TorusMinusSquareMatchesMaxNorm) {
  const auto S = build_torus_minus_square(64);
  const auto r = intrinsic_distance(S, {v2(0, 0)}, {v2(0.06, 0.03)}, 2, 100000);
  EXPECT_NEAR(r.value, 0.06, 2.0 * S.X.fill_radius + 1e-3);
}

TEST(IntrinsicDistance, BudgetExhaustionCarriesBestValue) {
  const auto S = build_hyperbolic_two_points();
  try {
    intrinsic_distance(S, {v2(0, 1)}, {v2(2, 3)}, 4, 5);
    FAIL() << "expected IterationBudgetExceeded";
  } catch (const IterationBudgetExceeded& e) {
    EXPECT_TRUE(std::isfinite(e.best));
    EXPECT_GE(e.best, induced_metric(S, {v2(0, 1)}, {v2(2, 3)}) - 1e-12);
  }
}

TEST(QuotientSpeed, KnownCurves) {
  const auto H = build_hyperbolic_two_points();
  EXPECT_EQ(quotient_speed(H, [](double) { return Eigen::VectorXd(v2(0.1, 2.0)); }, 0.0).value, 0.0);
  const auto along = quotient_speed(H, [&](double t) { return exp_map(H.group, v2(1, 0), t); }, 0.0);
  EXPECT_NEAR(along.value, 1.0, 1e-6);

  const auto E = build_rn_translation(2, {});
  EXPECT_NEAR(quotient_speed(E, [](double t) { return Eigen::VectorXd(v2(t, t)); }, 0.0).value,
              std::numbers::sqrt2, 1e-9);
}

TEST(QuotientSpeed, IndependentOfTheCurveRepresentingV) {
  // Two curves with the same velocity at t = 0 give the same speed.
  const auto H = build_hyperbolic_two_points();
  const AlgebraVector v = v2(0.6, 0.8);
  const auto straight = quotient_speed(H, [&](double t) { return exp_map(H.group, v, t); }, 0.0);
  const auto bent = quotient_speed(
      H, [&](double t) { return exp_map(H.group, v2(0.6 + 3.0 * t, 0.8 - 2.0 * t), t); }, 0.0);
  EXPECT_NEAR(straight.value, bent.value, 10.0 * (straight.error_estimate + bent.error_estimate) + 1e-9);
}
