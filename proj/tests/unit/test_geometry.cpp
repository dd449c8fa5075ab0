#include "qf/geometry.hpp"
#include "qf/limits.hpp"

#include <gtest/gtest.h>

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <random>

using namespace qf;

namespace {

Point pt(double x, double y) { return Eigen::Vector2d(x, y); }

}  // namespace

TEST(Distance, EuclideanPythagorean) {
  EXPECT_DOUBLE_EQ(distance(ModelManifold::euclidean(2), pt(0, 0), pt(3, 4)), 5.0);
}

TEST(Distance, TorusWrapsAround) {
  EXPECT_NEAR(distance(ModelManifold::flat_torus(), pt(0.95, 0), pt(0.05, 0)), 0.1, 1e-15);
  EXPECT_NEAR(distance(ModelManifold::flat_torus(), pt(0.9, 0.95), pt(0.1, 0.05)), std::hypot(0.2, 0.1), 1e-15);
}

TEST(Distance, HyperbolicMatchesArcoshOracle) {
  const auto H = ModelManifold::hyperbolic_half_plane();
  // arcosh(1 + (e - 1)^2 / (2e)) = 1.
  EXPECT_NEAR(distance(H, pt(0, 1), pt(0, std::numbers::e)), 1.0, 1e-14);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-3, 3), uy(0.1, 4);
  for (int k = 0; k < 200; ++k) {
    const Point p = pt(ux(rng), uy(rng)), q = pt(ux(rng), uy(rng));
    const double sq = (p - q).squaredNorm();
    const double oracle = std::acosh(1.0 + sq / (2.0 * p[1] * q[1]));
    EXPECT_NEAR(distance(H, p, q), oracle, 1e-12 * std::max(1.0, oracle));
  }
}

TEST(Distance, SphereMatchesEmbeddedAngle) {
  const auto S = ModelManifold::sphere(2.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 200; ++k) {
    const Point p = pt(u(rng), u(rng)), q = pt(u(rng), u(rng));
    const Eigen::Vector3d a = sphere_to_embedding(S, p), b = sphere_to_embedding(S, q);
    const double angle = std::atan2(a.cross(b).norm(), a.dot(b));
    EXPECT_NEAR(distance(S, p, q), 2.0 * angle, 1e-12);
  }
}

TEST(Distance, SphereChartRoundTrip) {
  const auto S = ModelManifold::sphere(1.5);
  const Point u = pt(0.7, -2.1);
  EXPECT_NEAR((sphere_from_embedding(S, sphere_to_embedding(S, u)) - u).norm(), 0.0, 1e-13);
  EXPECT_NEAR(sphere_to_embedding(S, pt(0, 0))[2], 1.5, 1e-15);
}

TEST(Distance, MetricAxiomsOnRandomTriples) {
  const ModelManifold models[] = {ModelManifold::euclidean(2), ModelManifold::flat_torus(),
                                  ModelManifold::hyperbolic_half_plane(), ModelManifold::sphere(1.0)};
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (const auto& m : models) {
    for (int k = 0; k < 300; ++k) {
      const Point a = pt(u(rng), u(rng)), b = pt(u(rng), u(rng)), c = pt(u(rng), u(rng));
      const double ab = distance(m, a, b), bc = distance(m, b, c), ac = distance(m, a, c);
      EXPECT_GE(ab, 0.0);
      EXPECT_EQ(distance(m, a, a), 0.0) << m.name();
      EXPECT_NEAR(ab, distance(m, b, a), 1e-15) << m.name();
      EXPECT_LE(ac, ab + bc + 1e-12) << m.name();
    }
  }
}

TEST(Distance, TorusIdentifiesIntegerShifts) {
  EXPECT_EQ(distance(ModelManifold::flat_torus(), pt(0.25, 0.5), canonicalize(ModelManifold::flat_torus(), pt(1.25, -0.5))),
            0.0);
  EXPECT_EQ(wrap_unit(-0.25), 0.75);
  EXPECT_EQ(wrap_unit(1.0), 0.0);
  EXPECT_GE(wrap_unit(-1e-20), 0.0);
  EXPECT_LT(wrap_unit(-1e-20), 1.0);
}

TEST(Distance, CheckedRejectsInvalidPoints) {
  EXPECT_THROW(checked_distance(ModelManifold::hyperbolic_half_plane(), pt(0, 0), pt(0, 1)), DomainError);
  EXPECT_THROW(checked_distance(ModelManifold::euclidean(3), pt(0, 0), pt(0, 1)), DomainError);
  EXPECT_THROW(checked_distance(ModelManifold::flat_torus(), pt(1.0, 0), pt(0, 0)), DomainError);
  EXPECT_THROW(checked_distance(ModelManifold::euclidean(2), pt(NAN, 0), pt(0, 0)), DomainError);
  EXPECT_NO_THROW(checked_distance(ModelManifold::flat_torus(), pt(0.5, 0), pt(0, 0)));
}

TEST(RiemannianNorm, KnownValues) {
  EXPECT_DOUBLE_EQ(riemannian_norm(ModelManifold::euclidean(2), {pt(7, -1), pt(3, 4)}), 5.0);
  EXPECT_DOUBLE_EQ(riemannian_norm(ModelManifold::hyperbolic_half_plane(), {pt(0, 2), pt(1, 0)}), 0.5);
  // The sphere chart is isometric at its origin.
  const double h = 0.37;
  EXPECT_NEAR(riemannian_norm(ModelManifold::sphere(1.0), {pt(0, 0), pt(h, 0)}), h, 1e-15);
  EXPECT_THROW(riemannian_norm(ModelManifold::hyperbolic_half_plane(), {pt(0, -1), pt(1, 0)}), DomainError);
}

TEST(RiemannianNorm, SphereConformalFactorMatchesPushforward) {
  // Oracle: finite-difference the embedding along the chart vector.
  const auto S = ModelManifold::sphere(1.3);
  const Point u = pt(0.8, -0.4);
  const Vector w = pt(0.3, 0.9);
  const double h = 1e-6;
  const double oracle =
      (sphere_to_embedding(S, u + h * w) - sphere_to_embedding(S, u - h * w)).norm() / (2.0 * h);
  EXPECT_NEAR(riemannian_norm(S, {u, w}), oracle, 1e-8);
}

TEST(RiemannianNorm, SpherePushforwardInvertsChartDifferential) {
  const auto S = ModelManifold::sphere(1.0);
  const Point u = pt(0.2, 0.5);
  const Vector w = pt(-0.4, 1.1);
  const double h = 1e-6;
  const Eigen::Vector3d ambient =
      (sphere_to_embedding(S, u + h * w) - sphere_to_embedding(S, u - h * w)) / (2.0 * h);
  EXPECT_NEAR((sphere_chart_pushforward(S, sphere_to_embedding(S, u), ambient) - w).norm(), 0.0, 1e-8);
}

TEST(ChartDifference, TorusTakesShortestLift) {
  const Vector d = chart_difference(ModelManifold::flat_torus(), pt(0.9, 0.1), pt(0.1, 0.9));
  EXPECT_NEAR(d[0], 0.2, 1e-15);
  EXPECT_NEAR(d[1], -0.2, 1e-15);
}

TEST(SpeedEstimate, ChartCurves) {
  const auto E = ModelManifold::euclidean(2);
  const auto est = speed_estimate(E, [](double t) { return pt(t, t * t); }, 0.0);
  EXPECT_NEAR(est.value, 1.0, 1e-9);

  const auto H = ModelManifold::hyperbolic_half_plane();
  EXPECT_NEAR(speed_estimate(H, [](double t) { return pt(t, 1.0); }, 0.0).value, 1.0, 1e-9);

  const auto T = ModelManifold::flat_torus();
  const auto torus = speed_estimate(
      T, [](double t) { return pt(wrap_unit(t), wrap_unit(std::numbers::sqrt2 * t)); }, 0.0);
  EXPECT_NEAR(torus.value, std::sqrt(3.0), 1e-9);
}

TEST(SpeedEstimate, NonConvergentCarriesRawValues) {
  // |t|^(1/2) / |t| blows up; successive extrapolants do not settle.
  const auto E = ModelManifold::euclidean(1);
  try {
    speed_estimate(E, [](double t) { Point p(1); p[0] = std::sqrt(std::abs(t)); return p; }, 0.0);
    FAIL() << "expected NonConvergent";
  } catch (const NonConvergent& e) {
    EXPECT_FALSE(e.raw_values.empty());
  }
}
