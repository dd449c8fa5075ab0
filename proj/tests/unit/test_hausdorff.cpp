#include "qf/hausdorff.hpp"
#include "qf/nearest.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace qf;

namespace {

Point pt(double x, double y) { return Eigen::Vector2d(x, y); }

std::vector<Point> cloud(const ModelManifold& m, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    Point p = pt(u(rng), u(rng));
    if (m.kind == ManifoldKind::HyperbolicHalfPlane) p[1] += 0.1;
    if (m.kind == ManifoldKind::Sphere2 || m.kind == ManifoldKind::Euclidean) p = 4.0 * p - pt(2, 2);
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Hausdorff, SingletonsReduceToDistance) {
  const auto E = ModelManifold::euclidean(2);
  const std::vector<Point> A{pt(0, 0)}, B{pt(3, 4)};
  EXPECT_EQ(hausdorff_distance(E, A, B), 5.0);
  EXPECT_EQ(hausdorff_distance(E, A, A), 0.0);
}

TEST(Hausdorff, TwoByOneBruteForce) {
  const auto E = ModelManifold::euclidean(2);
  const std::vector<Point> A{pt(0, 0), pt(1, 0)}, B{pt(0, 0)};
  EXPECT_EQ(hausdorff_distance(E, A, B), 1.0);
  EXPECT_EQ(directed_hausdorff(E, B, A), 0.0);
  EXPECT_EQ(directed_hausdorff(E, A, B), 1.0);
}

TEST(Hausdorff, EmptySampleThrows) {
  const auto E = ModelManifold::euclidean(2);
  const std::vector<Point> A{pt(0, 0)}, none;
  EXPECT_THROW(hausdorff_distance(E, A, none), EmptySample);
  EXPECT_THROW(hausdorff_distance_indexed(E, none, A), EmptySample);
}

TEST(Hausdorff, IndexedAgreesWithReference) {
  const ModelManifold models[] = {ModelManifold::euclidean(2), ModelManifold::flat_torus(),
                                  ModelManifold::hyperbolic_half_plane(), ModelManifold::sphere(1.0)};
  std::mt19937_64 rng(8);
  for (const auto& m : models) {
    for (int k = 0; k < 10; ++k) {
      const auto A = cloud(m, 150, rng), B = cloud(m, 90, rng);
      EXPECT_NEAR(hausdorff_distance_indexed(m, A, B), hausdorff_distance(m, A, B), 1e-12) << m.name();
    }
  }
}

TEST(Hausdorff, MetricAxiomsOnSmallClouds) {
  const auto T = ModelManifold::flat_torus();
  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) {
    const auto A = cloud(T, 20, rng), B = cloud(T, 25, rng), C = cloud(T, 15, rng);
    const double ab = hausdorff_distance(T, A, B);
    EXPECT_EQ(ab, hausdorff_distance(T, B, A));
    EXPECT_LE(hausdorff_distance(T, A, C), ab + hausdorff_distance(T, B, C) + 1e-15);
  }
}

TEST(Hausdorff, SampleValidationChecksTangentBases) {
  const auto E = ModelManifold::euclidean(2);
  CompactSample X;
  X.points = {pt(0, 0), pt(1, 0)};
  X.tangent_basis[0] = {pt(1, 0)};
  EXPECT_NO_THROW(validate(E, X));
  X.tangent_basis[1] = {pt(2, 0)};
  EXPECT_THROW(validate(E, X), DomainError);
  X.tangent_basis[1] = {pt(1, 0)};
  X.tangent_basis[5] = {pt(1, 0)};
  EXPECT_THROW(validate(E, X), DomainError);
  EXPECT_THROW(validate(E, CompactSample{}), EmptySample);
}

TEST(NearestIndex, MatchesLinearScan) {
  const ModelManifold models[] = {ModelManifold::euclidean(2), ModelManifold::flat_torus(),
                                  ModelManifold::hyperbolic_half_plane(), ModelManifold::sphere(1.0)};
  std::mt19937_64 rng(31);
  for (const auto& m : models) {
    const auto P = cloud(m, 500, rng);
    const NearestIndex index(m, P);
    for (const auto& q : cloud(m, 200, rng)) {
      double best = INFINITY;
      for (const auto& p : P) best = std::min(best, distance(m, p, q));
      const auto hit = index.nearest(q);
      EXPECT_EQ(hit.distance, best) << m.name();
      EXPECT_EQ(distance(m, P[hit.index], q), hit.distance);
    }
  }
}

TEST(NearestIndex, EarlyStopReturnsCloserThanThreshold) {
  const auto E = ModelManifold::euclidean(2);
  std::mt19937_64 rng(2);
  const auto P = cloud(E, 400, rng);
  const NearestIndex index(E, P);
  const auto hit = index.nearest(pt(0, 0), 0.5);
  EXPECT_LT(hit.distance, 0.5);
}
