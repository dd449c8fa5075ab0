#include "qf/hausdorff.hpp"

#include "qf/nearest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qf {

void validate(const ModelManifold& m, const CompactSample& X) {
  if (X.points.empty()) throw EmptySample("compact sample must be nonempty");
  if (!(X.fill_radius >= 0.0)) throw DomainError("fill radius must be nonnegative");
  for (const auto& p : X.points) validate(m, p);
  for (const auto& [i, basis] : X.tangent_basis) {
    if (i >= X.points.size()) throw DomainError("tangent basis refers to a missing sample point");
    const Point& x = X.points[i];
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a; b < basis.size(); ++b) {
        const double g = riemannian_inner(m, x, basis[a], basis[b]);
        const double expect = a == b ? 1.0 : 0.0;
        if (std::abs(g - expect) > 1e-8) {
          std::ostringstream os;
          os << "tangent basis at sample " << i << " is not orthonormal";
          throw DomainError(os.str());
        }
      }
    }
  }
}

namespace {

void require_nonempty(std::span<const Point> A, std::span<const Point> B) {
  if (A.empty() || B.empty()) throw EmptySample("Hausdorff distance needs nonempty sets");
}

}  // namespace

double directed_hausdorff(const ModelManifold& m, std::span<const Point> A, std::span<const Point> B) {
  require_nonempty(A, B);
  double worst = 0.0;
  for (const auto& a : A) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : B) best = std::min(best, distance(m, a, b));
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff_distance(const ModelManifold& m, std::span<const Point> A, std::span<const Point> B) {
  return std::max(directed_hausdorff(m, A, B), directed_hausdorff(m, B, A));
}

double hausdorff_distance(const ModelManifold& m, const CompactSample& A, const CompactSample& B) {
  return hausdorff_distance(m, std::span<const Point>(A.points), std::span<const Point>(B.points));
}

namespace {

double directed_indexed(const ModelManifold& m, std::span<const Point> A, std::span<const Point> B) {
  const NearestIndex index(m, B);
  double worst = 0.0;
  for (const auto& a : A) {
    // Points closer than the running max cannot change the result.
    const auto hit = index.nearest(a, worst);
    worst = std::max(worst, hit.distance);
  }
  return worst;
}

}  // namespace

double hausdorff_distance_indexed(const ModelManifold& m, std::span<const Point> A,
                                  std::span<const Point> B) {
  require_nonempty(A, B);
  return std::max(directed_indexed(m, A, B), directed_indexed(m, B, A));
}

}  // namespace qf
