#pragma once

#include "qf/geometry.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace qf {

// Finite sample of a compact set X. `fill_radius` bounds the distance from
// any point of the true set to its nearest sample. `tangent_basis[i]`, when
// present, lists chart components of an orthonormal basis of T_x X at
// points[i]; points without an entry are treated as isolated.
struct CompactSample {
  std::vector<Point> points;
  double fill_radius = 0.0;
  std::map<std::size_t, std::vector<Vector>> tangent_basis;
};

class EmptySample : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const ModelManifold& m, const CompactSample& X);

// max_{a in A} min_{b in B} d(a, b)
double directed_hausdorff(const ModelManifold& m, std::span<const Point> A, std::span<const Point> B);

// Reference Hausdorff distance: full |A| x |B| scan.
double hausdorff_distance(const ModelManifold& m, std::span<const Point> A, std::span<const Point> B);
double hausdorff_distance(const ModelManifold& m, const CompactSample& A, const CompactSample& B);

// Same value through nearest-neighbour search with early termination. The
// value is computed from the same distance evaluations as the reference path.
double hausdorff_distance_indexed(const ModelManifold& m, std::span<const Point> A,
                                  std::span<const Point> B);

}  // namespace qf
