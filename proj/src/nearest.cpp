#include "qf/nearest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace qf {

namespace {
constexpr std::size_t kLeafSize = 8;
}

NearestIndex::NearestIndex(const ModelManifold& m, std::span<const Point> points)
    : manifold_(m), points_(points) {
  switch (m.kind) {
    case ManifoldKind::Euclidean: dim_ = m.chart_dim; break;
    case ManifoldKind::FlatTorus2: dim_ = 2; break;
    case ManifoldKind::Sphere2: dim_ = 3; break;
    case ManifoldKind::HyperbolicHalfPlane: use_tree_ = false; break;
  }
  if (!use_tree_ || points.empty()) return;

  const std::size_t n = points.size();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  Eigen::MatrixXd raw(dim_, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) raw.col(static_cast<Eigen::Index>(i)) = embed(points[i]);
  coords_ = std::move(raw);
  nodes_.reserve(2 * n / kLeafSize + 1);
  build(0, n);

  // Reorder columns to match leaf ranges.
  Eigen::MatrixXd sorted(dim_, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    sorted.col(static_cast<Eigen::Index>(i)) = coords_.col(static_cast<Eigen::Index>(order_[i]));
  }
  coords_ = std::move(sorted);
}

Eigen::VectorXd NearestIndex::embed(const Point& p) const {
  if (manifold_.kind == ManifoldKind::Sphere2) return sphere_to_embedding(manifold_, p);
  return p;
}

double NearestIndex::geodesic_to_embedding(double d) const {
  if (manifold_.kind == ManifoldKind::Sphere2) {
    const double r = manifold_.radius;
    return 2.0 * r * std::sin(std::min(d, std::numbers::pi * r) / (2.0 * r));
  }
  return d;
}

int NearestIndex::build(std::size_t lo, std::size_t hi) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back({lo, hi, -1, 0.0, -1, -1});
  if (hi - lo <= kLeafSize) return id;

  Eigen::VectorXd mn = Eigen::VectorXd::Constant(dim_, std::numeric_limits<double>::infinity());
  Eigen::VectorXd mx = -mn;
  for (std::size_t i = lo; i < hi; ++i) {
    const auto c = coords_.col(static_cast<Eigen::Index>(order_[i]));
    mn = mn.cwiseMin(c);
    mx = mx.cwiseMax(c);
  }
  Eigen::Index axis = 0;
  (mx - mn).maxCoeff(&axis);
  const std::size_t mid = lo + (hi - lo) / 2;
  std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(lo),
                   order_.begin() + static_cast<std::ptrdiff_t>(mid),
                   order_.begin() + static_cast<std::ptrdiff_t>(hi), [&](std::size_t a, std::size_t b) {
                     return coords_(axis, static_cast<Eigen::Index>(a)) <
                            coords_(axis, static_cast<Eigen::Index>(b));
                   });
  const double split = coords_(axis, static_cast<Eigen::Index>(order_[mid]));
  const int left = build(lo, mid);
  const int right = build(mid, hi);
  nodes_[static_cast<std::size_t>(id)].axis = static_cast<int>(axis);
  nodes_[static_cast<std::size_t>(id)].split = split;
  nodes_[static_cast<std::size_t>(id)].left = left;
  nodes_[static_cast<std::size_t>(id)].right = right;
  return id;
}

void NearestIndex::search(int node_id, const double* q, double& best2, std::size_t& best,
                          double stop2) const {
  const Node& node = nodes_[static_cast<std::size_t>(node_id)];
  if (node.axis < 0) {
    for (std::size_t i = node.lo; i < node.hi; ++i) {
      const double* c = coords_.data() + static_cast<std::ptrdiff_t>(i) * dim_;
      double d2 = 0.0;
      for (int k = 0; k < dim_; ++k) {
        const double t = c[k] - q[k];
        d2 += t * t;
      }
      if (d2 < best2) {
        best2 = d2;
        best = i;
        if (best2 < stop2) return;
      }
    }
    return;
  }
  const double delta = q[node.axis] - node.split;
  const int near = delta < 0.0 ? node.left : node.right;
  const int far = delta < 0.0 ? node.right : node.left;
  search(near, q, best2, best, stop2);
  if (best2 < stop2) return;
  if (delta * delta < best2) search(far, q, best2, best, stop2);
}

NearestIndex::Hit NearestIndex::nearest(const Point& q, double good_enough) const {
  Hit hit;
  hit.distance = std::numeric_limits<double>::infinity();
  if (points_.empty()) return hit;

  if (!use_tree_) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const double d = distance(manifold_, q, points_[i]);
      if (d < hit.distance) {
        hit = {i, d};
        if (d < good_enough) break;
      }
    }
    return hit;
  }

  double best2 = std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  const double stop = geodesic_to_embedding(good_enough) * (1.0 - 1e-9);
  const double stop2 = good_enough > 0.0 ? stop * stop : -1.0;
  const Eigen::VectorXd e = embed(q);
  if (manifold_.kind == ManifoldKind::FlatTorus2) {
    // The centre shift goes first so most queries prune the other eight.
    static constexpr int kShifts[9][2] = {{0, 0},  {-1, 0}, {1, 0},  {0, -1}, {0, 1},
                                          {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    for (const auto& s : kShifts) {
      const double shifted[2] = {e[0] + s[0], e[1] + s[1]};
      search(0, shifted, best2, best, stop2);
      if (best2 < stop2) break;
    }
  } else {
    search(0, e.data(), best2, best, stop2);
  }
  hit.index = order_[best];
  hit.distance = distance(manifold_, q, points_[hit.index]);
  return hit;
}

}  // namespace qf
