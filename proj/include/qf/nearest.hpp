#pragma once

#include "qf/geometry.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <vector>

namespace qf {

// Exact nearest-neighbour queries under the geodesic distance of a model
// manifold. Euclidean and torus charts are searched in chart coordinates (the
// torus through its nine integer shifts), the sphere through its embedding in
// R^3 where the chord is monotone in the geodesic distance. The half-plane has
// no such embedding and falls back to a linear scan.
class NearestIndex {
 public:
  NearestIndex(const ModelManifold& m, std::span<const Point> points);

  struct Hit {
    std::size_t index = 0;
    double distance = 0.0;
  };

  // Nearest indexed point to q. When `good_enough` > 0 the search may return
  // any point strictly closer than it instead of the nearest one.
  Hit nearest(const Point& q, double good_enough = 0.0) const;

  std::size_t size() const { return points_.size(); }

 private:
  struct Node {
    std::size_t lo, hi;
    int axis;
    double split;
    int left, right;
  };

  int build(std::size_t lo, std::size_t hi);
  void search(int node, const double* q, double& best2, std::size_t& best, double stop2) const;
  Eigen::VectorXd embed(const Point& p) const;
  double geodesic_to_embedding(double d) const;

  ModelManifold manifold_;
  std::span<const Point> points_;
  int dim_ = 0;
  bool use_tree_ = true;
  Eigen::MatrixXd coords_;  // dim x N, columns in tree order
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace qf
