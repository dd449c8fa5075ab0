#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace qf {

using Point = Eigen::VectorXd;
using Vector = Eigen::VectorXd;

enum class ManifoldKind { Euclidean, FlatTorus2, HyperbolicHalfPlane, Sphere2 };

// Raised when a point or vector violates the chart invariants of its manifold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Model space given in a single chart with a closed-form geodesic distance.
//
// Charts:
//   Euclidean(n)        identity chart on R^n
//   FlatTorus2          [0,1)^2 with opposite sides identified
//   HyperbolicHalfPlane {(x, y) : y > 0}, metric |dx| / y
//   Sphere2(R)          stereographic projection from the south pole onto the
//                       plane tangent at the north pole; the north pole is the
//                       chart origin and the chart is isometric there.
struct ModelManifold {
  ManifoldKind kind = ManifoldKind::Euclidean;
  int chart_dim = 2;
  double radius = 1.0;  // Sphere2 only

  static ModelManifold euclidean(int n);
  static ModelManifold flat_torus();
  static ModelManifold hyperbolic_half_plane();
  static ModelManifold sphere(double radius = 1.0);

  std::string name() const;
};

struct TangentVector {
  Point base;
  Vector components;
};

// Throws DomainError if `p` is not a valid chart point of `m`.
void validate(const ModelManifold& m, const Point& p);
bool is_valid(const ModelManifold& m, const Point& p) noexcept;

// Reduces a torus coordinate into [0, 1).
double wrap_unit(double x) noexcept;

// Brings a point into the canonical chart domain (torus coordinates mod 1).
Point canonicalize(const ModelManifold& m, Point p);

// Geodesic distance of the model space. Points are assumed valid; use
// `checked_distance` at API boundaries.
double distance(const ModelManifold& m, const Point& p, const Point& q) noexcept;
double checked_distance(const ModelManifold& m, const Point& p, const Point& q);

// Smallest chart displacement taking p to q (torus differences are reduced to
// the shortest lift, other charts subtract coordinates).
Vector chart_difference(const ModelManifold& m, const Point& p, const Point& q);

// Conformal factor lambda(p) with g_p(u, w) = lambda(p)^2 <u, w>. Every shipped
// model metric is conformally flat in its chart.
double conformal_factor(const ModelManifold& m, const Point& p) noexcept;

double riemannian_inner(const ModelManifold& m, const Point& p, const Vector& u, const Vector& w);
double riemannian_norm(const ModelManifold& m, const TangentVector& v);

// Sphere chart helpers (radius m.radius).
Eigen::Vector3d sphere_to_embedding(const ModelManifold& m, const Point& u);
Point sphere_from_embedding(const ModelManifold& m, const Eigen::Vector3d& x);

// Differential of the sphere chart map at embedding point x applied to an
// ambient 3-vector tangent to the sphere.
Vector sphere_chart_pushforward(const ModelManifold& m, const Eigen::Vector3d& x,
                                const Eigen::Vector3d& w);

}  // namespace qf
