#pragma once

#include "qf/geometry.hpp"
#include "qf/limits.hpp"

#include <Eigen/Core>

#include <string>

namespace qf {

// Global group coordinates. Rotation3 stores the 3x3 matrix column-major.
using GroupElement = Eigen::VectorXd;
// Lie algebra coordinates in the basis listed per kind below.
using AlgebraVector = Eigen::VectorXd;

enum class GroupKind { TranslationRn, TranslationTorus2, HyperbolicAffine, Rotation3, LineFlow };

// Concrete Lie group acting on a model manifold.
//
//   TranslationRn(n)   (R^n, +) acting on Euclidean(n) by x + g
//   TranslationTorus2  R^2 / Z^2 acting on FlatTorus2 by x + g mod 1
//   HyperbolicAffine   {(g1, g2) : g2 > 0}, (g1, g2)(h1, h2) = (g2 h1 + g1, g2 h2),
//                      acting on the half-plane by x -> g2 x + (g1, 0).
//                      Algebra basis: the coordinate directions at e = (0, 1).
//   Rotation3          SO(3) acting on Sphere2 through the chart; algebra is
//                      R^3 with exp(w) = rotation about w by |w|.
//   LineFlow(slope)    (R, +) acting on FlatTorus2 by x + t (1, slope) mod 1
struct GroupModel {
  GroupKind kind = GroupKind::TranslationRn;
  int algebra_dim = 2;
  int param_dim = 2;
  double slope = 0.0;  // LineFlow only

  static GroupModel translation_rn(int n);
  static GroupModel translation_torus();
  static GroupModel hyperbolic_affine();
  static GroupModel rotation3();
  static GroupModel line_flow(double slope);

  std::string name() const;
  // The manifold this group acts on (sphere radius is taken from `m`).
  bool acts_on(const ModelManifold& m) const;
};

class InvalidElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const GroupModel& G, const GroupElement& g);
void validate_algebra(const GroupModel& G, const AlgebraVector& v);

GroupElement identity(const GroupModel& G);
GroupElement compose(const GroupModel& G, const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupModel& G, const GroupElement& g);
GroupElement exp_map(const GroupModel& G, const AlgebraVector& v, double t = 1.0);
// Inverse of exp_map near the identity (principal branch).
AlgebraVector log_map(const GroupModel& G, const GroupElement& g);

// Point on the one-parameter curve s -> g exp(s log(g^-1 h)), s in [0, 1].
// For translation groups this is linear interpolation in coordinates (torus
// differences take the shortest lift).
GroupElement interpolate(const GroupModel& G, const GroupElement& g, const GroupElement& h, double s);

// Distance between group coordinates used to scale optimizer steps.
double coordinate_distance(const GroupModel& G, const GroupElement& g, const GroupElement& h);

Point act(const GroupModel& G, const ModelManifold& m, const GroupElement& g, const Point& p);

Eigen::Matrix3d rotation_matrix(const GroupElement& g);
GroupElement from_rotation(const Eigen::Matrix3d& R);

// Killing field K_v(p) = d/dt|0 exp(tv) p. Uses the closed form for every
// shipped kind.
TangentVector killing_field(const GroupModel& G, const ModelManifold& m, const AlgebraVector& v,
                            const Point& p);

// Central differences (act(exp(hv), p) - act(exp(-hv), p)) / 2h over a step
// ladder with O(h^2) Richardson extrapolation. Works for any action.
TangentVector killing_field_numeric(const GroupModel& G, const ModelManifold& m,
                                    const AlgebraVector& v, const Point& p,
                                    const StepLadder& ladder = {1e-2, 0.5, 6});

// d(phi_g)_p applied to w, by central differences along the chart line p + s w.
Vector action_pushforward(const GroupModel& G, const ModelManifold& m, const GroupElement& g,
                          const Point& p, const Vector& w, double h = 1e-5);

}  // namespace qf
