#pragma once

#include "qf/scenario.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qf {

// Builder parameters for the scenario catalogue. Zero / empty means "use the
// scenario's default".
struct ScenarioParams {
  int grid_n = 0;
  double a = 1.0;
  double b = 1.0;
  double cap_radius = 0.4;
  double slope = 0.0;
  int dim = 0;
};

// (R^n, +) translating a finite X in Euclidean space. F(v) = |v|.
Scenario build_rn_translation(int n, std::vector<Point> X_points,
                              std::map<std::size_t, std::vector<Vector>> tangent_basis = {});

// Flat torus minus the open square (1/4, 3/4)^2 under translations. The
// complement is sampled on the grid_n x grid_n vertex grid and the square's
// boundary at `boundary_refine` times that density. F(v) = max(|v1|, |v2|).
Scenario build_torus_minus_square(int grid_n = 128, int boundary_refine = 32);

// X = {(-a, b), (a, b)} in the half-plane under the affine group.
Scenario build_hyperbolic_two_points(double a = 1.0, double b = 1.0);

// Closed geodesic cap of the given radius around the north pole of the unit
// sphere, sampled on `rings` concentric geodesic circles. Each circle carries
// `arc_refine` times more points per unit length than the ring spacing.
Scenario build_sphere_cap(double cap_radius = 0.4, int rings = 24, int arc_refine = 8);

// Irrational flow t (x, y) = (x + t, y + slope t) on the flat torus, X = {0}.
Scenario build_irrational_flow(double slope = 0.0);

// F(cos(theta), sin(theta)) for the two-point half-plane scenario, by the
// branch formula on the sign of sin(2 theta).
double hyperbolic_two_point_norm(double a, double b, double theta);

struct WindowWitness {
  bool found = false;
  double t = 0.0;
  double distance = 0.0;
};

// Scans t in (lo, hi) with the given step for d_X(t, 0) < eps, keeping the
// closest approach.
WindowWitness flow_return_search(const Scenario& S, double lo = 100.0, double hi = 200.0,
                                 double step = 1e-3, double eps = 0.05);

// Stable identifiers used on the command line.
const std::vector<std::string>& scenario_names();

// Throws std::invalid_argument for unknown names.
Scenario build_scenario(const std::string& name, const ScenarioParams& params = {});

}  // namespace qf
