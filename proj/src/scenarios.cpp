#include "qf/scenarios.hpp"

#include "qf/finsler.hpp"
#include "qf/quotient.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qf {

namespace {

QuotientPoint at(const GroupElement& g) { return {g}; }

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

}  // namespace

Scenario build_rn_translation(int n, std::vector<Point> X_points,
                              std::map<std::size_t, std::vector<Vector>> tangent_basis) {
  Scenario S;
  S.name = "rn-translation";
  S.manifold = ModelManifold::euclidean(n);
  S.group = GroupModel::translation_rn(n);
  if (X_points.empty()) {
    X_points.push_back(Point::Zero(n));
    const double pattern[] = {1.0, 3.0, -1.0, 2.0};
    Point p(n);
    for (int i = 0; i < n; ++i) p[i] = pattern[i % 4];
    X_points.push_back(p);
  }
  S.X.points = std::move(X_points);
  S.X.fill_radius = 0.0;
  S.X.tangent_basis = std::move(tangent_basis);
  S.closed_form = [](const AlgebraVector& v) { return v.norm(); };

  Point far = Point::Zero(n);
  far[0] = 3.0;
  if (n > 1) far[1] = 4.0;
  const double far_norm = far.norm();
  S.expected.push_back({"d_X(0, (3,4))",
                        [far](const Scenario& s) {
                          return induced_metric(s, at(Point::Zero(far.size())), at(far));
                        },
                        far_norm, 1e-12, Provenance::Reference});
  S.expected.push_back({"d_X(x, x)",
                        [far](const Scenario& s) { return induced_metric(s, at(far), at(far)); }, 0.0, 0.0,
                        Provenance::Trivial});
  S.expected.push_back({"F_limit(3,4)", [far](const Scenario& s) { return finsler_limit(s, far).value; },
                        far_norm, 1e-6, Provenance::Reference});
  validate(S);
  return S;
}

Scenario build_torus_minus_square(int grid_n, int boundary_refine) {
  if (grid_n < 32) throw std::invalid_argument("torus-minus-square needs grid_n >= 32");
  if (boundary_refine < 1) throw std::invalid_argument("boundary_refine must be >= 1");
  Scenario S;
  S.name = "torus-minus-square";
  S.manifold = ModelManifold::flat_torus();
  S.group = GroupModel::translation_torus();

  const double lo = 0.25, hi = 0.75;
  auto& pts = S.X.points;
  auto& basis = S.X.tangent_basis;
  const std::vector<Vector> full{vec({1.0, 0.0}), vec({0.0, 1.0})};

  // Complement of the closed square on the vertex grid; interior of X.
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const double x = static_cast<double>(i) / grid_n;
      const double y = static_cast<double>(j) / grid_n;
      if (x >= lo && x <= hi && y >= lo && y <= hi) continue;
      basis[pts.size()] = full;
      pts.push_back(vec({x, y}));
    }
  }
  // Boundary of the square, corners once each. Edge points carry the edge
  // direction; corners have no tangent line and get the full plane.
  const int per_edge = (grid_n / 2) * boundary_refine;
  for (int k = 0; k < per_edge; ++k) {
    const double s = lo + (hi - lo) * static_cast<double>(k) / per_edge;
    const double s2 = hi - (hi - lo) * static_cast<double>(k) / per_edge;
    const bool corner = k == 0;
    basis[pts.size()] = corner ? full : std::vector<Vector>{vec({1.0, 0.0})};
    pts.push_back(vec({s, lo}));  // bottom, left to right
    basis[pts.size()] = corner ? full : std::vector<Vector>{vec({0.0, 1.0})};
    pts.push_back(vec({hi, s}));  // right, bottom to top
    basis[pts.size()] = corner ? full : std::vector<Vector>{vec({1.0, 0.0})};
    pts.push_back(vec({s2, hi}));  // top, right to left
    basis[pts.size()] = corner ? full : std::vector<Vector>{vec({0.0, 1.0})};
    pts.push_back(vec({lo, s2}));  // left, top to bottom
  }
  S.X.fill_radius = std::sqrt(2.0) / (2.0 * grid_n);
  S.closed_form = [](const AlgebraVector& v) { return v.cwiseAbs().maxCoeff(); };
  // Steps stay inside |g_i| < 1/10, where d_X is the max norm, and well above
  // the grid spacing.
  S.ladder = {0.08, 0.75, 4};

  const double fill2 = 2.0 * S.X.fill_radius;
  S.expected.push_back({"d_X((0.05,0.02), e)",
                        [](const Scenario& s) {
                          return induced_metric(s, at(vec({0.05, 0.02})), at(identity(s.group)));
                        },
                        0.05, fill2, Provenance::Reference});
  S.expected.push_back({"d_X(e, e)",
                        [](const Scenario& s) {
                          return induced_metric(s, at(identity(s.group)), at(identity(s.group)));
                        },
                        0.0, 0.0, Provenance::Trivial});
  S.expected.push_back({"F_limit(1,1)", [](const Scenario& s) { return finsler_limit(s, vec({1.0, 1.0})).value; },
                        1.0, 1e-2, Provenance::Reference});
  S.expected.push_back({"d_X((0.05,0.02) + (1,-2), e)",
                        [](const Scenario& s) {
                          // Another representative of the same coset.
                          return induced_metric(s, at(vec({1.05, -1.98})), at(identity(s.group)));
                        },
                        0.05, fill2, Provenance::Trivial});
  validate(S);
  return S;
}

double hyperbolic_two_point_norm(double a, double b, double theta) {
  const double s2 = std::sin(2.0 * theta);
  const double c = std::cos(theta), s = std::sin(theta);
  const double cross = s2 > 0.0 ? a * s2 : -a * s2;
  return std::sqrt(cross + c * c + (a * a + b * b) * s * s) / b;
}

Scenario build_hyperbolic_two_points(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("hyperbolic-two-points needs a, b > 0");
  Scenario S;
  S.name = "hyperbolic-two-points";
  S.manifold = ModelManifold::hyperbolic_half_plane();
  S.group = GroupModel::hyperbolic_affine();
  S.X.points = {vec({-a, b}), vec({a, b})};
  S.X.fill_radius = 0.0;
  S.closed_form = [a, b](const AlgebraVector& v) {
    const double r = v.norm();
    if (r == 0.0) return 0.0;
    return r * hyperbolic_two_point_norm(a, b, std::atan2(v[1], v[0]));
  };

  const double pi = std::numbers::pi;
  S.expected.push_back({"F_limit(v_0)", [](const Scenario& s) { return finsler_limit(s, vec({1.0, 0.0})).value; },
                        hyperbolic_two_point_norm(a, b, 0.0), 1e-3, Provenance::Reference});
  S.expected.push_back({"F_limit(v_pi/2)",
                        [](const Scenario& s) { return finsler_limit(s, vec({0.0, 1.0})).value; },
                        hyperbolic_two_point_norm(a, b, pi / 2.0), 1e-3, Provenance::Reference});
  S.expected.push_back({"F_sup_killing(v_pi/4)",
                        [pi](const Scenario& s) {
                          return finsler_sup_killing(s, vec({std::cos(pi / 4.0), std::sin(pi / 4.0)})).value;
                        },
                        hyperbolic_two_point_norm(a, b, pi / 4.0), 1e-9, Provenance::Reference});
  S.expected.push_back({"F_sup_killing(v_3pi/4)",
                        [pi](const Scenario& s) {
                          return finsler_sup_killing(s, vec({std::cos(3 * pi / 4.0), std::sin(3 * pi / 4.0)})).value;
                        },
                        hyperbolic_two_point_norm(a, b, 3.0 * pi / 4.0), 1e-9, Provenance::Reference});
  validate(S);
  return S;
}

Scenario build_sphere_cap(double cap_radius, int rings, int arc_refine) {
  if (!(cap_radius > 0.0) || !(cap_radius < std::numbers::pi / 4.0)) {
    throw std::invalid_argument("sphere-cap radius must lie in (0, pi/4)");
  }
  if (rings < 2 || arc_refine < 1) throw std::invalid_argument("sphere-cap needs rings >= 2, arc_refine >= 1");
  Scenario S;
  S.name = "sphere-cap";
  S.manifold = ModelManifold::sphere(1.0);
  S.group = GroupModel::rotation3();
  const double R = S.manifold.radius;
  const double ring_step = cap_radius / rings;
  const double arc_step = ring_step / arc_refine;

  auto& pts = S.X.points;
  auto& basis = S.X.tangent_basis;
  auto full_basis = [&](const Point& u) {
    const double inv = 1.0 / conformal_factor(S.manifold, u);
    return std::vector<Vector>{vec({inv, 0.0}), vec({0.0, inv})};
  };

  basis[0] = full_basis(vec({0.0, 0.0}));
  pts.push_back(vec({0.0, 0.0}));
  for (int k = 1; k <= rings; ++k) {
    const double rho = k * ring_step;
    const double chart_r = 2.0 * R * std::tan(rho / (2.0 * R));
    const int count = static_cast<int>(std::ceil(2.0 * std::numbers::pi * R * std::sin(rho / R) / arc_step));
    for (int j = 0; j < count; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / count;
      const Point u = vec({chart_r * std::cos(phi), chart_r * std::sin(phi)});
      if (k < rings) {
        basis[pts.size()] = full_basis(u);
      } else {
        const double inv = 1.0 / conformal_factor(S.manifold, u);
        basis[pts.size()] = {vec({-std::sin(phi) * inv, std::cos(phi) * inv})};
      }
      pts.push_back(u);
    }
  }
  // Radially to the nearest ring, then along it to the nearest sample.
  S.X.fill_radius = 0.5 * (ring_step + arc_step);
  S.closed_form = [R](const AlgebraVector& w) { return R * std::hypot(w[0], w[1]); };
  // Rotation angles stay below cap_radius / 2.
  S.ladder = {0.45 * cap_radius, 0.8, 4};

  const double fill2 = 2.0 * S.X.fill_radius;
  S.expected.push_back({"d_X(e, e)",
                        [](const Scenario& s) {
                          return induced_metric(s, at(identity(s.group)), at(identity(s.group)));
                        },
                        0.0, 0.0, Provenance::Trivial});
  S.expected.push_back({"d_X(rot_x(0.1), e)",
                        [](const Scenario& s) {
                          return induced_metric(s, at(exp_map(s.group, vec({1.0, 0.0, 0.0}), 0.1)),
                                                at(identity(s.group)));
                        },
                        0.1, fill2, Provenance::Reference});
  S.expected.push_back({"d_X(rot_z(0.1), e)",
                        [](const Scenario& s) {
                          return induced_metric(s, at(exp_map(s.group, vec({0.0, 0.0, 1.0}), 0.1)),
                                                at(identity(s.group)));
                        },
                        0.0, fill2, Provenance::Trivial});
  validate(S);
  return S;
}

Scenario build_irrational_flow(double slope) {
  if (slope == 0.0) slope = std::numbers::sqrt2;
  Scenario S;
  S.name = "irrational-flow";
  S.manifold = ModelManifold::flat_torus();
  S.group = GroupModel::line_flow(slope);
  S.X.points = {vec({0.0, 0.0})};
  S.X.fill_radius = 0.0;
  const double speed = std::sqrt(1.0 + slope * slope);
  S.closed_form = [speed](const AlgebraVector& v) { return speed * std::abs(v[0]); };

  S.expected.push_back({"d_X(0.01, 0)",
                        [](const Scenario& s) { return induced_metric(s, at(vec({0.01})), at(vec({0.0}))); },
                        0.01 * speed, 1e-4, Provenance::Oracle});
  S.expected.push_back({"window (100,200) has d_X(t,0) < 0.05",
                        [](const Scenario& s) { return flow_return_search(s).found ? 1.0 : 0.0; }, 1.0, 0.0,
                        Provenance::Reference});
  S.expected.push_back({"d_X(0, 0)",
                        [](const Scenario& s) { return induced_metric(s, at(vec({0.0})), at(vec({0.0}))); }, 0.0,
                        0.0, Provenance::Trivial});
  validate(S);
  return S;
}

WindowWitness flow_return_search(const Scenario& S, double lo, double hi, double step, double eps) {
  WindowWitness best;
  best.distance = std::numeric_limits<double>::infinity();
  const QuotientPoint origin{identity(S.group)};
  const long count = std::lround((hi - lo) / step);
  for (long i = 1; i < count; ++i) {
    const double t = lo + static_cast<double>(i) * step;
    const double d = induced_metric(S, {vec({t})}, origin);
    if (d < best.distance) {
      best.distance = d;
      best.t = t;
    }
  }
  best.found = best.distance < eps;
  return best;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"rn-translation", "torus-minus-square", "hyperbolic-two-points",
                                              "sphere-cap", "irrational-flow"};
  return names;
}

Scenario build_scenario(const std::string& name, const ScenarioParams& p) {
  if (name == "rn-translation") return build_rn_translation(p.dim > 0 ? p.dim : 2, {});
  if (name == "torus-minus-square") return build_torus_minus_square(p.grid_n > 0 ? p.grid_n : 128);
  if (name == "hyperbolic-two-points") return build_hyperbolic_two_points(p.a, p.b);
  if (name == "sphere-cap") return build_sphere_cap(p.cap_radius, p.grid_n > 0 ? p.grid_n : 24);
  if (name == "irrational-flow") return build_irrational_flow(p.slope);
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

}  // namespace qf
