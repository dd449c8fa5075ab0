#include "qf/group.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <sstream>

namespace qf {

GroupModel GroupModel::translation_rn(int n) {
  if (n < 1) throw InvalidElement("translation dimension must be >= 1");
  return {GroupKind::TranslationRn, n, n, 0.0};
}
GroupModel GroupModel::translation_torus() { return {GroupKind::TranslationTorus2, 2, 2, 0.0}; }
GroupModel GroupModel::hyperbolic_affine() { return {GroupKind::HyperbolicAffine, 2, 2, 0.0}; }
GroupModel GroupModel::rotation3() { return {GroupKind::Rotation3, 3, 9, 0.0}; }
GroupModel GroupModel::line_flow(double slope) { return {GroupKind::LineFlow, 1, 1, slope}; }

std::string GroupModel::name() const {
  std::ostringstream os;
  switch (kind) {
    case GroupKind::TranslationRn: os << "TranslationRn(" << algebra_dim << ")"; break;
    case GroupKind::TranslationTorus2: os << "TranslationTorus2"; break;
    case GroupKind::HyperbolicAffine: os << "HyperbolicAffine"; break;
    case GroupKind::Rotation3: os << "Rotation3"; break;
    case GroupKind::LineFlow: os << "LineFlow(" << slope << ")"; break;
  }
  return os.str();
}

bool GroupModel::acts_on(const ModelManifold& m) const {
  switch (kind) {
    case GroupKind::TranslationRn: return m.kind == ManifoldKind::Euclidean && m.chart_dim == algebra_dim;
    case GroupKind::TranslationTorus2:
    case GroupKind::LineFlow: return m.kind == ManifoldKind::FlatTorus2;
    case GroupKind::HyperbolicAffine: return m.kind == ManifoldKind::HyperbolicHalfPlane;
    case GroupKind::Rotation3: return m.kind == ManifoldKind::Sphere2;
  }
  return false;
}

Eigen::Matrix3d rotation_matrix(const GroupElement& g) {
  return Eigen::Map<const Eigen::Matrix3d>(g.data());
}

GroupElement from_rotation(const Eigen::Matrix3d& R) {
  return Eigen::Map<const Eigen::VectorXd>(R.data(), 9);
}

void validate(const GroupModel& G, const GroupElement& g) {
  if (g.size() != G.param_dim || !g.allFinite()) {
    throw InvalidElement("group element has wrong size or non-finite entries for " + G.name());
  }
  if (G.kind == GroupKind::HyperbolicAffine && !(g[1] > 0.0)) {
    throw InvalidElement("HyperbolicAffine element requires g2 > 0");
  }
  if (G.kind == GroupKind::Rotation3) {
    const Eigen::Matrix3d R = rotation_matrix(g);
    const double orth = (R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (orth > 1e-9 || std::abs(R.determinant() - 1.0) > 1e-10) {
      throw InvalidElement("Rotation3 element is not a proper orthonormal matrix");
    }
  }
}

void validate_algebra(const GroupModel& G, const AlgebraVector& v) {
  if (v.size() != G.algebra_dim || !v.allFinite()) {
    throw InvalidElement("algebra vector has wrong size or non-finite entries for " + G.name());
  }
}

namespace {

Eigen::VectorXd wrap_all(Eigen::VectorXd g) {
  for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = wrap_unit(g[i]);
  return g;
}

// (e^{x} - 1) / x with a series for small |x|.
double expm1_over_x(double x) {
  if (std::abs(x) < 1e-6) return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
  return std::expm1(x) / x;
}

Eigen::Matrix3d hat(const Eigen::Vector3d& w) {
  Eigen::Matrix3d W;
  W << 0.0, -w[2], w[1], w[2], 0.0, -w[0], -w[1], w[0], 0.0;
  return W;
}

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& w) {
  const double theta = w.norm();
  const Eigen::Matrix3d W = hat(w);
  double a, b;
  if (theta < 1e-6) {
    const double t2 = theta * theta;
    a = 1.0 - t2 / 6.0;
    b = 0.5 - t2 / 24.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / (theta * theta);
  }
  return Eigen::Matrix3d::Identity() + a * W + b * W * W;
}

}  // namespace

GroupElement identity(const GroupModel& G) {
  switch (G.kind) {
    case GroupKind::HyperbolicAffine: return Eigen::Vector2d(0.0, 1.0);
    case GroupKind::Rotation3: return from_rotation(Eigen::Matrix3d::Identity());
    default: return Eigen::VectorXd::Zero(G.param_dim);
  }
}

GroupElement compose(const GroupModel& G, const GroupElement& g, const GroupElement& h) {
  validate(G, g);
  validate(G, h);
  switch (G.kind) {
    case GroupKind::TranslationRn:
    case GroupKind::LineFlow: return g + h;
    case GroupKind::TranslationTorus2: return wrap_all(g + h);
    case GroupKind::HyperbolicAffine: return Eigen::Vector2d(g[1] * h[0] + g[0], g[1] * h[1]);
    case GroupKind::Rotation3: return from_rotation(rotation_matrix(g) * rotation_matrix(h));
  }
  return g;
}

GroupElement inverse(const GroupModel& G, const GroupElement& g) {
  validate(G, g);
  switch (G.kind) {
    case GroupKind::TranslationRn:
    case GroupKind::LineFlow: return -g;
    case GroupKind::TranslationTorus2: return wrap_all(-g);
    case GroupKind::HyperbolicAffine: return Eigen::Vector2d(-g[0] / g[1], 1.0 / g[1]);
    case GroupKind::Rotation3: return from_rotation(rotation_matrix(g).transpose());
  }
  return g;
}

GroupElement exp_map(const GroupModel& G, const AlgebraVector& v, double t) {
  validate_algebra(G, v);
  switch (G.kind) {
    case GroupKind::TranslationRn:
    case GroupKind::LineFlow: return t * v;
    case GroupKind::TranslationTorus2: return wrap_all(t * v);
    case GroupKind::HyperbolicAffine: {
      const double alpha = v[0], beta = v[1];
      const double tb = t * beta;
      return Eigen::Vector2d(alpha * t * expm1_over_x(tb), std::exp(tb));
    }
    case GroupKind::Rotation3: return from_rotation(rodrigues(t * Eigen::Vector3d(v)));
  }
  return v;
}

AlgebraVector log_map(const GroupModel& G, const GroupElement& g) {
  validate(G, g);
  switch (G.kind) {
    case GroupKind::TranslationRn:
    case GroupKind::LineFlow: return g;
    case GroupKind::TranslationTorus2: {
      Eigen::VectorXd d = g;
      for (Eigen::Index i = 0; i < d.size(); ++i) d[i] -= std::round(d[i]);
      return d;
    }
    case GroupKind::HyperbolicAffine: {
      const double beta = std::log(g[1]);
      return Eigen::Vector2d(g[0] / expm1_over_x(beta), beta);
    }
    case GroupKind::Rotation3: {
      const Eigen::AngleAxisd aa(rotation_matrix(g));
      return aa.angle() * aa.axis();
    }
  }
  return g;
}

GroupElement interpolate(const GroupModel& G, const GroupElement& g, const GroupElement& h, double s) {
  switch (G.kind) {
    case GroupKind::TranslationRn:
    case GroupKind::LineFlow:
      validate(G, g);
      validate(G, h);
      return g + s * (h - g);
    case GroupKind::TranslationTorus2: {
      validate(G, g);
      validate(G, h);
      Eigen::VectorXd d = h - g;
      for (Eigen::Index i = 0; i < d.size(); ++i) d[i] -= std::round(d[i]);
      return wrap_all(g + s * d);
    }
    default: {
      const AlgebraVector step = log_map(G, compose(G, inverse(G, g), h));
      return compose(G, g, exp_map(G, step, s));
    }
  }
}

double coordinate_distance(const GroupModel& G, const GroupElement& g, const GroupElement& h) {
  if (G.kind == GroupKind::Rotation3) return log_map(G, compose(G, inverse(G, g), h)).norm();
  if (G.kind == GroupKind::TranslationTorus2) return log_map(G, wrap_all(h - g)).norm();
  return (h - g).norm();
}

Point act(const GroupModel& G, const ModelManifold& m, const GroupElement& g, const Point& p) {
  if (!G.acts_on(m)) throw InvalidElement(G.name() + " does not act on " + m.name());
  if (g.size() != G.param_dim || !g.allFinite()) {
    throw InvalidElement("group element has wrong size or non-finite entries for " + G.name());
  }
  switch (G.kind) {
    case GroupKind::TranslationRn: validate(m, p); return p + g;
    case GroupKind::TranslationTorus2: {
      Point q = p + g;
      q[0] = wrap_unit(q[0]);
      q[1] = wrap_unit(q[1]);
      return q;
    }
    case GroupKind::LineFlow: {
      Point q(2);
      q[0] = wrap_unit(p[0] + g[0]);
      q[1] = wrap_unit(p[1] + G.slope * g[0]);
      return q;
    }
    case GroupKind::HyperbolicAffine: {
      if (!(g[1] > 0.0)) throw InvalidElement("HyperbolicAffine element requires g2 > 0");
      validate(m, p);
      return Eigen::Vector2d(g[1] * p[0] + g[0], g[1] * p[1]);
    }
    case GroupKind::Rotation3: {
      validate(m, p);
      // Skip the chart round trip so the identity acts exactly.
      if (g == identity(G)) return p;
      return sphere_from_embedding(m, rotation_matrix(g) * sphere_to_embedding(m, p));
    }
  }
  return p;
}

TangentVector killing_field(const GroupModel& G, const ModelManifold& m, const AlgebraVector& v,
                            const Point& p) {
  validate_algebra(G, v);
  const Point base = canonicalize(m, p);
  validate(m, base);
  switch (G.kind) {
    case GroupKind::TranslationRn:
    case GroupKind::TranslationTorus2: return {base, v};
    case GroupKind::LineFlow: return {base, Eigen::Vector2d(v[0], G.slope * v[0])};
    case GroupKind::HyperbolicAffine: {
      const double alpha = v[0], beta = v[1];
      return {base, Eigen::Vector2d(beta * base[0] + alpha, beta * base[1])};
    }
    case GroupKind::Rotation3: {
      const Eigen::Vector3d x = sphere_to_embedding(m, base);
      const Eigen::Vector3d w = Eigen::Vector3d(v).cross(x);
      return {base, sphere_chart_pushforward(m, x, w)};
    }
  }
  return {base, v};
}

TangentVector killing_field_numeric(const GroupModel& G, const ModelManifold& m,
                                    const AlgebraVector& v, const Point& p,
                                    const StepLadder& ladder) {
  validate_algebra(G, v);
  const Point base = canonicalize(m, p);
  validate(m, base);
  const auto steps = ladder.steps();
  const Eigen::Index n = m.chart_dim;
  std::vector<std::vector<double>> per_component(static_cast<std::size_t>(n));
  for (double h : steps) {
    const Point fwd = act(G, m, exp_map(G, v, h), base);
    const Point bwd = act(G, m, exp_map(G, v, -h), base);
    const Vector diff = chart_difference(m, bwd, fwd) / (2.0 * h);
    for (Eigen::Index i = 0; i < n; ++i) per_component[static_cast<std::size_t>(i)].push_back(diff[i]);
  }
  Vector out(n);
  double err = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto lim = extrapolate_quadratic(per_component[static_cast<std::size_t>(i)], ladder.ratio);
    out[i] = lim.value;
    err = std::max(err, lim.error);
  }
  if (err > kLadderConvergenceTol * std::max(1.0, out.norm())) {
    std::vector<double> raw;
    for (const auto& c : per_component) raw.insert(raw.end(), c.begin(), c.end());
    throw NonConvergent("Killing field finite differences did not settle", std::move(raw));
  }
  return {base, out};
}

Vector action_pushforward(const GroupModel& G, const ModelManifold& m, const GroupElement& g,
                          const Point& p, const Vector& w, double h) {
  const Point plus = act(G, m, g, canonicalize(m, p + h * w));
  const Point minus = act(G, m, g, canonicalize(m, p - h * w));
  return chart_difference(m, minus, plus) / (2.0 * h);
}

}  // namespace qf
