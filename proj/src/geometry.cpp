#include "qf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qf {

ModelManifold ModelManifold::euclidean(int n) {
  if (n < 1) throw DomainError("Euclidean dimension must be >= 1");
  return {ManifoldKind::Euclidean, n, 1.0};
}

ModelManifold ModelManifold::flat_torus() { return {ManifoldKind::FlatTorus2, 2, 1.0}; }

ModelManifold ModelManifold::hyperbolic_half_plane() {
  return {ManifoldKind::HyperbolicHalfPlane, 2, 1.0};
}

ModelManifold ModelManifold::sphere(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("sphere radius must be positive");
  return {ManifoldKind::Sphere2, 2, radius};
}

std::string ModelManifold::name() const {
  std::ostringstream os;
  switch (kind) {
    case ManifoldKind::Euclidean: os << "Euclidean(" << chart_dim << ")"; break;
    case ManifoldKind::FlatTorus2: os << "FlatTorus2"; break;
    case ManifoldKind::HyperbolicHalfPlane: os << "HyperbolicHalfPlane"; break;
    case ManifoldKind::Sphere2: os << "Sphere2(" << radius << ")"; break;
  }
  return os.str();
}

bool is_valid(const ModelManifold& m, const Point& p) noexcept {
  if (p.size() != m.chart_dim || !p.allFinite()) return false;
  switch (m.kind) {
    case ManifoldKind::HyperbolicHalfPlane: return p[1] > 0.0;
    case ManifoldKind::FlatTorus2: return (p.array() >= 0.0).all() && (p.array() < 1.0).all();
    default: return true;
  }
}

void validate(const ModelManifold& m, const Point& p) {
  if (is_valid(m, p)) return;
  std::ostringstream os;
  os << "invalid point (" << p.transpose() << ") for " << m.name();
  throw DomainError(os.str());
}

double wrap_unit(double x) noexcept {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

Point canonicalize(const ModelManifold& m, Point p) {
  if (m.kind == ManifoldKind::FlatTorus2) {
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = wrap_unit(p[i]);
  }
  return p;
}

namespace {

double torus_distance(const Point& p, const Point& q) noexcept {
  // Per-axis distance to the nearest integer shift; |q - p| keeps it symmetric.
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    double a = std::abs(q[i] - p[i]);
    a = std::abs(a - std::round(a));
    sum += a * a;
  }
  return std::sqrt(sum);
}

double hyperbolic_distance(const Point& p, const Point& q) noexcept {
  // 2 asinh(|p - q| / (2 sqrt(y1 y2))), the cancellation-free form of
  // arcosh(1 + |p - q|^2 / (2 y1 y2)).
  const double chord = (p - q).norm();
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p[1] * q[1])));
}

double sphere_distance(double radius, const Point& p, const Point& q) noexcept {
  const double scale = 0.5 / radius;
  const double s1 = p.squaredNorm() * scale * scale;
  const double s2 = q.squaredNorm() * scale * scale;
  const double diff = (p - q).squaredNorm() * scale * scale;
  const double half_chord = std::sqrt(diff / ((1.0 + s1) * (1.0 + s2)));
  return 2.0 * radius * std::asin(std::min(1.0, half_chord));
}

}  // namespace

double distance(const ModelManifold& m, const Point& p, const Point& q) noexcept {
  switch (m.kind) {
    case ManifoldKind::Euclidean: return (p - q).norm();
    case ManifoldKind::FlatTorus2: return torus_distance(p, q);
    case ManifoldKind::HyperbolicHalfPlane: return hyperbolic_distance(p, q);
    case ManifoldKind::Sphere2: return sphere_distance(m.radius, p, q);
  }
  return 0.0;
}

double checked_distance(const ModelManifold& m, const Point& p, const Point& q) {
  validate(m, p);
  validate(m, q);
  return distance(m, p, q);
}

Vector chart_difference(const ModelManifold& m, const Point& p, const Point& q) {
  Vector d = q - p;
  if (m.kind == ManifoldKind::FlatTorus2) {
    for (Eigen::Index i = 0; i < d.size(); ++i) d[i] -= std::round(d[i]);
  }
  return d;
}

double conformal_factor(const ModelManifold& m, const Point& p) noexcept {
  switch (m.kind) {
    case ManifoldKind::HyperbolicHalfPlane: return 1.0 / p[1];
    case ManifoldKind::Sphere2: return 1.0 / (1.0 + p.squaredNorm() / (4.0 * m.radius * m.radius));
    default: return 1.0;
  }
}

double riemannian_inner(const ModelManifold& m, const Point& p, const Vector& u, const Vector& w) {
  validate(m, canonicalize(m, p));
  if (u.size() != m.chart_dim || w.size() != m.chart_dim) {
    throw DomainError("tangent vector dimension does not match chart");
  }
  const double lambda = conformal_factor(m, p);
  return lambda * lambda * u.dot(w);
}

double riemannian_norm(const ModelManifold& m, const TangentVector& v) {
  validate(m, canonicalize(m, v.base));
  if (v.components.size() != m.chart_dim) {
    throw DomainError("tangent vector dimension does not match chart");
  }
  return conformal_factor(m, v.base) * v.components.norm();
}

Eigen::Vector3d sphere_to_embedding(const ModelManifold& m, const Point& u) {
  const double r = m.radius;
  const Eigen::Vector2d w = u.head<2>() / (2.0 * r);
  const double s = w.squaredNorm();
  return r * Eigen::Vector3d(2.0 * w[0], 2.0 * w[1], 1.0 - s) / (1.0 + s);
}

Point sphere_from_embedding(const ModelManifold& m, const Eigen::Vector3d& x) {
  const double r = m.radius;
  // Project back onto the sphere first so accumulated drift does not leak
  // into the chart.
  const Eigen::Vector3d y = x * (r / x.norm());
  Point u(2);
  u << 2.0 * r * y[0] / (r + y[2]), 2.0 * r * y[1] / (r + y[2]);
  return u;
}

Vector sphere_chart_pushforward(const ModelManifold& m, const Eigen::Vector3d& x,
                                const Eigen::Vector3d& w) {
  const double r = m.radius;
  const double denom = r + x[2];
  Vector du(2);
  du[0] = 2.0 * r * (w[0] / denom - x[0] * w[2] / (denom * denom));
  du[1] = 2.0 * r * (w[1] / denom - x[1] * w[2] / (denom * denom));
  return du;
}

}  // namespace qf
