#include "qf/finsler.hpp"

#include "qf/nearest.hpp"
#include "qf/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qf {

namespace {

constexpr double kDegenerateBasis = 1e-10;
constexpr double kArgmaxTie = 1e-12;

NormEstimate scaled(NormEstimate est, double s) {
  est.value *= s;
  est.forward *= s;
  est.backward *= s;
  est.error_estimate *= s;
  for (auto& x : est.ladder_values) x *= s;
  for (auto& x : est.backward_values) x *= s;
  return est;
}

NormEstimate zero_estimate(Method method) {
  NormEstimate est;
  est.method = method;
  return est;
}

}  // namespace

NormEstimate finsler_limit(const Scenario& S, const AlgebraVector& v) {
  return finsler_limit(S, v, S.ladder);
}

NormEstimate finsler_limit(const Scenario& S, const AlgebraVector& v, const StepLadder& ladder) {
  return finsler_limit_at(S, identity(S.group), v, ladder);
}

NormEstimate finsler_limit_at(const Scenario& S, const GroupElement& g, const AlgebraVector& v,
                              const StepLadder& ladder) {
  validate_algebra(S.group, v);
  validate(S.group, g);
  const double scale = v.norm();
  if (scale == 0.0) return zero_estimate(Method::LimitLadder);
  const AlgebraVector u = v / scale;
  const QuotientPoint base{g};
  const auto est = two_sided_limit(
      [&](double h) {
        const QuotientPoint moved{compose(S.group, g, exp_map(S.group, u, h))};
        return induced_metric(S, moved, base) / std::abs(h);
      },
      ladder, Sides::Both, Method::LimitLadder);
  return scaled(est, scale);
}

NormEstimate finsler_sup_killing(const Scenario& S, const AlgebraVector& v) {
  validate_algebra(S.group, v);
  const ModelManifold& m = S.manifold;
  NormEstimate est = zero_estimate(Method::SupKilling);
  std::vector<double> norms;
  norms.reserve(S.X.points.size());

  for (std::size_t i = 0; i < S.X.points.size(); ++i) {
    const Point& x = S.X.points[i];
    Vector k = killing_field(S.group, m, v, x).components;
    if (const auto it = S.X.tangent_basis.find(i); it != S.X.tangent_basis.end()) {
      // Gram-Schmidt in g_x, then remove the tangential part of K_v(x).
      std::vector<Vector> ortho;
      for (const Vector& e : it->second) {
        Vector w = e;
        for (const Vector& q : ortho) w -= riemannian_inner(m, x, w, q) * q;
        const double n = std::sqrt(std::max(0.0, riemannian_inner(m, x, w, w)));
        if (n < kDegenerateBasis) continue;
        ortho.push_back(w / n);
      }
      for (const Vector& q : ortho) k -= riemannian_inner(m, x, k, q) * q;
    }
    norms.push_back(riemannian_norm(m, {x, k}));
  }

  est.value = *std::max_element(norms.begin(), norms.end());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (est.value - norms[i] <= kArgmaxTie) est.argmax.push_back(i);
  }
  est.forward = est.backward = est.value;
  return est;
}

NormEstimate finsler_sup_continuous(const Scenario& S, const AlgebraVector& v) {
  return finsler_sup_continuous(S, v, S.ladder);
}

NormEstimate finsler_sup_continuous(const Scenario& S, const AlgebraVector& v, const StepLadder& ladder) {
  validate_algebra(S.group, v);
  const double scale = v.norm();
  if (scale == 0.0) return zero_estimate(Method::SupContinuous);
  const AlgebraVector u = v / scale;
  const NearestIndex index(S.manifold, S.X.points);
  const auto est = two_sided_limit(
      [&](double h) {
        const GroupElement g = exp_map(S.group, u, h);
        double worst = 0.0;
        for (const auto& x : S.X.points) {
          const auto hit = index.nearest(act(S.group, S.manifold, g, x), worst);
          worst = std::max(worst, hit.distance);
        }
        return worst / std::abs(h);
      },
      ladder, Sides::Both, Method::SupContinuous);
  return scaled(est, scale);
}

EstimatorComparison compare_estimators(const Scenario& S, const AlgebraVector& v) {
  EstimatorComparison c;
  c.limit = finsler_limit(S, v);
  c.sup_killing = finsler_sup_killing(S, v);
  c.sup_continuous = finsler_sup_continuous(S, v);
  if (S.closed_form) c.closed_form = S.closed_form(v);
  const double values[3] = {c.limit.value, c.sup_killing.value, c.sup_continuous.value};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) c.max_pairwise_gap = std::max(c.max_pairwise_gap, std::abs(values[i] - values[j]));
  }
  c.combined_error = c.limit.error_estimate + c.sup_killing.error_estimate + c.sup_continuous.error_estimate;
  c.tolerance = std::max(1e-3, 3.0 * c.combined_error);
  c.agree = c.max_pairwise_gap <= c.tolerance;
  return c;
}

GroupElement random_element(const GroupModel& G, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  switch (G.kind) {
    case GroupKind::TranslationRn:
    case GroupKind::LineFlow: {
      GroupElement g(G.param_dim);
      for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = scale * unit(rng);
      return g;
    }
    case GroupKind::TranslationTorus2: {
      GroupElement g(2);
      for (Eigen::Index i = 0; i < 2; ++i) g[i] = wrap_unit(scale * unit(rng));
      return g;
    }
    case GroupKind::HyperbolicAffine: {
      const double g1 = scale * unit(rng);
      const double g2 = std::exp(0.7 * scale * unit(rng));
      return Eigen::Vector2d(g1, g2);
    }
    case GroupKind::Rotation3: {
      AlgebraVector axis = random_direction(G, rng);
      const double angle = scale * 0.5 * (1.0 + unit(rng));
      return exp_map(G, axis, angle);
    }
  }
  return identity(G);
}

AlgebraVector random_direction(const GroupModel& G, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  AlgebraVector v(G.algebra_dim);
  do {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
  } while (v.norm() < 1e-8);
  return v / v.norm();
}

namespace {

double evaluate_norm(const Scenario& S, const AlgebraVector& v, NormSource source) {
  switch (source) {
    case NormSource::SupKilling: return finsler_sup_killing(S, v).value;
    case NormSource::Limit: return finsler_limit(S, v).value;
    case NormSource::ClosedForm:
      if (!S.closed_form) throw std::invalid_argument("scenario " + S.name + " has no closed form");
      return S.closed_form(v);
  }
  return 0.0;
}

}  // namespace

NormAxiomReport norm_axiom_check(const Scenario& S, int trials, NormSource source, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  std::uniform_real_distribution<double> length(0.2, 2.0);
  NormAxiomReport r;
  r.trials = trials;
  r.zero_value = evaluate_norm(S, AlgebraVector::Zero(S.group.algebra_dim), source);
  for (int k = 0; k < trials; ++k) {
    const AlgebraVector v = length(rng) * random_direction(S.group, rng);
    const AlgebraVector w = length(rng) * random_direction(S.group, rng);
    const double a = coeff(rng);
    const double fv = evaluate_norm(S, v, source);
    const double fw = evaluate_norm(S, w, source);

    const double sym = std::abs(evaluate_norm(S, -v, source) - fv);
    r.max_symmetry = std::max(r.max_symmetry, sym);

    const double hom = std::abs(evaluate_norm(S, a * v, source) - std::abs(a) * fv);
    if (hom >= r.max_homogeneity) {
      r.max_homogeneity = hom;
      r.worst_homogeneity_v = v;
      r.worst_homogeneity_a = a;
    }

    const double tri = std::max(0.0, evaluate_norm(S, v + w, source) - fv - fw);
    if (tri >= r.max_triangle_violation) {
      r.max_triangle_violation = tri;
      r.worst_triangle_v = v;
      r.worst_triangle_w = w;
    }
  }
  return r;
}

InvariantNormReport invariant_norm_check(const Scenario& S, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  InvariantNormReport r;
  r.trials = trials;
  for (int k = 0; k < trials; ++k) {
    const GroupElement g = random_element(S.group, rng);
    const AlgebraVector v = random_direction(S.group, rng);
    const double at_g = finsler_limit_at(S, g, v, S.ladder).value;
    const double at_e = finsler_limit(S, v).value;
    const double res = std::abs(at_g - at_e);
    if (res >= r.max_residual) {
      r.max_residual = res;
      r.worst_g = g;
      r.worst_v = v;
    }
  }
  return r;
}

BiinvariantReport biinvariant_bound_check(const Scenario& S, const AlgebraVector& v) {
  const ModelManifold& m = S.manifold;
  BiinvariantReport r;
  r.finsler = finsler_sup_killing(S, v).value;
  r.killing_norm = riemannian_norm(m, killing_field(S.group, m, v, S.X.points.front()));

  const double max_tangential = std::sin(1e-6) * r.killing_norm;
  for (std::size_t i = 0; i < S.X.points.size() && !r.has_normal_point; ++i) {
    const Point& x = S.X.points[i];
    const Vector k = killing_field(S.group, m, v, x).components;
    Vector tangential = Vector::Zero(k.size());
    if (const auto it = S.X.tangent_basis.find(i); it != S.X.tangent_basis.end()) {
      for (const Vector& e : it->second) tangential += riemannian_inner(m, x, k, e) * e;
    }
    if (riemannian_norm(m, {x, tangential}) <= max_tangential) r.has_normal_point = true;
  }
  r.bound_holds = r.finsler <= r.killing_norm + 1e-12;
  r.equality = std::abs(r.finsler - r.killing_norm) <= 1e-9 * std::max(1.0, r.killing_norm);
  r.consistent = r.bound_holds && (r.equality == r.has_normal_point);
  return r;
}

}  // namespace qf
