#include "qf/paths.hpp"

#include "qf/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace qf {

void QuotientPath::validate() const {
  if (knots.size() < 2) throw std::invalid_argument("a path needs at least two knots");
  if (params.size() != knots.size()) throw std::invalid_argument("one parameter per knot is required");
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (!(params[i] > params[i - 1])) throw std::invalid_argument("path parameters must increase strictly");
  }
}

namespace {

double partition_sum(const Scenario& S, const std::vector<QuotientPoint>& knots) {
  double sum = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) sum += induced_metric(S, knots[i - 1], knots[i]);
  return sum;
}

std::vector<QuotientPoint> refine(const Scenario& S, const std::vector<QuotientPoint>& knots) {
  std::vector<QuotientPoint> out;
  out.reserve(2 * knots.size() - 1);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    out.push_back(knots[i]);
    out.push_back({interpolate(S.group, knots[i].rep, knots[i + 1].rep, 0.5)});
  }
  out.push_back(knots.back());
  return out;
}

}  // namespace

LengthSequence path_length(const Scenario& S, const QuotientPath& path, int refinements) {
  path.validate();
  if (refinements < 0) throw std::invalid_argument("refinements must be nonnegative");
  LengthSequence out;
  auto knots = path.knots;
  for (int k = 0; k <= refinements; ++k) {
    if (k > 0) knots = refine(S, knots);
    out.sums.push_back(partition_sum(S, knots));
  }
  out.value = out.sums.back();
  if (out.sums.size() > 1) out.error_estimate = std::abs(out.sums.back() - out.sums[out.sums.size() - 2]);
  return out;
}

QuotientPath orbit_path(const Scenario& S, const AlgebraVector& v, double a, double b) {
  if (!(b > a)) throw std::invalid_argument("orbit interval needs b > a");
  const long segments = std::max(1L, std::lround(b - a));
  QuotientPath path;
  for (long i = 0; i <= segments; ++i) {
    const double t = a + (b - a) * static_cast<double>(i) / static_cast<double>(segments);
    path.knots.push_back({exp_map(S.group, v, t)});
    path.params.push_back(t);
  }
  return path;
}

double orbit_length_homogeneity(const Scenario& S, const AlgebraVector& v, double a, double b,
                                int refinements) {
  const double whole = path_length(S, orbit_path(S, v, a, b), refinements).value;
  const double unit = path_length(S, orbit_path(S, v, 0.0, 1.0), refinements).value;
  return std::abs(whole - (b - a) * unit);
}

IntrinsicResult intrinsic_distance(const Scenario& S, const QuotientPoint& g1, const QuotientPoint& g2,
                                   int knots, int iters, const IntrinsicOptions& options) {
  if (knots < 0) throw std::invalid_argument("knot count must be nonnegative");
  const GroupModel& G = S.group;
  validate(G, g1.rep);
  validate(G, g2.rep);

  IntrinsicResult result;
  result.induced = induced_metric(S, g1, g2);
  const double separation = coordinate_distance(G, g1.rep, g2.rep);
  if (result.induced == 0.0 || separation == 0.0 || knots == 0) {
    result.value = result.induced;
    result.polyline = {g1, g2};
    return result;
  }

  const int dim = G.algebra_dim;
  const int n = knots * dim;
  std::vector<GroupElement> base;
  for (int i = 1; i <= knots; ++i) {
    base.push_back(interpolate(G, g1.rep, g2.rep, static_cast<double>(i) / (knots + 1)));
  }

  // Interior knot i is base[i] exp(offset_i).
  auto polyline = [&](const Eigen::VectorXd& offsets) {
    std::vector<QuotientPoint> pts{g1};
    for (int i = 0; i < knots; ++i) {
      pts.push_back({compose(G, base[static_cast<std::size_t>(i)], exp_map(G, offsets.segment(i * dim, dim)))});
    }
    pts.push_back(g2);
    return pts;
  };
  auto objective = [&](const Eigen::VectorXd& offsets) { return partition_sum(S, polyline(offsets)); };

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(-1.0, 1.0);

  double best_value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_offsets = Eigen::VectorXd::Zero(n);
  for (int run = 0; run <= options.restarts; ++run) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    if (run > 0) {
      for (int i = 0; i < n; ++i) x[i] = options.initial_step * separation * jitter(rng);
    }
    double fx = objective(x);
    double step = options.initial_step * separation;
    while (step >= options.min_step) {
      if (result.polls >= iters) {
        best_value = std::min(best_value, fx);
        std::ostringstream os;
        os << "pattern search used its budget of " << iters << " polls";
        throw IterationBudgetExceeded(os.str(), best_value);
      }
      ++result.polls;
      bool improved = false;
      for (int i = 0; i < n && !improved; ++i) {
        for (double sign : {1.0, -1.0}) {
          Eigen::VectorXd trial = x;
          trial[i] += sign * step;
          const double ft = objective(trial);
          if (ft < fx - 1e-14 * fx) {
            x = std::move(trial);
            fx = ft;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= options.shrink;
    }
    if (fx < best_value) {
      best_value = fx;
      best_offsets = x;
    }
  }
  result.value = best_value;
  result.polyline = polyline(best_offsets);
  return result;
}

NormEstimate quotient_speed(const Scenario& S, const QuotientCurve& curve, double t0,
                            const StepLadder& ladder) {
  const QuotientPoint base{curve(t0)};
  validate(S.group, base.rep);
  return two_sided_limit(
      [&](double h) { return induced_metric(S, {curve(t0 + h)}, base) / std::abs(h); }, ladder);
}

}  // namespace qf
