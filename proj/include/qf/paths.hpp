#pragma once

#include "qf/limits.hpp"
#include "qf/scenario.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qf {

// Polyline in G/H_X through representatives; consecutive knots are joined by
// `interpolate` in group coordinates.
struct QuotientPath {
  std::vector<QuotientPoint> knots;
  std::vector<double> params;

  void validate() const;
};

struct LengthSequence {
  // Partition sums for the nested partitions, coarsest first.
  std::vector<double> sums;
  double value = 0.0;
  // Gap between the last two sums.
  double error_estimate = 0.0;
};

// Partition sums of the path length under d_X. Each refinement inserts the
// group-coordinate midpoint of every segment.
LengthSequence path_length(const Scenario& S, const QuotientPath& path, int refinements);

// Path t -> exp(t v) sampled on [a, b] with max(1, round(b - a)) segments.
QuotientPath orbit_path(const Scenario& S, const AlgebraVector& v, double a, double b);

// |l(eta|[a,b]) - (b - a) l(eta|[0,1])| for eta(t) = exp(tv), with both
// lengths taken at matching mesh size after `refinements` doublings.
double orbit_length_homogeneity(const Scenario& S, const AlgebraVector& v, double a, double b,
                                 int refinements);

class IterationBudgetExceeded : public std::runtime_error {
 public:
  IterationBudgetExceeded(const std::string& what, double best_value)
      : std::runtime_error(what), best(best_value) {}
  double best;
};

struct IntrinsicOptions {
  int restarts = 3;           // jittered restarts after the straight start
  double initial_step = 0.1;  // fraction of the endpoint separation
  double shrink = 0.5;
  double min_step = 1e-6;
  std::uint64_t seed = 7;
};

struct IntrinsicResult {
  double value = 0.0;
  // d_X between the endpoints; value never drops below it.
  double induced = 0.0;
  int polls = 0;
  std::vector<QuotientPoint> polyline;
};

// Upper estimate of the intrinsic distance: shortest polyline with `knots`
// interior knots found by compass search. Throws IterationBudgetExceeded
// (carrying the best value) when `iters` polls do not reach the minimum step.
IntrinsicResult intrinsic_distance(const Scenario& S, const QuotientPoint& g1, const QuotientPoint& g2,
                                   int knots, int iters, const IntrinsicOptions& options = {});

using QuotientCurve = std::function<GroupElement(double)>;

// lim d_X(c(t0 + h), c(t0)) / |h|, both sides.
NormEstimate quotient_speed(const Scenario& S, const QuotientCurve& curve, double t0,
                            const StepLadder& ladder = {});

}  // namespace qf
