#pragma once

#include "qf/geometry.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qf {

// Geometric sequence of step sizes t_k = t0 * ratio^k, k = 0 .. depth-1.
struct StepLadder {
  double t0 = 1e-2;
  double ratio = 0.5;
  int depth = 11;

  void validate() const;
  std::vector<double> steps() const;
};

enum class Method { LimitLadder, SupKilling, SupContinuous, ClosedForm };

std::string to_string(Method m);

struct NormEstimate {
  double value = 0.0;
  Method method = Method::LimitLadder;
  // Raw quotients at each rung; backward_values is empty for one-sided limits.
  std::vector<double> ladder_values;
  std::vector<double> backward_values;
  double forward = 0.0;
  double backward = 0.0;
  double error_estimate = 0.0;
  // Sample indices attaining the max (within 1e-12), for sup-type estimators.
  std::vector<std::size_t> argmax;
};

// Raised when successive extrapolants along a ladder fail to settle.
class NonConvergent : public std::runtime_error {
 public:
  NonConvergent(const std::string& what, std::vector<double> raw)
      : std::runtime_error(what), raw_values(std::move(raw)) {}
  std::vector<double> raw_values;
};

struct LadderLimit {
  double value = 0.0;
  double error = 0.0;
  std::vector<double> extrapolants;
};

// One-step Richardson extrapolation for quotients that are linear in t near
// the limit: R_k = (f_k - r f_{k-1}) / (1 - r). The error estimate is the
// largest of the last (up to three) successive extrapolant differences.
LadderLimit extrapolate_linear(std::span<const double> raw, double ratio);

// Same for quotients with an O(t^2) leading error (central differences).
LadderLimit extrapolate_quadratic(std::span<const double> raw, double ratio);

// Relative size of the error estimate above which a ladder is reported as
// non-convergent.
inline constexpr double kLadderConvergenceTol = 1e-2;

enum class Sides { Both, Forward, Backward };

// Evaluates quotient(h) at h = +t_k and/or h = -t_k and extrapolates each side.
// The value is the larger side; the error estimate the larger side error.
NormEstimate two_sided_limit(const std::function<double(double)>& quotient, const StepLadder& ladder,
                             Sides sides = Sides::Both, Method method = Method::LimitLadder);

using Curve = std::function<Point(double)>;

// Metric speed lim d(c(t), c(t0)) / |t - t0| of a chart curve.
NormEstimate speed_estimate(const ModelManifold& m, const Curve& curve, double t0,
                            const StepLadder& ladder = {}, Sides sides = Sides::Both);

}  // namespace qf
