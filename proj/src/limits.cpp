#include "qf/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qf {

void StepLadder::validate() const {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw std::invalid_argument("ladder t0 must be positive");
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("ladder ratio must lie in (0, 1)");
  if (depth < 3) throw std::invalid_argument("ladder depth must be >= 3");
}

std::vector<double> StepLadder::steps() const {
  validate();
  std::vector<double> t(static_cast<std::size_t>(depth));
  double step = t0;
  for (auto& s : t) {
    s = step;
    step *= ratio;
  }
  return t;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::LimitLadder: return "LimitLadder";
    case Method::SupKilling: return "SupKilling";
    case Method::SupContinuous: return "SupContinuous";
    case Method::ClosedForm: return "ClosedForm";
  }
  return "?";
}

namespace {

LadderLimit extrapolate(std::span<const double> raw, double factor) {
  LadderLimit out;
  if (raw.size() < 2) {
    out.value = raw.empty() ? 0.0 : raw.back();
    return out;
  }
  for (std::size_t k = 1; k < raw.size(); ++k) {
    out.extrapolants.push_back((raw[k] - factor * raw[k - 1]) / (1.0 - factor));
  }
  const auto& r = out.extrapolants;
  out.value = r.back();
  const std::size_t first = r.size() > 3 ? r.size() - 3 : 1;
  for (std::size_t k = first; k < r.size(); ++k) {
    out.error = std::max(out.error, std::abs(r[k] - r[k - 1]));
  }
  if (r.size() == 1) out.error = std::abs(r[0] - raw.back());
  return out;
}

}  // namespace

LadderLimit extrapolate_linear(std::span<const double> raw, double ratio) {
  return extrapolate(raw, ratio);
}

LadderLimit extrapolate_quadratic(std::span<const double> raw, double ratio) {
  return extrapolate(raw, ratio * ratio);
}

NormEstimate two_sided_limit(const std::function<double(double)>& quotient, const StepLadder& ladder,
                             Sides sides, Method method) {
  const auto steps = ladder.steps();
  NormEstimate est;
  est.method = method;

  const bool fwd = sides != Sides::Backward;
  const bool bwd = sides != Sides::Forward;
  double err = 0.0;
  if (fwd) {
    for (double t : steps) est.ladder_values.push_back(quotient(t));
    const auto lim = extrapolate_linear(est.ladder_values, ladder.ratio);
    est.forward = lim.value;
    err = std::max(err, lim.error);
  }
  if (bwd) {
    for (double t : steps) est.backward_values.push_back(quotient(-t));
    const auto lim = extrapolate_linear(est.backward_values, ladder.ratio);
    est.backward = lim.value;
    err = std::max(err, lim.error);
  }
  if (!fwd) est.forward = est.backward;
  if (!bwd) est.backward = est.forward;
  est.value = std::max(0.0, std::max(est.forward, est.backward));
  est.error_estimate = err;

  if (!std::isfinite(est.value) || err > kLadderConvergenceTol * std::max(1.0, est.value)) {
    std::vector<double> raw = est.ladder_values;
    raw.insert(raw.end(), est.backward_values.begin(), est.backward_values.end());
    std::ostringstream os;
    os << "ladder did not settle: value " << est.value << ", error estimate " << err;
    throw NonConvergent(os.str(), std::move(raw));
  }
  return est;
}

NormEstimate speed_estimate(const ModelManifold& m, const Curve& curve, double t0,
                            const StepLadder& ladder, Sides sides) {
  const Point base = canonicalize(m, curve(t0));
  validate(m, base);
  return two_sided_limit(
      [&](double h) {
        const Point p = canonicalize(m, curve(t0 + h));
        validate(m, p);
        return distance(m, p, base) / std::abs(h);
      },
      ladder, sides);
}

}  // namespace qf
