#include "qf/quotient.hpp"

#include "qf/nearest.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>

namespace qf {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Reference: return "reference";
    case Provenance::Oracle: return "oracle";
    case Provenance::Trivial: return "trivial";
  }
  return "?";
}

void validate(const Scenario& S) {
  if (!S.group.acts_on(S.manifold)) {
    throw InvalidElement(S.group.name() + " does not act on " + S.manifold.name());
  }
  validate(S.manifold, S.X);
  S.ladder.validate();
}

std::vector<Point> transform_sample(const Scenario& S, const GroupElement& g) {
  validate(S.group, g);
  std::vector<Point> out;
  out.reserve(S.X.points.size());
  for (const auto& x : S.X.points) out.push_back(act(S.group, S.manifold, g, x));
  return out;
}

struct SampleIndexCache {
  std::vector<Point> points;
  std::optional<NearestIndex> index;
};

namespace {

std::mutex cache_mutex;

std::shared_ptr<const SampleIndexCache> sample_index(const Scenario& S) {
  const std::lock_guard lock(cache_mutex);
  auto& c = S.x_index;
  const bool stale = !c || c->points.size() != S.X.points.size() ||
                     !std::equal(c->points.begin(), c->points.end(), S.X.points.begin(),
                                 [](const Point& a, const Point& b) { return a.size() == b.size() && a == b; });
  if (stale) {
    auto fresh = std::make_shared<SampleIndexCache>();
    fresh->points = S.X.points;
    fresh->index.emplace(S.manifold, fresh->points);
    c = std::move(fresh);
  }
  return c;
}

double directed_to_sample(const Scenario& S, const std::vector<Point>& A) {
  const auto cache = sample_index(S);
  double worst = 0.0;
  for (const auto& a : A) worst = std::max(worst, cache->index->nearest(a, worst).distance);
  return worst;
}

}  // namespace

// The action is isometric, so d_H(g1 X, g2 X) = d_H(g X, X) with g = g2^-1 g1,
// and d(x, g X) = d(g^-1 x, X). Both directions then query one index over X.
double induced_metric(const Scenario& S, const QuotientPoint& g1, const QuotientPoint& g2) {
  validate(S.group, g1.rep);
  validate(S.group, g2.rep);
  if (S.X.points.empty()) throw EmptySample("induced_metric: empty sample");
  if (g1.rep == g2.rep) return 0.0;
  const GroupElement g = compose(S.group, inverse(S.group, g2.rep), g1.rep);
  return std::max(directed_to_sample(S, transform_sample(S, g)),
                  directed_to_sample(S, transform_sample(S, inverse(S.group, g))));
}

double invariance_check(const Scenario& S, const QuotientPoint& a, const QuotientPoint& g,
                        const QuotientPoint& h) {
  const QuotientPoint ag{compose(S.group, a.rep, g.rep)};
  const QuotientPoint ah{compose(S.group, a.rep, h.rep)};
  return std::abs(induced_metric(S, ag, ah) - induced_metric(S, g, h));
}

}  // namespace qf
