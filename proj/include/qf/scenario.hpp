#pragma once

#include "qf/geometry.hpp"
#include "qf/group.hpp"
#include "qf/hausdorff.hpp"
#include "qf/limits.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace qf {

// Where an expected value comes from: a published closed form, an independent
// computation, or a definitional identity.
enum class Provenance { Reference, Oracle, Trivial };

std::string to_string(Provenance p);

struct Scenario;
struct SampleIndexCache;

// One row of a scenario's expected-value table.
struct ExpectedEntry {
  std::string label;
  std::function<double(const Scenario&)> evaluate;
  double expected = 0.0;
  double tolerance = 0.0;
  Provenance tag = Provenance::Trivial;
};

// A group G acting by isometries on a model manifold M together with a sampled
// compact set X. Cosets gH_X are handled through representatives g.
struct Scenario {
  std::string name;
  ModelManifold manifold;
  GroupModel group;
  CompactSample X;
  // Analytic Finsler norm on the algebra, when known.
  std::function<double(const AlgebraVector&)> closed_form;
  // Ladder for the limit-type estimators. Sampled sets need steps well above
  // the sample spacing, so the builders choose it per scenario.
  StepLadder ladder;
  std::vector<ExpectedEntry> expected;
  // Nearest-neighbour index over X, built on first use by induced_metric.
  mutable std::shared_ptr<SampleIndexCache> x_index;
};

void validate(const Scenario& S);

// A coset gH_X, held by a representative.
struct QuotientPoint {
  GroupElement rep;
};

}  // namespace qf
