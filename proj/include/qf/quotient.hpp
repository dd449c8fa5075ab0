#pragma once

#include "qf/scenario.hpp"

#include <vector>

namespace qf {

// g X: every sample point moved by the action.
std::vector<Point> transform_sample(const Scenario& S, const GroupElement& g);

// d_X(g1 H_X, g2 H_X) = d_H(g1 X, g2 X).
double induced_metric(const Scenario& S, const QuotientPoint& g1, const QuotientPoint& g2);

// |d_X(a g, a h) - d_X(g, h)|
double invariance_check(const Scenario& S, const QuotientPoint& a, const QuotientPoint& g,
                        const QuotientPoint& h);

}  // namespace qf
