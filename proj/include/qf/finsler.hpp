#pragma once

#include "qf/limits.hpp"
#include "qf/scenario.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qf {

// F(v + h_X) = lim_{t->0} d_X(exp(tv) H_X, H_X) / |t|, two-sided. The ladder
// steps are measured along the unit direction v / |v|, so every direction is
// probed at the same displacement scale.
NormEstimate finsler_limit(const Scenario& S, const AlgebraVector& v);
NormEstimate finsler_limit(const Scenario& S, const AlgebraVector& v, const StepLadder& ladder);

// Same limit based at g H_X: lim d_X(g exp(tv) H_X, g H_X) / |t|.
NormEstimate finsler_limit_at(const Scenario& S, const GroupElement& g, const AlgebraVector& v,
                              const StepLadder& ladder);

// max over samples of the Riemannian norm of K_v(x), projected onto the
// normal complement of T_x X where a tangent basis is given.
NormEstimate finsler_sup_killing(const Scenario& S, const AlgebraVector& v);

// lim_{t->0} max(sup_x d(X, exp(tv) x), sup_x d(X, exp(-tv) x)) / |t|.
NormEstimate finsler_sup_continuous(const Scenario& S, const AlgebraVector& v);
NormEstimate finsler_sup_continuous(const Scenario& S, const AlgebraVector& v, const StepLadder& ladder);

struct EstimatorComparison {
  NormEstimate limit;
  NormEstimate sup_killing;
  NormEstimate sup_continuous;
  std::optional<double> closed_form;
  double max_pairwise_gap = 0.0;
  double combined_error = 0.0;
  double tolerance = 0.0;  // max(1e-3, 3 * combined_error)
  bool agree = false;
};

EstimatorComparison compare_estimators(const Scenario& S, const AlgebraVector& v);

enum class NormSource { SupKilling, Limit, ClosedForm };

struct NormAxiomReport {
  int trials = 0;
  double zero_value = 0.0;             // F(0)
  double max_symmetry = 0.0;           // |F(-v) - F(v)|
  double max_homogeneity = 0.0;        // |F(a v) - |a| F(v)|
  double max_triangle_violation = 0.0; // max(0, F(v + w) - F(v) - F(w))
  AlgebraVector worst_homogeneity_v;
  double worst_homogeneity_a = 0.0;
  AlgebraVector worst_triangle_v;
  AlgebraVector worst_triangle_w;
};

NormAxiomReport norm_axiom_check(const Scenario& S, int trials, NormSource source = NormSource::SupKilling,
                                 std::uint64_t seed = 1);

struct InvariantNormReport {
  int trials = 0;
  double max_residual = 0.0;
  GroupElement worst_g;
  AlgebraVector worst_v;
};

// Compares the limit norm at g H_X (pulled back along g) with the one at H_X
// over random g and v. Zero up to discretization by G-invariance of d_X.
InvariantNormReport invariant_norm_check(const Scenario& S, int trials, std::uint64_t seed = 1);

struct BiinvariantReport {
  double finsler = 0.0;
  double killing_norm = 0.0;
  bool bound_holds = false;      // F <= |K_v|
  bool equality = false;         // F == |K_v| within 1e-9
  bool has_normal_point = false; // some K_v(x) normal to X within 1e-6 rad
  bool consistent = false;       // bound_holds && (equality == has_normal_point)
};

// For a group acting on itself with a bi-invariant metric, where |K_v| is
// constant.
BiinvariantReport biinvariant_bound_check(const Scenario& S, const AlgebraVector& v);

// Random element of a scenario's group with coordinates of moderate size.
GroupElement random_element(const GroupModel& G, std::mt19937_64& rng, double scale = 1.0);
// Unit vector (Euclidean norm of the algebra coordinates), uniform on the sphere.
AlgebraVector random_direction(const GroupModel& G, std::mt19937_64& rng);

}  // namespace qf
