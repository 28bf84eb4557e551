#pragma once

#include <vector>

#include "tracker/types.hpp"

namespace tracker {

// One-step tracking cost: over_cost per unit of overshoot, under_cost per
// unit of undershoot, zero on an exact match. States must lie in 0..max_state.
double immediate_cost(const CostModel& model, int actual, int action, int max_state);

// Expectation of immediate_cost over a belief.
double expected_immediate_cost(const CostModel& model, const Belief& belief, int action);

// Same expectation against an arbitrary nonnegative weight vector. Linear in
// the weights; no validation. Shared by the censored-propagation loops, where
// the weight vector is an unnormalized taboo distribution.
double weighted_immediate_cost(const CostModel& model, const std::vector<double>& weights,
                               int action);

// Myopic cutoff under_cost / (under_cost + over_cost).
// Throws std::domain_error when both coefficients are zero.
double myopic_threshold(const CostModel& model);

// Smallest action whose cumulative weight reaches fraction h of the total.
// The denominator is the left-to-right sum of the same vector, so the ratio
// reaches exactly 1 at the last state and any h in [0, 1] resolves.
// Throws std::domain_error when the total weight is zero.
int threshold_action(const std::vector<double>& weights, double h);

// Minimizer of the expected immediate cost (smallest on ties).
int myopic_action(const CostModel& model, const Belief& belief);

}  // namespace tracker
