#pragma once

#include <vector>

#include "tracker/types.hpp"

namespace tracker {

// Exact cost-to-go of following `actions` from `anchor_time`, where `weights`
// is the state distribution one step after the anchor (the anchor row for a
// full observation, the propagated prior for a belief start). Full
// observations renew into the per-anchor costs of `later`; only entries at
// times after anchor_time are read.
double sequence_cost(const CostModel& model, const TransitionMatrix& matrix,
                     std::vector<double> weights, int anchor_time,
                     const ActionSequence& actions, const CostTable& later);

// Expected discounted cost of the policy at every anchor, by backward
// recursion over the renewal structure.
CostTable evaluate_policy(const CostModel& model, const TransitionMatrix& matrix,
                          const PolicyTable& policy);

// Expected cost when only a belief over the time-0 state is available:
// init_actions (length horizon) are used until the first full observation,
// after which the policy's own per-anchor sequences take over.
double evaluate_with_initial_belief(const CostModel& model, const TransitionMatrix& matrix,
                                    const PolicyTable& policy, const Belief& b0,
                                    const ActionSequence& init_actions);

}  // namespace tracker
