#pragma once

#include <vector>

#include "tracker/types.hpp"

namespace tracker {

// Query for the probability of moving origin -> destination in `steps` steps
// while every intermediate state stays at or above the running action floor:
// the state after n steps must satisfy state >= floors[n-1] for n < steps.
struct TabooQuery {
  int origin = 0;
  int destination = 0;
  int steps = 1;
  ActionSequence floors;  // at least `steps` entries
};

// One censored propagation step: zero out the entries below floor_action,
// then advance one step through the chain.
std::vector<double> censored_step(const TransitionMatrix& matrix,
                                  const std::vector<double>& weights, int floor_action);

// Taboo transition probability, computed as steps-1 censored vector-matrix
// products rather than the nested path sum.
double taboo_prob(const TransitionMatrix& matrix, const TabooQuery& query);

// Expected discounted cost paid from the anchoring observation up to the next
// full observation under a fixed action sequence. The step-tau cost weights
// are censored by the earlier actions only.
double gamma_cost(const CostModel& model, const TransitionMatrix& matrix,
                  const Anchor& anchor, const ActionSequence& actions);

}  // namespace tracker
