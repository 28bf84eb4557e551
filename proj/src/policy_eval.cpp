#include "tracker/policy_eval.hpp"

#include <stdexcept>

#include "tracker/cost.hpp"
#include "tracker/taboo.hpp"

namespace tracker {

double sequence_cost(const CostModel& model, const TransitionMatrix& matrix,
                     std::vector<double> weights, int anchor_time,
                     const ActionSequence& actions, const CostTable& later) {
  const int length = static_cast<int>(actions.size());
  double total = 0.0;
  double discount_pow = 1.0;
  for (int k = 0; k < length; ++k) {
    const int action = actions[k];
    total += discount_pow * weighted_immediate_cost(model, weights, action);
    if (k < length - 1) {
      // Full observation at this step renews the policy at (state, time).
      double renewal = 0.0;
      for (int i = 0; i < action; ++i)
        renewal += weights[i] * later.at(i, anchor_time + k + 1);
      total += discount_pow * model.discount * renewal;
      weights = censored_step(matrix, weights, action);
    }
    discount_pow *= model.discount;
  }
  return total;
}

CostTable evaluate_policy(const CostModel& model, const TransitionMatrix& matrix,
                          const PolicyTable& policy) {
  model.validate();
  policy.validate();
  if (policy.num_states() != matrix.size() || policy.horizon() != model.horizon)
    throw std::invalid_argument("policy table does not match the instance");

  CostTable costs(matrix.size(), model.horizon);
  for (int t = model.horizon - 1; t >= 0; --t)
    for (int s = 0; s < matrix.size(); ++s)
      costs.at(s, t) = sequence_cost(model, matrix, matrix.row(s), t,
                                     policy.sequence(s, t), costs);
  return costs;
}

double evaluate_with_initial_belief(const CostModel& model, const TransitionMatrix& matrix,
                                    const PolicyTable& policy, const Belief& b0,
                                    const ActionSequence& init_actions) {
  if (b0.size() != matrix.size())
    throw std::invalid_argument("belief size does not match the matrix");
  if (static_cast<int>(init_actions.size()) != model.horizon)
    throw std::invalid_argument("initial sequence length must equal the horizon");
  const CostTable costs = evaluate_policy(model, matrix, policy);
  // Distribution of the state at the first decision: the prior pushed one step.
  const std::vector<double> first = censored_step(matrix, b0.probs(), 0);
  return sequence_cost(model, matrix, first, 0, init_actions, costs);
}

}  // namespace tracker
