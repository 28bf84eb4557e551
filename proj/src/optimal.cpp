#include "tracker/optimal.hpp"

#include <cmath>
#include <limits>

#include "tracker/cost.hpp"
#include "tracker/policy_eval.hpp"
#include "tracker/taboo.hpp"

namespace tracker {

double optimal_enumeration_size(int num_states, int horizon) {
  double total = 0.0;
  for (int t = 0; t < horizon; ++t)
    total += num_states * std::pow(static_cast<double>(num_states), horizon - t);
  return total;
}

namespace {

// Depth-first enumeration over action sequences for one anchor. The censored
// weight vectors of shared prefixes are kept on a stack, so each node costs
// one cost evaluation and each internal node one propagation.
class SequenceSearch {
 public:
  SequenceSearch(const CostModel& model, const TransitionMatrix& matrix,
                 const CostTable& later, int anchor_time)
      : model_(model), matrix_(matrix), later_(later), anchor_time_(anchor_time),
        length_(model.horizon - anchor_time),
        discount_pow_(static_cast<std::size_t>(length_) + 1, 1.0) {
    for (int k = 1; k <= length_; ++k)
      discount_pow_[k] = discount_pow_[k - 1] * model.discount;
    weight_stack_.resize(length_);
    current_.reserve(length_);
  }

  // Returns the lexicographically first minimal-cost sequence and its cost.
  PolicyEntry run(int anchor_state, std::uint64_t& leaf_counter) {
    weight_stack_[0] = matrix_.row(anchor_state);
    current_.clear();
    best_.actions.clear();
    best_.cost_to_go = std::numeric_limits<double>::infinity();
    leaves_ = 0;
    descend(0, 0.0);
    leaf_counter += leaves_;
    return best_;
  }

 private:
  void descend(int depth, double partial) {
    const int num_states = matrix_.size();
    const auto& weights = weight_stack_[depth];
    for (int action = 0; action < num_states; ++action) {
      double cost = partial + discount_pow_[depth] * weighted_immediate_cost(model_, weights, action);
      if (depth < length_ - 1) {
        double renewal = 0.0;
        for (int i = 0; i < action; ++i)
          renewal += weights[i] * later_.at(i, anchor_time_ + depth + 1);
        cost += discount_pow_[depth + 1] * renewal;
      }
      current_.push_back(action);
      if (depth == length_ - 1) {
        ++leaves_;
        if (cost < best_.cost_to_go) {
          best_.cost_to_go = cost;
          best_.actions = current_;
        }
      } else {
        weight_stack_[depth + 1] = censored_step(matrix_, weights, action);
        descend(depth + 1, cost);
      }
      current_.pop_back();
    }
  }

  const CostModel& model_;
  const TransitionMatrix& matrix_;
  const CostTable& later_;
  int anchor_time_;
  int length_;
  std::vector<double> discount_pow_;
  std::vector<std::vector<double>> weight_stack_;
  ActionSequence current_;
  PolicyEntry best_;
  std::uint64_t leaves_ = 0;
};

}  // namespace

PolicyTable solve_optimal(const CostModel& model, const TransitionMatrix& matrix,
                          double budget, OptimalStats* stats) {
  model.validate();
  const double required = optimal_enumeration_size(matrix.size(), model.horizon);
  if (required > budget) throw BudgetExceededError(required, budget);

  PolicyTable policy("optimal", matrix.size(), model.horizon);
  CostTable costs(matrix.size(), model.horizon);
  std::uint64_t leaves = 0;
  for (int t = model.horizon - 1; t >= 0; --t) {
    SequenceSearch search(model, matrix, costs, t);
    for (int s = 0; s < matrix.size(); ++s) {
      PolicyEntry best = search.run(s, leaves);
      costs.at(s, t) = best.cost_to_go;
      policy.at(s, t) = std::move(best);
    }
  }
  if (stats) stats->sequences_evaluated = leaves;
  return policy;
}

namespace {

// Deterministic successor of a unit-vector row, or -1.
int unit_successor(const std::vector<double>& row) {
  int hit = -1;
  for (int j = 0; j < static_cast<int>(row.size()); ++j) {
    if (row[j] == 1.0) {
      if (hit >= 0) return -1;
      hit = j;
    } else if (row[j] != 0.0) {
      return -1;
    }
  }
  return hit;
}

PolicyTable constant_action_table(const TransitionMatrix& matrix, int horizon,
                                  std::vector<int> per_anchor_action) {
  PolicyTable policy("optimal", matrix.size(), horizon);
  for (int s = 0; s < matrix.size(); ++s)
    for (int t = 0; t < horizon; ++t)
      policy.at(s, t).actions.assign(horizon - t, per_anchor_action[s]);
  return policy;
}

void fill_costs(const CostModel& model, const TransitionMatrix& matrix, PolicyTable& policy) {
  const CostTable costs = evaluate_policy(model, matrix, policy);
  for (int s = 0; s < matrix.size(); ++s)
    for (int t = 0; t < model.horizon; ++t)
      policy.at(s, t).cost_to_go = costs.at(s, t);
}

}  // namespace

std::optional<PolicyTable> special_case_policy(const CostModel& model,
                                               const TransitionMatrix& matrix) {
  model.validate();
  const int n = matrix.size();
  const int horizon = model.horizon;

  if (model.under_cost == 0.0) {
    // Undershooting is free and never observed: stay at the bottom.
    PolicyTable policy = constant_action_table(matrix, horizon, std::vector<int>(n, 0));
    fill_costs(model, matrix, policy);
    return policy;
  }
  if (model.over_cost == 0.0) {
    // Overshooting is free: stay at the top.
    PolicyTable policy = constant_action_table(matrix, horizon, std::vector<int>(n, n - 1));
    fill_costs(model, matrix, policy);
    return policy;
  }
  if (model.discount == 0.0) {
    // Only the first step of each sequence carries cost; the rest is the
    // lexicographically smallest filler, matching the exhaustive solver.
    PolicyTable policy("optimal", n, horizon);
    for (int s = 0; s < n; ++s) {
      const int action = threshold_action(matrix.row(s), myopic_threshold(model));
      for (int t = 0; t < horizon; ++t) {
        auto& actions = policy.at(s, t).actions;
        actions.assign(horizon - t, 0);
        actions[0] = action;
      }
    }
    fill_costs(model, matrix, policy);
    return policy;
  }
  if (matrix.rows_identical()) {
    // An i.i.d. process: observations carry no information, the myopic
    // action on the common row is optimal at every step.
    const int action = threshold_action(matrix.row(0), myopic_threshold(model));
    PolicyTable policy = constant_action_table(matrix, horizon, std::vector<int>(n, action));
    fill_costs(model, matrix, policy);
    return policy;
  }
  if (matrix.deterministic()) {
    // The trajectory after an observation is certain: track it for free.
    PolicyTable policy("optimal", n, horizon);
    for (int s = 0; s < n; ++s) {
      std::vector<int> trajectory(horizon);
      int state = s;
      for (int k = 0; k < horizon; ++k) {
        state = unit_successor(matrix.row(state));
        trajectory[k] = state;
      }
      for (int t = 0; t < horizon; ++t)
        policy.at(s, t).actions.assign(trajectory.begin(), trajectory.begin() + (horizon - t));
    }
    fill_costs(model, matrix, policy);
    return policy;
  }
  return std::nullopt;
}

}  // namespace tracker
