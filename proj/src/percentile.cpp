#include "tracker/percentile.hpp"

#include <limits>
#include <stdexcept>

#include "tracker/cost.hpp"
#include "tracker/policy_eval.hpp"
#include "tracker/taboo.hpp"

namespace tracker {

std::size_t ThresholdTable::index(int s, int t) const {
  if (s < 0 || s >= num_states || t < 0 || t >= horizon)
    throw std::invalid_argument("anchor outside the threshold table");
  return static_cast<std::size_t>(s) * horizon + t;
}

std::vector<double> threshold_grid(double delta) {
  if (!(delta > 0.0) || !(delta <= 1.0))
    throw std::domain_error("threshold resolution must lie in (0, 1]");
  std::vector<double> grid;
  for (int k = 0; k * delta < 1.0; ++k) grid.push_back(k * delta);
  grid.push_back(1.0);
  return grid;
}

std::vector<double> frp_candidates(const CostModel& model, double delta) {
  std::vector<double> candidates = threshold_grid(delta);
  if (!model.degenerate()) candidates.push_back(myopic_threshold(model));
  return candidates;
}

namespace {

double total_weight(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  return total;
}

}  // namespace

AnchorEvaluation evaluate_threshold(const CostModel& model, const TransitionMatrix& matrix,
                                    std::vector<double> weights, int anchor_time, double h,
                                    const CostTable& later, std::uint64_t* ops) {
  const int num_states = matrix.size();
  const int length = model.horizon - anchor_time;
  AnchorEvaluation result;
  result.actions.reserve(length);
  double discount_pow = 1.0;
  for (int k = 0; k < length; ++k) {
    if (k > 0) {
      weights = censored_step(matrix, weights, result.actions.back());
      if (ops) *ops += static_cast<std::uint64_t>(num_states) * num_states;
      if (total_weight(weights) == 0.0) {
        // The partial-observation branch has died out; the remaining steps
        // are never executed. Fill with the top state and stop accumulating.
        result.actions.resize(length, num_states - 1);
        break;
      }
    }
    const int action = threshold_action(weights, h);
    result.actions.push_back(action);
    result.cost += discount_pow * weighted_immediate_cost(model, weights, action);
    if (k < length - 1) {
      double renewal = 0.0;
      for (int i = 0; i < action; ++i)
        renewal += weights[i] * later.at(i, anchor_time + k + 1);
      result.cost += discount_pow * model.discount * renewal;
    }
    discount_pow *= model.discount;
  }
  return result;
}

ActionSequence sequence_from_threshold(const CostModel& model, const TransitionMatrix& matrix,
                                       const Anchor& anchor, double h) {
  model.validate();
  if (anchor.state < 0 || anchor.state > matrix.max_state())
    throw std::domain_error("anchor state out of range");
  if (anchor.time < 0 || anchor.time > model.horizon - 1)
    throw std::domain_error("anchor time out of range");
  if (!(h >= 0.0) || !(h <= 1.0)) throw std::domain_error("threshold must lie in [0, 1]");

  const int num_states = matrix.size();
  const int length = model.horizon - anchor.time;
  ActionSequence actions;
  actions.reserve(length);
  std::vector<double> weights = matrix.row(anchor.state);
  for (int k = 0; k < length; ++k) {
    if (k > 0) {
      weights = censored_step(matrix, weights, actions.back());
      if (total_weight(weights) == 0.0) {
        actions.resize(length, num_states - 1);
        break;
      }
    }
    actions.push_back(threshold_action(weights, h));
  }
  return actions;
}

PolicyTable evaluate_percentile(const CostModel& model, const TransitionMatrix& matrix,
                                const ThresholdTable& thresholds) {
  model.validate();
  if (thresholds.num_states != matrix.size() || thresholds.horizon != model.horizon)
    throw std::invalid_argument("threshold table does not match the instance");
  for (double h : thresholds.values)
    if (!(h >= 0.0) || !(h <= 1.0)) throw std::domain_error("threshold must lie in [0, 1]");

  PolicyTable policy("percentile", matrix.size(), model.horizon);
  CostTable costs(matrix.size(), model.horizon);
  for (int t = model.horizon - 1; t >= 0; --t) {
    for (int s = 0; s < matrix.size(); ++s) {
      AnchorEvaluation eval =
          evaluate_threshold(model, matrix, matrix.row(s), t, thresholds.at(s, t), costs);
      costs.at(s, t) = eval.cost;
      policy.at(s, t) = {std::move(eval.actions), eval.cost};
    }
  }
  return policy;
}

PolicyTable myopic_policy(const CostModel& model, const TransitionMatrix& matrix) {
  const ThresholdTable thresholds(matrix.size(), model.horizon, myopic_threshold(model));
  PolicyTable policy = evaluate_percentile(model, matrix, thresholds);
  PolicyTable relabeled("myopic", matrix.size(), model.horizon);
  for (int s = 0; s < matrix.size(); ++s)
    for (int t = 0; t < model.horizon; ++t) relabeled.at(s, t) = policy.at(s, t);
  return relabeled;
}

FrpResult solve_frp(const CostModel& model, const TransitionMatrix& matrix,
                    double delta, FrpStats* stats) {
  model.validate();
  const std::vector<double> candidates = frp_candidates(model, delta);
  ThresholdTable thresholds(matrix.size(), model.horizon, 0.0);
  thresholds.candidate_set = candidates;
  PolicyTable policy("frp", matrix.size(), model.horizon);
  CostTable costs(matrix.size(), model.horizon);
  std::uint64_t ops = 0;

  for (int t = model.horizon - 1; t >= 0; --t) {
    for (int s = 0; s < matrix.size(); ++s) {
      double best_cost = std::numeric_limits<double>::infinity();
      for (double h : candidates) {
        AnchorEvaluation eval =
            evaluate_threshold(model, matrix, matrix.row(s), t, h, costs, &ops);
        if (eval.cost <= best_cost) {  // ties keep the later candidate
          best_cost = eval.cost;
          thresholds.at(s, t) = h;
          policy.at(s, t) = {std::move(eval.actions), eval.cost};
        }
      }
      costs.at(s, t) = best_cost;
    }
  }
  if (stats) stats->propagation_ops = ops;
  return {std::move(thresholds), std::move(policy)};
}

InitialFrpResult frp_with_initial_belief(const CostModel& model, const TransitionMatrix& matrix,
                                         const Belief& b0, double delta, const FrpResult& solved) {
  if (b0.size() != matrix.size())
    throw std::invalid_argument("belief size does not match the matrix");
  CostTable costs(matrix.size(), model.horizon);
  for (int s = 0; s < matrix.size(); ++s)
    for (int t = 0; t < model.horizon; ++t) costs.at(s, t) = solved.policy.cost(s, t);

  // Distribution of the state at the first decision.
  const std::vector<double> first = censored_step(matrix, b0.probs(), 0);
  InitialFrpResult best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (double h : frp_candidates(model, delta)) {
    AnchorEvaluation eval = evaluate_threshold(model, matrix, first, 0, h, costs);
    if (eval.cost <= best_cost) {
      best_cost = eval.cost;
      best = {h, std::move(eval.actions), eval.cost};
    }
  }
  return best;
}

InitialFrpResult frp_with_initial_belief(const CostModel& model, const TransitionMatrix& matrix,
                                         const Belief& b0, double delta) {
  return frp_with_initial_belief(model, matrix, b0, delta, solve_frp(model, matrix, delta));
}

}  // namespace tracker
