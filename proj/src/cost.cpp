#include "tracker/cost.hpp"

#include <stdexcept>

namespace tracker {

double immediate_cost(const CostModel& model, int actual, int action, int max_state) {
  if (actual < 0 || actual > max_state) throw std::domain_error("actual state out of range");
  if (action < 0 || action > max_state) throw std::domain_error("action out of range");
  if (action > actual) return model.over_cost * (action - actual);
  return model.under_cost * (actual - action);
}

double expected_immediate_cost(const CostModel& model, const Belief& belief, int action) {
  if (action < 0 || action > belief.max_state())
    throw std::domain_error("action out of range");
  return weighted_immediate_cost(model, belief.probs(), action);
}

double weighted_immediate_cost(const CostModel& model, const std::vector<double>& weights,
                               int action) {
  double over = 0.0;
  for (int i = 0; i < action; ++i) over += weights[i] * (action - i);
  double under = 0.0;
  for (int i = action; i < static_cast<int>(weights.size()); ++i)
    under += weights[i] * (i - action);
  return model.over_cost * over + model.under_cost * under;
}

double myopic_threshold(const CostModel& model) {
  const double total = model.under_cost + model.over_cost;
  if (total <= 0.0)
    throw std::domain_error("myopic cutoff undefined: both cost coefficients are zero");
  return model.under_cost / total;
}

int threshold_action(const std::vector<double>& weights, double h) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (total <= 0.0) throw std::domain_error("threshold action over zero total weight");
  double cumulative = 0.0;
  const int last = static_cast<int>(weights.size()) - 1;
  for (int r = 0; r < last; ++r) {
    cumulative += weights[r];
    if (cumulative / total >= h) return r;
  }
  return last;  // cumulative/total hits exactly 1 here, covering any h <= 1
}

int myopic_action(const CostModel& model, const Belief& belief) {
  return threshold_action(belief.probs(), myopic_threshold(model));
}

}  // namespace tracker
