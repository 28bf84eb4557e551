#include "tracker/taboo.hpp"

#include <stdexcept>

#include "tracker/cost.hpp"

namespace tracker {

std::vector<double> censored_step(const TransitionMatrix& matrix,
                                  const std::vector<double>& weights, int floor_action) {
  const int n = matrix.size();
  std::vector<double> next(n, 0.0);
  for (int i = floor_action; i < n; ++i) {
    const double w = weights[i];
    if (w == 0.0) continue;
    const auto& row = matrix.row(i);
    for (int j = 0; j < n; ++j) next[j] += w * row[j];
  }
  return next;
}

double taboo_prob(const TransitionMatrix& matrix, const TabooQuery& query) {
  const int max_state = matrix.max_state();
  if (query.origin < 0 || query.origin > max_state ||
      query.destination < 0 || query.destination > max_state)
    throw std::domain_error("taboo query state out of range");
  if (query.steps < 1) throw std::domain_error("taboo query needs steps >= 1");
  if (query.steps > static_cast<int>(query.floors.size()))
    throw std::domain_error("taboo query steps exceed the floor sequence length");
  for (int a : query.floors)
    if (a < 0 || a > max_state) throw std::domain_error("taboo floor out of range");

  std::vector<double> weights = matrix.row(query.origin);
  for (int n = 1; n < query.steps; ++n)
    weights = censored_step(matrix, weights, query.floors[n - 1]);
  return weights[query.destination];
}

double gamma_cost(const CostModel& model, const TransitionMatrix& matrix,
                  const Anchor& anchor, const ActionSequence& actions) {
  model.validate();
  const int horizon = model.horizon;
  if (anchor.state < 0 || anchor.state > matrix.max_state())
    throw std::domain_error("anchor state out of range");
  if (anchor.time < 0 || anchor.time > horizon - 1)
    throw std::domain_error("anchor time out of range");
  if (static_cast<int>(actions.size()) != horizon - anchor.time)
    throw std::invalid_argument("action sequence length must equal horizon - anchor time");
  for (int a : actions)
    if (a < 0 || a > matrix.max_state()) throw std::domain_error("action out of range");

  std::vector<double> weights = matrix.row(anchor.state);
  double total = 0.0;
  double discount_pow = 1.0;
  const int length = static_cast<int>(actions.size());
  for (int k = 0; k < length; ++k) {
    total += discount_pow * weighted_immediate_cost(model, weights, actions[k]);
    if (k + 1 == length) break;
    weights = censored_step(matrix, weights, actions[k]);
    discount_pow *= model.discount;
    // A floor that annihilates the weights zeroes every later term.
    double mass = 0.0;
    for (double w : weights) mass += w;
    if (mass == 0.0) break;
  }
  return total;
}

}  // namespace tracker
