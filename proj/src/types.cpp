#include "tracker/types.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace tracker {

void CostModel::validate() const {
  if (!(over_cost >= 0.0) || !(under_cost >= 0.0))
    throw std::domain_error("cost coefficients must be nonnegative");
  if (!(discount >= 0.0) || !(discount <= 1.0))
    throw std::domain_error("discount factor must lie in [0, 1]");
  if (horizon < 1) throw std::domain_error("horizon must be at least 1");
}

TransitionMatrix::TransitionMatrix(std::vector<std::vector<double>> rows)
    : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n < 2) throw std::invalid_argument("transition matrix needs at least 2 states");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows_[i];
    if (row.size() != n) {
      std::ostringstream msg;
      msg << "row " << i << " has " << row.size() << " entries, expected " << n;
      throw std::invalid_argument(msg.str());
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const double p = row[j];
      if (!(p >= 0.0) || !(p <= 1.0)) {
        std::ostringstream msg;
        msg << "entry (" << i << ", " << j << ") = " << p << " is not a probability";
        throw std::invalid_argument(msg.str());
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kProbTolerance) {
      std::ostringstream msg;
      msg << "row " << i << " sums to " << sum << ", expected 1";
      throw std::invalid_argument(msg.str());
    }
  }
}

TransitionMatrix TransitionMatrix::identity(int size) {
  std::vector<std::vector<double>> rows(size, std::vector<double>(size, 0.0));
  for (int i = 0; i < size; ++i) rows[i][i] = 1.0;
  return TransitionMatrix(std::move(rows));
}

bool TransitionMatrix::rows_identical() const {
  for (std::size_t i = 1; i < rows_.size(); ++i)
    if (rows_[i] != rows_[0]) return false;
  return true;
}

bool TransitionMatrix::deterministic() const {
  for (const auto& row : rows_) {
    int ones = 0;
    for (double p : row) {
      if (p == 1.0)
        ++ones;
      else if (p != 0.0)
        return false;
    }
    if (ones != 1) return false;
  }
  return true;
}

Belief::Belief(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) throw std::domain_error("belief needs at least 2 states");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::domain_error("belief entries must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbTolerance)
    throw std::domain_error("belief entries must sum to 1");
  for (double& p : probs_) p /= sum;
}

Belief Belief::point_mass(int state, int size) {
  if (state < 0 || state >= size) throw std::domain_error("point-mass state out of range");
  std::vector<double> probs(size, 0.0);
  probs[state] = 1.0;
  return Belief(std::move(probs));
}

Belief Belief::uniform(int size) {
  return Belief(std::vector<double>(size, 1.0 / size));
}

PolicyTable::PolicyTable(std::string label, int num_states, int horizon)
    : label_(std::move(label)), num_states_(num_states), horizon_(horizon),
      entries_(static_cast<std::size_t>(num_states) * horizon) {
  if (num_states < 2 || horizon < 1)
    throw std::invalid_argument("policy table needs >= 2 states and horizon >= 1");
}

std::size_t PolicyTable::index(int s, int t) const {
  if (s < 0 || s >= num_states_ || t < 0 || t >= horizon_)
    throw std::invalid_argument("anchor outside the policy table");
  return static_cast<std::size_t>(s) * horizon_ + t;
}

void PolicyTable::validate() const {
  for (int s = 0; s < num_states_; ++s) {
    for (int t = 0; t < horizon_; ++t) {
      const auto& entry = at(s, t);
      if (static_cast<int>(entry.actions.size()) != horizon_ - t) {
        std::ostringstream msg;
        msg << "anchor (" << s << ", " << t << ") holds a sequence of length "
            << entry.actions.size() << ", expected " << horizon_ - t;
        throw std::invalid_argument(msg.str());
      }
      for (int a : entry.actions)
        if (a < 0 || a >= num_states_)
          throw std::invalid_argument("action outside the state set");
    }
  }
  if (initial && static_cast<int>(initial->actions.size()) != horizon_)
    throw std::invalid_argument("initial sequence length must equal the horizon");
}

std::size_t CostTable::index(int s, int t) const {
  if (s < 0 || s >= num_states || t < 0 || t >= horizon)
    throw std::invalid_argument("anchor outside the cost table");
  return static_cast<std::size_t>(s) * horizon + t;
}

namespace {
std::string budget_message(double required, double budget) {
  std::ostringstream msg;
  msg << "exhaustive solve needs " << required
      << " sequence evaluations, over the budget of " << budget;
  return msg.str();
}
}  // namespace

BudgetExceededError::BudgetExceededError(double required, double budget)
    : std::runtime_error(budget_message(required, budget)),
      required_(required), budget_(budget) {}

}  // namespace tracker
