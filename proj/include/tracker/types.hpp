#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracker {

// Tolerance for probability-vector validation (row sums, belief sums).
inline constexpr double kProbTolerance = 1e-9;

// Cost coefficients, discount factor and decision horizon of one instance.
// over_cost is charged per unit when the action exceeds the state,
// under_cost per unit when it falls below.
struct CostModel {
  double over_cost = 0.0;   // c_u
  double under_cost = 0.0;  // c_l
  double discount = 1.0;    // beta in [0, 1]
  int horizon = 1;          // T >= 1

  // Throws std::domain_error on negative costs, discount outside [0,1]
  // or horizon < 1. A model with both costs zero is degenerate but legal.
  void validate() const;
  bool degenerate() const { return over_cost == 0.0 && under_cost == 0.0; }
};

// Row-stochastic transition matrix over the ordered states 0..M.
class TransitionMatrix {
 public:
  // Validates squareness (size >= 2), entry ranges and row sums.
  explicit TransitionMatrix(std::vector<std::vector<double>> rows);

  static TransitionMatrix identity(int size);

  int size() const { return static_cast<int>(rows_.size()); }
  int max_state() const { return size() - 1; }
  const std::vector<double>& row(int i) const { return rows_.at(i); }
  double at(int i, int j) const { return rows_.at(i).at(j); }

  // All rows identical (an i.i.d. process).
  bool rows_identical() const;
  // Every row is a unit vector (a deterministic process).
  bool deterministic() const;

  bool operator==(const TransitionMatrix& other) const { return rows_ == other.rows_; }

 private:
  std::vector<std::vector<double>> rows_;
};

// Probability vector over the hidden state.
class Belief {
 public:
  // Requires nonnegative entries summing to 1 within kProbTolerance;
  // the stored vector is renormalized to compensate accumulated rounding.
  explicit Belief(std::vector<double> probs);

  static Belief point_mass(int state, int size);
  static Belief uniform(int size);

  int size() const { return static_cast<int>(probs_.size()); }
  int max_state() const { return size() - 1; }
  double operator[](int i) const { return probs_.at(i); }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// actions[k] is the action taken k+1 steps after the anchoring observation.
using ActionSequence = std::vector<int>;

// Last fully observed state and the time of that observation.
struct Anchor {
  int state = 0;
  int time = 0;
  auto operator<=>(const Anchor&) const = default;
};

struct PolicyEntry {
  ActionSequence actions;  // length horizon - anchor.time
  double cost_to_go = 0.0;
};

// Pre-observation phase of a policy, used when only a start belief is known.
struct InitialPolicy {
  Belief start;            // belief over the state at time 0
  ActionSequence actions;  // length horizon, used until the first full observation
  double cost_to_go = 0.0;
};

// Dense (M+1) x T table mapping each anchor (s, t) to its action sequence
// and cost-to-go, plus an optional pre-observation entry.
class PolicyTable {
 public:
  PolicyTable(std::string label, int num_states, int horizon);

  const std::string& label() const { return label_; }
  int num_states() const { return num_states_; }
  int horizon() const { return horizon_; }

  PolicyEntry& at(int s, int t) { return entries_.at(index(s, t)); }
  const PolicyEntry& at(int s, int t) const { return entries_.at(index(s, t)); }
  const ActionSequence& sequence(int s, int t) const { return at(s, t).actions; }
  double cost(int s, int t) const { return at(s, t).cost_to_go; }

  // Throws std::invalid_argument if any entry is missing or has the wrong length.
  void validate() const;

  std::optional<InitialPolicy> initial;

 private:
  std::size_t index(int s, int t) const;

  std::string label_;
  int num_states_;
  int horizon_;
  std::vector<PolicyEntry> entries_;  // row-major [s][t]
};

// Dense (M+1) x T table of per-anchor expected costs.
struct CostTable {
  CostTable() = default;
  CostTable(int num_states, int horizon)
      : num_states(num_states), horizon(horizon),
        values(static_cast<std::size_t>(num_states) * horizon, 0.0) {}

  double& at(int s, int t) { return values.at(index(s, t)); }
  double at(int s, int t) const { return values.at(index(s, t)); }

  int num_states = 0;
  int horizon = 0;
  std::vector<double> values;

 private:
  std::size_t index(int s, int t) const;
};

// Thrown when an exhaustive solve would exceed its evaluation budget.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(double required, double budget);
  double required() const { return required_; }
  double budget() const { return budget_; }

 private:
  double required_;
  double budget_;
};

}  // namespace tracker
