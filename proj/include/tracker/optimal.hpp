#pragma once

#include <cstdint>
#include <optional>

#include "tracker/types.hpp"

namespace tracker {

inline constexpr double kDefaultOptimalBudget = 1e8;

struct OptimalStats {
  std::uint64_t sequences_evaluated = 0;
};

// Number of candidate sequences an exhaustive solve must score:
// sum over anchors of (M+1)^(T-t). Returned as a double since it grows fast.
double optimal_enumeration_size(int num_states, int horizon);

// Exhaustive sequence-space dynamic program: for each anchor, backward in
// time, scores every action sequence against the already-solved later anchors
// and keeps the lexicographically first minimum. Throws BudgetExceededError
// up front when the enumeration size exceeds `budget`.
PolicyTable solve_optimal(const CostModel& model, const TransitionMatrix& matrix,
                          double budget = kDefaultOptimalBudget,
                          OptimalStats* stats = nullptr);

// Closed-form optimal table for the trivial instance classes (a zero cost
// coefficient, zero discount, i.i.d. rows, deterministic rows); nullopt when
// none applies.
std::optional<PolicyTable> special_case_policy(const CostModel& model,
                                               const TransitionMatrix& matrix);

}  // namespace tracker
