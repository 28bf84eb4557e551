#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tracker/types.hpp"

namespace tracker {

inline constexpr double kDefaultResolution = 0.01;

// Per-anchor percentile thresholds, each in [0, 1].
struct ThresholdTable {
  ThresholdTable() = default;
  ThresholdTable(int num_states, int horizon, double h)
      : num_states(num_states), horizon(horizon),
        values(static_cast<std::size_t>(num_states) * horizon, h) {}

  double& at(int s, int t) { return values.at(index(s, t)); }
  double at(int s, int t) const { return values.at(index(s, t)); }

  int num_states = 0;
  int horizon = 0;
  std::vector<double> values;            // row-major [s][t]
  std::optional<double> initial;         // threshold for the pre-observation phase
  std::vector<double> candidate_set;     // grid the values were selected from, if any

 private:
  std::size_t index(int s, int t) const;
};

// Candidate thresholds {0, delta, 2*delta, ..., 1}; requires delta in (0, 1].
std::vector<double> threshold_grid(double delta);

// The grid with the myopic cutoff appended (scanned last, so it wins cost
// ties). Degenerate cost models have no cutoff and get the bare grid.
std::vector<double> frp_candidates(const CostModel& model, double delta);

// Action sequence generated by one threshold at one anchor: at each step the
// smallest state whose share of the propagated censored weight reaches h.
// Steps whose censoring leaves zero surviving weight are filled with the top
// state; they are never executed.
ActionSequence sequence_from_threshold(const CostModel& model, const TransitionMatrix& matrix,
                                       const Anchor& anchor, double h);

// Sequence generation and cost accumulation for one anchor in a single
// backward-compatible pass: belief propagation interleaved with the renewal
// terms against the already-solved later anchors.
struct AnchorEvaluation {
  ActionSequence actions;
  double cost = 0.0;
};
AnchorEvaluation evaluate_threshold(const CostModel& model, const TransitionMatrix& matrix,
                                    std::vector<double> weights, int anchor_time, double h,
                                    const CostTable& later, std::uint64_t* ops = nullptr);

// Full percentile policy for fixed per-anchor thresholds.
PolicyTable evaluate_percentile(const CostModel& model, const TransitionMatrix& matrix,
                                const ThresholdTable& thresholds);

// Percentile policy with every threshold at the myopic cutoff.
PolicyTable myopic_policy(const CostModel& model, const TransitionMatrix& matrix);

struct FrpStats {
  // Nominal multiply-accumulate work of the censored propagations,
  // (M+1)^2 per step.
  std::uint64_t propagation_ops = 0;
};

struct FrpResult {
  ThresholdTable thresholds;
  PolicyTable policy;
};

// Finite-resolution search: per anchor, backward in time, keeps the candidate
// threshold minimizing the cost-to-go. Ties keep the last-scanned candidate.
FrpResult solve_frp(const CostModel& model, const TransitionMatrix& matrix,
                    double delta = kDefaultResolution, FrpStats* stats = nullptr);

// Threshold, sequence and total cost for the pre-observation phase driven by
// a start belief, searched over the same candidate set on top of a solved
// per-anchor table.
struct InitialFrpResult {
  double threshold = 0.0;
  ActionSequence actions;
  double cost = 0.0;
};
InitialFrpResult frp_with_initial_belief(const CostModel& model, const TransitionMatrix& matrix,
                                         const Belief& b0, double delta, const FrpResult& solved);
InitialFrpResult frp_with_initial_belief(const CostModel& model, const TransitionMatrix& matrix,
                                         const Belief& b0, double delta = kDefaultResolution);

}  // namespace tracker
