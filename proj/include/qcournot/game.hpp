#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qcournot/dhoyer.hpp"
#include "qcournot/grover.hpp"
#include "qcournot/market.hpp"
#include "qcournot/statevec.hpp"

namespace qcournot {

enum class ScenarioKind { Classical, Entangled, GroverJoint, DurrHoyerBestResponse };

// Restriction applied when the argmax oracle is built over quantity pairs.
enum class OracleRestriction { Symmetric, None };

struct WeightedOutcome {
  double q1;
  double q2;
  double probability;
};

// One scenario's economics. Profits, surplus and welfare are expectations
// when the scenario is distribution-valued; point values otherwise.
struct ScenarioResult {
  ScenarioKind kind = ScenarioKind::Classical;
  MarketParams params{0, 0, 0};
  CsConvention convention = CsConvention::PriceTriangle;
  std::optional<std::pair<double, double>> outputs;  // set for point scenarios
  std::vector<WeightedOutcome> distribution;         // set for entangled scenarios
  double profit1 = 0.0;
  double profit2 = 0.0;
  double consumer_surplus = 0.0;
  double welfare = 0.0;
  std::optional<double> selection_probability;  // final-state weight of the pick
  std::optional<GroverTrace> grover_trace;
  std::optional<ThresholdSearchTrace> search_trace;
  bool negative_price = false;
};

// Symmetric equilibrium of the quantity game.
ScenarioResult classical_scenario(const MarketParams& params, CsConvention convention);

// Expectations over the terms of a shared correlated state.
ScenarioResult entangled_scenario(const MarketParams& params, const JointState& joint,
                                  CsConvention convention);

// Builds the |grid|^2 pair space in grid-major order, marks the industry
// profit argmax under the restriction, amplifies, measures one pair and
// reports its economics. Iterations default to the optimal schedule.
ScenarioResult grover_joint_scenario(const MarketParams& params,
                                     const StrategySpace& grid,
                                     std::optional<int> iterations,
                                     OracleRestriction restriction, Rng& rng,
                                     CsConvention convention);

// Adaptive maximum search over firm 1's profits against a fixed rival output.
ScenarioResult durr_hoyer_best_response_scenario(const MarketParams& params,
                                                 const StrategySpace& grid,
                                                 double opponent_q, Rng& rng,
                                                 const SearchBudget& budget,
                                                 CsConvention convention);

enum class ParetoVerdict {
  QuantumParetoImproves,
  Incomparable,
  ClassicalParetoImproves,
  Equivalent
};

struct ComparisonRow {
  std::optional<std::pair<double, double>> classical_outputs;
  std::pair<double, double> classical_profits;
  double classical_cs;
  std::optional<std::pair<double, double>> quantum_outputs;
  std::pair<double, double> quantum_profits;
  double quantum_cs;
  ParetoVerdict verdict;
};

// Pareto verdict over the welfare coordinates (profit1, profit2, total CS).
// Both results must share market parameters and the CS convention.
ComparisonRow compare(const ScenarioResult& classical, const ScenarioResult& quantum);

}  // namespace qcournot
