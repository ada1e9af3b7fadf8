#include "qcournot/game.hpp"

#include <cmath>
#include <stdexcept>

namespace qcournot {
namespace {

constexpr double kEqualityTolerance = 1e-9;

void fill_point_economics(ScenarioResult& result, double q1, double q2) {
  const double total = q1 + q2;
  result.outputs = {q1, q2};
  result.profit1 = profit(result.params, q1, total);
  result.profit2 = profit(result.params, q2, total);
  result.consumer_surplus = consumer_surplus(result.params, total, result.convention);
  result.welfare = result.profit1 + result.profit2 + result.consumer_surplus;
  result.negative_price = price_is_negative(result.params, total);
}

bool all_close(const ScenarioResult& a, const ScenarioResult& b) {
  return std::abs(a.profit1 - b.profit1) <= kEqualityTolerance &&
         std::abs(a.profit2 - b.profit2) <= kEqualityTolerance &&
         std::abs(a.consumer_surplus - b.consumer_surplus) <= kEqualityTolerance;
}

bool weakly_dominates(const ScenarioResult& a, const ScenarioResult& b) {
  return a.profit1 >= b.profit1 - kEqualityTolerance &&
         a.profit2 >= b.profit2 - kEqualityTolerance &&
         a.consumer_surplus >= b.consumer_surplus - kEqualityTolerance;
}

}  // namespace

ScenarioResult classical_scenario(const MarketParams& params, CsConvention convention) {
  ScenarioResult result;
  result.kind = ScenarioKind::Classical;
  result.params = params;
  result.convention = convention;
  const NashEquilibrium nash = nash_equilibrium(params);
  fill_point_economics(result, nash.quantity, nash.quantity);
  return result;
}

ScenarioResult entangled_scenario(const MarketParams& params, const JointState& joint,
                                  CsConvention convention) {
  ScenarioResult result;
  result.kind = ScenarioKind::Entangled;
  result.params = params;
  result.convention = convention;
  const auto [expected1, expected2] = expected_profits(joint, params);
  result.profit1 = expected1;
  result.profit2 = expected2;
  if (joint.terms().size() == 1)  // a single term is point-valued
    result.outputs = {joint.quantity1(0), joint.quantity2(0)};
  for (std::size_t t = 0; t < joint.terms().size(); ++t) {
    const double q1 = joint.quantity1(t);
    const double q2 = joint.quantity2(t);
    const double p = joint.terms()[t].amplitude * joint.terms()[t].amplitude;
    result.distribution.push_back({q1, q2, p});
    result.consumer_surplus += p * consumer_surplus(params, q1 + q2, convention);
    result.negative_price = result.negative_price || price_is_negative(params, q1 + q2);
  }
  result.welfare = result.profit1 + result.profit2 + result.consumer_surplus;
  return result;
}

ScenarioResult grover_joint_scenario(const MarketParams& params,
                                     const StrategySpace& grid,
                                     std::optional<int> iterations,
                                     OracleRestriction restriction, Rng& rng,
                                     CsConvention convention) {
  const std::size_t n = grid.size();
  const PayoffTable table = payoff_table(params, grid, grid, convention);
  std::vector<double> industry_profit;
  industry_profit.reserve(table.rows.size());
  for (const PayoffRow& row : table.rows) industry_profit.push_back(row.total_profit);

  std::function<bool(std::size_t)> predicate;
  if (restriction == OracleRestriction::Symmetric)
    predicate = [n](std::size_t flat) { return flat / n == flat % n; };
  const Oracle oracle = oracle_from_argmax(industry_profit, predicate);

  const int k = iterations.value_or(
      optimal_iterations(oracle.dimension, oracle.marked.size()));
  GroverRun run = grover_iterate(StateVector::uniform(n * n), oracle, k);
  const std::size_t flat = measure(run.state, rng);

  ScenarioResult result;
  result.kind = ScenarioKind::GroverJoint;
  result.params = params;
  result.convention = convention;
  fill_point_economics(result, grid.label(flat / n), grid.label(flat % n));
  result.selection_probability =
      run.state.amplitude(flat) * run.state.amplitude(flat);
  result.grover_trace = std::move(run.trace);
  result.negative_price = result.negative_price || table.negative_price;
  return result;
}

ScenarioResult durr_hoyer_best_response_scenario(const MarketParams& params,
                                                 const StrategySpace& grid,
                                                 double opponent_q, Rng& rng,
                                                 const SearchBudget& budget,
                                                 CsConvention convention) {
  if (opponent_q < 0.0) throw std::domain_error("opponent output must be >= 0");
  std::vector<double> profits;
  profits.reserve(grid.size());
  for (double q : grid.labels()) profits.push_back(profit(params, q, q + opponent_q));

  ExtremumResult found = durr_hoyer_max(profits, rng, budget);

  ScenarioResult result;
  result.kind = ScenarioKind::DurrHoyerBestResponse;
  result.params = params;
  result.convention = convention;
  fill_point_economics(result, grid.label(found.index), opponent_q);
  result.search_trace = std::move(found.trace);
  return result;
}

ComparisonRow compare(const ScenarioResult& classical, const ScenarioResult& quantum) {
  if (classical.convention != quantum.convention)
    throw std::invalid_argument("cannot compare results under different CS conventions");
  if (!(classical.params == quantum.params))
    throw std::invalid_argument("cannot compare results for different market parameters");

  ParetoVerdict verdict;
  if (all_close(classical, quantum)) {
    verdict = ParetoVerdict::Equivalent;
  } else if (weakly_dominates(quantum, classical)) {
    verdict = ParetoVerdict::QuantumParetoImproves;
  } else if (weakly_dominates(classical, quantum)) {
    verdict = ParetoVerdict::ClassicalParetoImproves;
  } else {
    verdict = ParetoVerdict::Incomparable;
  }

  return ComparisonRow{classical.outputs,
                       {classical.profit1, classical.profit2},
                       classical.consumer_surplus,
                       quantum.outputs,
                       {quantum.profit1, quantum.profit2},
                       quantum.consumer_surplus,
                       verdict};
}

}  // namespace qcournot
