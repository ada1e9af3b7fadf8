#include "qcournot/dhoyer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcournot {

Oracle threshold_oracle(std::span<const double> values, double threshold) {
  if (values.empty()) throw std::invalid_argument("values must be non-empty");
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] > threshold) marked.push_back(i);
  return Oracle::from_marked(values.size(), std::move(marked));
}

SearchBudget SearchBudget::standard(std::size_t dimension) {
  const auto rounds = static_cast<std::size_t>(
      std::ceil(22.5 * std::sqrt(static_cast<double>(dimension))));
  return SearchBudget{std::max<std::size_t>(1, rounds), GroverSchedule::ExactCount};
}

ExtremumResult durr_hoyer_max(std::span<const double> values, Rng& rng,
                              const SearchBudget& budget) {
  if (values.empty()) throw std::invalid_argument("values must be non-empty");
  if (budget.max_rounds < 1) throw std::invalid_argument("budget must allow >= 1 round");

  const std::size_t n = values.size();
  std::size_t best = next_index(rng, n);
  double best_value = values[best];

  ThresholdSearchTrace trace;
  trace.initial_index = best;
  trace.termination = Termination::BudgetExhausted;

  // Window for RandomizedDoubling; grows on failure, resets on success.
  double window = 1.0;
  const double window_cap = std::sqrt(static_cast<double>(n));

  for (std::size_t round = 0; round < budget.max_rounds; ++round) {
    const Oracle oracle = threshold_oracle(values, best_value);
    SearchRound record{best, best_value, best_value, oracle.marked.size(),
                       0,    std::nullopt, false};
    if (oracle.marked.empty()) {
      trace.rounds.push_back(record);
      trace.termination = Termination::Natural;
      break;
    }

    int iterations;
    if (budget.schedule == GroverSchedule::ExactCount) {
      iterations = optimal_iterations(n, oracle.marked.size());
    } else {
      iterations = static_cast<int>(
          next_below(rng, static_cast<std::uint64_t>(std::ceil(window))));
    }

    const StateVector state = amplify(StateVector::uniform(n), oracle, iterations);
    const std::size_t measured = measure(state, rng);
    record.grover_iterations = iterations;
    record.measured_index = measured;

    if (values[measured] > best_value) {
      record.accepted = true;
      best = measured;
      best_value = values[measured];
      window = 1.0;
    } else {
      window = std::min(window * 1.2, window_cap);
    }
    trace.rounds.push_back(record);
  }

  return ExtremumResult{best, best_value, std::move(trace)};
}

ExtremumResult durr_hoyer_min(std::span<const double> values, Rng& rng,
                              const SearchBudget& budget) {
  std::vector<double> negated(values.begin(), values.end());
  for (double& v : negated) v = -v;
  ExtremumResult result = durr_hoyer_max(negated, rng, budget);
  result.value = -result.value;
  for (SearchRound& round : result.trace.rounds) {
    round.best_value = -round.best_value;
    round.threshold = -round.threshold;
  }
  return result;
}

}  // namespace qcournot
