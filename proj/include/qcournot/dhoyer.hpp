#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcournot/grover.hpp"
#include "qcournot/rng.hpp"

namespace qcournot {

// Marks exactly the indices with values[i] > threshold (strict), so a value
// tied with the current best is never re-marked and the search terminates.
Oracle threshold_oracle(std::span<const double> values, double threshold);

// How many amplification rounds each search round runs.
//   ExactCount:         optimal_iterations(n, m) using the simulator's
//                       knowledge of the marked count.
//   RandomizedDoubling: iteration count drawn uniformly from a geometrically
//                       growing window, mimicking the unknown-m setting.
enum class GroverSchedule { ExactCount, RandomizedDoubling };

struct SearchBudget {
  std::size_t max_rounds = 1;
  GroverSchedule schedule = GroverSchedule::ExactCount;

  // ceil(22.5 * sqrt(n)) rounds, the usual bound for this family of searches.
  static SearchBudget standard(std::size_t dimension);
};

struct SearchRound {
  std::size_t best_index;
  double best_value;
  double threshold;
  std::size_t marked_count;
  int grover_iterations;
  std::optional<std::size_t> measured_index;  // empty on the terminal round
  bool accepted;
};

enum class Termination { Natural, BudgetExhausted };

// Round-by-round record of one adaptive search. A natural ending carries a
// terminal round with marked_count == 0.
struct ThresholdSearchTrace {
  std::size_t initial_index = 0;
  std::vector<SearchRound> rounds;
  Termination termination = Termination::BudgetExhausted;
};

struct ExtremumResult {
  std::size_t index;
  double value;
  ThresholdSearchTrace trace;
};

// Adaptive maximum search: guess a start, repeatedly amplify the indices
// beating the current best, accept improvements, stop when nothing beats it
// (or the budget runs out, flagged in the trace).
ExtremumResult durr_hoyer_max(std::span<const double> values, Rng& rng,
                              const SearchBudget& budget);

// Maximum search over negated values; trace thresholds and best values are
// mapped back, so they are non-increasing for min traces.
ExtremumResult durr_hoyer_min(std::span<const double> values, Rng& rng,
                              const SearchBudget& budget);

}  // namespace qcournot
