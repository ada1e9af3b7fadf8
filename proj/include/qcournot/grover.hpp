#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qcournot/rng.hpp"
#include "qcournot/statevec.hpp"

namespace qcournot {

// Set of basis indices whose amplitudes get their sign flipped. May be empty
// (adaptive threshold search relies on that case).
struct Oracle {
  std::size_t dimension = 0;
  std::vector<std::size_t> marked;  // sorted, unique, all < dimension

  static Oracle from_marked(std::size_t dimension, std::vector<std::size_t> marked);
  bool is_marked(std::size_t index) const;
};

// Marks every index attaining the maximum value, optionally restricted to
// indices accepted by the predicate. Ties mark all maximizers.
Oracle oracle_from_argmax(std::span<const double> values,
                          const std::function<bool(std::size_t)>& restriction = {});

// amplitude_i -> -amplitude_i on marked indices.
StateVector apply_oracle(const StateVector& state, const Oracle& oracle);

// Reflection about the mean: a_i -> 2*mean - a_i. Norm preserving.
StateVector diffusion(const StateVector& state);

enum class TraceStage { Init, PostOracle, PostDiffusion };

struct TraceSnapshot {
  TraceStage stage;
  int iteration;  // 0 for Init, then 1-based
  std::vector<double> amplitudes;
};

// Full amplitude record of an amplification run, one snapshot per stage.
struct GroverTrace {
  std::vector<TraceSnapshot> snapshots;
};

struct GroverRun {
  StateVector state;
  GroverTrace trace;
};

// Applies (diffusion . oracle) `iterations` times, recording every stage.
GroverRun grover_iterate(const StateVector& start, const Oracle& oracle,
                         int iterations);

// Same transformation without trace capture, for inner loops.
StateVector amplify(const StateVector& start, const Oracle& oracle, int iterations);

// round(pi / (4*asin(sqrt(m/n))) - 1/2), floored at zero: the iteration count
// that maximizes the probability of landing on a marked index.
int optimal_iterations(std::size_t dimension, std::size_t marked_count);

struct GroverSearchResult {
  std::size_t index;
  GroverTrace trace;
};

// Uniform start, `iterations` amplification rounds (optimal schedule when
// unset), then a single measurement.
GroverSearchResult grover_search(std::span<const double> values, const Oracle& oracle,
                                 std::optional<int> iterations, Rng& rng);

}  // namespace qcournot
