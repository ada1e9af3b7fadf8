#include "qcournot/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcournot {

Oracle Oracle::from_marked(std::size_t dimension, std::vector<std::size_t> marked) {
  if (dimension == 0) throw std::invalid_argument("oracle dimension must be >= 1");
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  if (!marked.empty() && marked.back() >= dimension)
    throw DimensionError("marked index out of range");
  return Oracle{dimension, std::move(marked)};
}

bool Oracle::is_marked(std::size_t index) const {
  return std::binary_search(marked.begin(), marked.end(), index);
}

Oracle oracle_from_argmax(std::span<const double> values,
                          const std::function<bool(std::size_t)>& restriction) {
  if (values.empty()) throw std::invalid_argument("values must be non-empty");
  bool any = false;
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (restriction && !restriction(i)) continue;
    if (!any || values[i] > best) {
      best = values[i];
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("restriction excludes every index");
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (restriction && !restriction(i)) continue;
    if (values[i] == best) marked.push_back(i);
  }
  return Oracle::from_marked(values.size(), std::move(marked));
}

StateVector apply_oracle(const StateVector& state, const Oracle& oracle) {
  if (oracle.dimension != state.dimension())
    throw DimensionError("oracle dimension does not match state dimension");
  std::vector<double> amps = state.amplitudes();
  for (std::size_t i : oracle.marked) amps[i] = -amps[i];
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector diffusion(const StateVector& state) {
  const auto& amps = state.amplitudes();
  double mean = 0.0;
  for (double a : amps) mean += a;
  mean /= static_cast<double>(amps.size());
  std::vector<double> reflected;
  reflected.reserve(amps.size());
  for (double a : amps) reflected.push_back(2.0 * mean - a);
  return StateVector::from_amplitudes(std::move(reflected));
}

GroverRun grover_iterate(const StateVector& start, const Oracle& oracle,
                         int iterations) {
  if (iterations < 0) throw std::invalid_argument("iteration count must be >= 0");
  GroverRun run{start, {}};
  run.trace.snapshots.push_back({TraceStage::Init, 0, start.amplitudes()});
  for (int i = 1; i <= iterations; ++i) {
    run.state = apply_oracle(run.state, oracle);
    run.trace.snapshots.push_back({TraceStage::PostOracle, i, run.state.amplitudes()});
    run.state = diffusion(run.state);
    run.trace.snapshots.push_back({TraceStage::PostDiffusion, i, run.state.amplitudes()});
  }
  return run;
}

StateVector amplify(const StateVector& start, const Oracle& oracle, int iterations) {
  if (iterations < 0) throw std::invalid_argument("iteration count must be >= 0");
  StateVector state = start;
  for (int i = 0; i < iterations; ++i) state = diffusion(apply_oracle(state, oracle));
  return state;
}

int optimal_iterations(std::size_t dimension, std::size_t marked_count) {
  if (dimension == 0) throw std::domain_error("dimension must be >= 1");
  if (marked_count == 0 || marked_count > dimension)
    throw std::domain_error("marked count must be in [1, dimension]");
  const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) /
                                           static_cast<double>(dimension)));
  const double schedule = std::numbers::pi / (4.0 * theta) - 0.5;
  return static_cast<int>(std::max(0.0, std::round(schedule)));
}

GroverSearchResult grover_search(std::span<const double> values, const Oracle& oracle,
                                 std::optional<int> iterations, Rng& rng) {
  if (values.size() != oracle.dimension)
    throw DimensionError("values length does not match oracle dimension");
  if (oracle.marked.empty())
    throw std::invalid_argument("nothing to amplify: oracle marks no index");
  const int k =
      iterations.value_or(optimal_iterations(oracle.dimension, oracle.marked.size()));
  GroverRun run = grover_iterate(StateVector::uniform(oracle.dimension), oracle, k);
  return GroverSearchResult{measure(run.state, rng), std::move(run.trace)};
}

}  // namespace qcournot
