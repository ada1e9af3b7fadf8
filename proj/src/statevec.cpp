#include "qcournot/statevec.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace qcournot {
namespace {

double squared_sum(const std::vector<double>& amplitudes) {
  double sum = 0.0;
  for (double a : amplitudes) sum += a * a;
  return sum;
}

void check_normalized(double squared, NormCheck check) {
  if (std::abs(squared - 1.0) > norm_tolerance(check))
    throw NormalizationError("squared amplitudes sum to " + std::to_string(squared) +
                             ", not 1");
}

// Walk the cumulative distribution; the final index absorbs any tail lost to
// rounding.
std::size_t sample_categorical(const std::vector<double>& probabilities, Rng& rng) {
  const double u = next_unit(rng);
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
    cumulative += probabilities[i];
    if (u < cumulative) return i;
  }
  return probabilities.size() - 1;
}

}  // namespace

StateVector StateVector::uniform(std::size_t dimension) {
  if (dimension == 0) throw std::invalid_argument("dimension must be >= 1");
  const double amp = 1.0 / std::sqrt(static_cast<double>(dimension));
  return StateVector(std::vector<double>(dimension, amp));
}

StateVector StateVector::from_amplitudes(std::vector<double> amplitudes,
                                         NormCheck check) {
  if (amplitudes.empty()) throw std::invalid_argument("amplitudes must be non-empty");
  check_normalized(squared_sum(amplitudes), check);
  return StateVector(std::move(amplitudes));
}

StateVector uniform_state(const StrategySpace& space) {
  return StateVector::uniform(space.size());
}

StateVector from_amplitudes(const StrategySpace& space, std::vector<double> amplitudes,
                            NormCheck check) {
  if (amplitudes.size() != space.size())
    throw DimensionError("amplitude count " + std::to_string(amplitudes.size()) +
                         " does not match strategy space size " +
                         std::to_string(space.size()));
  return StateVector::from_amplitudes(std::move(amplitudes), check);
}

JointState JointState::from_terms(StrategySpace space1, StrategySpace space2,
                                  std::vector<Term> terms, NormCheck check) {
  if (terms.empty()) throw std::invalid_argument("joint state needs at least one term");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  double squared = 0.0;
  for (const Term& t : terms) {
    if (t.index1 >= space1.size() || t.index2 >= space2.size())
      throw DimensionError("joint term index out of range");
    if (!seen.insert({t.index1, t.index2}).second)
      throw std::invalid_argument("joint terms must have distinct index pairs");
    squared += t.amplitude * t.amplitude;
  }
  check_normalized(squared, check);
  return JointState(std::move(space1), std::move(space2), std::move(terms));
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p;
  p.reserve(state.dimension());
  for (double a : state.amplitudes()) p.push_back(a * a);
  return p;
}

std::vector<double> probabilities(const JointState& state) {
  std::vector<double> p;
  p.reserve(state.terms().size());
  for (const auto& t : state.terms()) p.push_back(t.amplitude * t.amplitude);
  return p;
}

std::size_t measure(const StateVector& state, Rng& rng) {
  return sample_categorical(probabilities(state), rng);
}

std::pair<std::size_t, std::size_t> measure(const JointState& state, Rng& rng) {
  const std::size_t term = sample_categorical(probabilities(state), rng);
  return {state.terms()[term].index1, state.terms()[term].index2};
}

std::vector<std::size_t> measure_batch(const StateVector& state, Rng& rng,
                                       std::size_t draws) {
  const std::vector<double> distribution = probabilities(state);
  std::vector<std::size_t> samples;
  samples.reserve(draws);
  for (std::size_t i = 0; i < draws; ++i)
    samples.push_back(sample_categorical(distribution, rng));
  return samples;
}

double expected_value(const StateVector& state, const Observable& observable) {
  if (observable.values.size() != state.dimension())
    throw DimensionError("observable dimension does not match state dimension");
  double total = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i)
    total += state.amplitude(i) * state.amplitude(i) * observable.values[i];
  return total;
}

std::pair<double, double> expected_profits(const JointState& state,
                                           const MarketParams& params) {
  double expected1 = 0.0;
  double expected2 = 0.0;
  for (std::size_t t = 0; t < state.terms().size(); ++t) {
    const double p = state.terms()[t].amplitude * state.terms()[t].amplitude;
    const double q1 = state.quantity1(t);
    const double q2 = state.quantity2(t);
    expected1 += p * profit(params, q1, q1 + q2);
    expected2 += p * profit(params, q2, q1 + q2);
  }
  return {expected1, expected2};
}

}  // namespace qcournot
