#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qcournot/errors.hpp"
#include "qcournot/market.hpp"
#include "qcournot/rng.hpp"
#include "qcournot/strategy_space.hpp"

namespace qcournot {

// Normalization tolerance for externally supplied amplitudes. Rounded admits
// values quoted to three decimals (0.707 standing in for 1/sqrt 2); nothing
// is ever renormalized silently.
enum class NormCheck { Strict, Rounded };

constexpr double norm_tolerance(NormCheck check) {
  return check == NormCheck::Strict ? 1e-9 : 1e-3;
}

// Signed real amplitudes over an N-dimensional basis. Immutable; the squared
// amplitudes sum to one within 1e-9 for every constructed instance.
class StateVector {
 public:
  static StateVector uniform(std::size_t dimension);
  static StateVector from_amplitudes(std::vector<double> amplitudes,
                                     NormCheck check = NormCheck::Strict);

  std::size_t dimension() const { return amplitudes_.size(); }
  double amplitude(std::size_t i) const { return amplitudes_.at(i); }
  const std::vector<double>& amplitudes() const { return amplitudes_; }

 private:
  explicit StateVector(std::vector<double> amplitudes)
      : amplitudes_(std::move(amplitudes)) {}
  std::vector<double> amplitudes_;
};

// Constructors bound to a strategy space (the basis labels).
StateVector uniform_state(const StrategySpace& space);
StateVector from_amplitudes(const StrategySpace& space, std::vector<double> amplitudes,
                            NormCheck check = NormCheck::Strict);

// Correlated joint state of two firms, stored sparsely as (i, j, amplitude)
// terms over the two spaces. Pairs are distinct and amplitudes normalized.
class JointState {
 public:
  struct Term {
    std::size_t index1;
    std::size_t index2;
    double amplitude;
  };

  static JointState from_terms(StrategySpace space1, StrategySpace space2,
                               std::vector<Term> terms,
                               NormCheck check = NormCheck::Strict);

  const StrategySpace& space1() const { return space1_; }
  const StrategySpace& space2() const { return space2_; }
  const std::vector<Term>& terms() const { return terms_; }

  double quantity1(std::size_t term) const { return space1_.label(terms_.at(term).index1); }
  double quantity2(std::size_t term) const { return space2_.label(terms_.at(term).index2); }

 private:
  JointState(StrategySpace s1, StrategySpace s2, std::vector<Term> terms)
      : space1_(std::move(s1)), space2_(std::move(s2)), terms_(std::move(terms)) {}
  StrategySpace space1_;
  StrategySpace space2_;
  std::vector<Term> terms_;
};

// Diagonal observable: one value per basis state.
struct Observable {
  std::vector<double> values;
};

// p_i = amplitude_i^2.
std::vector<double> probabilities(const StateVector& state);
// One probability per stored term.
std::vector<double> probabilities(const JointState& state);

// Samples a basis index with probability amplitude^2.
std::size_t measure(const StateVector& state, Rng& rng);
// Samples a term and returns its (index1, index2) pair.
std::pair<std::size_t, std::size_t> measure(const JointState& state, Rng& rng);
// Repeated draws from one state, for frequency studies.
std::vector<std::size_t> measure_batch(const StateVector& state, Rng& rng,
                                       std::size_t draws);

// <state| diag(values) |state> = sum of p_i * value_i.
double expected_value(const StateVector& state, const Observable& observable);

// Probability-weighted per-firm profits over the joint terms.
std::pair<double, double> expected_profits(const JointState& state,
                                           const MarketParams& params);

}  // namespace qcournot
