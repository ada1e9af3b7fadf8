#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qcournot/dhoyer.hpp"
#include "qcournot/serialize.hpp"

using namespace qcournot;

namespace {

// firm 1 profits on {10,20,30,40} against a rival fixed at 20
const std::vector<double> kTable1{600, 1000, 1200, 1200};

std::vector<double> random_values(Rng& rng, std::size_t n) {
  std::vector<double> values(n);
  for (double& v : values) v = std::floor(next_unit(rng) * 40.0);  // coarse: forces ties
  return values;
}

}  // namespace

TEST_CASE("threshold oracle marks strict improvements only") {
  CHECK(threshold_oracle(kTable1, 1000).marked == std::vector<std::size_t>{2, 3});
  CHECK(threshold_oracle(kTable1, 1200).marked.empty());
  const double bottom = -std::numeric_limits<double>::infinity();
  CHECK(threshold_oracle(kTable1, bottom).marked == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(threshold_oracle(std::vector<double>{}, 0), std::invalid_argument);
}

TEST_CASE("threshold monotonicity") {
  Rng rng = make_rng(100);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<double> values = random_values(rng, 1 + next_index(rng, 32));
    const double t1 = next_unit(rng) * 40.0;
    const double t2 = t1 + next_unit(rng) * 10.0;
    const Oracle low = threshold_oracle(values, t1);
    const Oracle high = threshold_oracle(values, t2);
    CHECK(std::includes(low.marked.begin(), low.marked.end(), high.marked.begin(),
                        high.marked.end()));
  }
}

TEST_CASE("walkthrough: start at the second-best value, finish in two rounds") {
  // seed 8 draws index 1 (value 1000) as the initial guess and measures an
  // improvement on the first round
  Rng rng = make_rng(8);
  const ExtremumResult result = durr_hoyer_max(kTable1, rng, SearchBudget::standard(4));
  CHECK(result.value == 1200);
  CHECK((result.index == 2 || result.index == 3));
  CHECK(result.trace.initial_index == 1);
  CHECK(result.trace.termination == Termination::Natural);
  REQUIRE(result.trace.rounds.size() == 2);

  const SearchRound& first = result.trace.rounds[0];
  CHECK(first.best_value == 1000);
  CHECK(first.threshold == 1000);
  CHECK(first.marked_count == 2);
  CHECK(first.accepted);
  REQUIRE(first.measured_index.has_value());
  CHECK(kTable1[*first.measured_index] == 1200);

  const SearchRound& last = result.trace.rounds[1];
  CHECK(last.best_value == 1200);
  CHECK(last.marked_count == 0);
  CHECK_FALSE(last.measured_index.has_value());
  CHECK_FALSE(last.accepted);
}

TEST_CASE("single element terminates immediately") {
  Rng rng = make_rng(0);
  const ExtremumResult result =
      durr_hoyer_max(std::vector<double>{42}, rng, SearchBudget::standard(1));
  CHECK(result.index == 0);
  CHECK(result.value == 42);
  CHECK(result.trace.termination == Termination::Natural);
  CHECK(result.trace.rounds.size() == 1);
}

TEST_CASE("budget exhaustion is flagged with the best so far") {
  Rng rng = make_rng(1);  // rejects the single search round it is allowed
  const ExtremumResult result = durr_hoyer_max(
      std::vector<double>{1, 2}, rng, SearchBudget{1, GroverSchedule::ExactCount});
  CHECK(result.trace.termination == Termination::BudgetExhausted);
  CHECK(result.value == 1);
  CHECK(result.trace.rounds.size() == 1);
}

TEST_CASE("natural termination returns the exact maximum") {
  for (GroverSchedule schedule :
       {GroverSchedule::ExactCount, GroverSchedule::RandomizedDoubling}) {
    Rng instance_rng = make_rng(77);
    int natural_runs = 0;
    for (int instance = 0; instance < 200; ++instance) {
      const std::vector<double> values =
          random_values(instance_rng, 1 + next_index(instance_rng, 64));
      const double truth = *std::max_element(values.begin(), values.end());
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SearchBudget budget = SearchBudget::standard(values.size());
        budget.schedule = schedule;
        Rng rng = make_rng(seed * 104729 + instance);
        const ExtremumResult result = durr_hoyer_max(values, rng, budget);
        if (result.trace.termination == Termination::Natural) {
          ++natural_runs;
          CHECK(result.value == truth);
          CHECK(values[result.index] == truth);
          CHECK(result.trace.rounds.back().marked_count == 0);
        }
      }
    }
    CHECK(natural_runs > 900);  // the standard budget almost always suffices
  }
}

TEST_CASE("best value increases strictly across accepted rounds") {
  Rng instance_rng = make_rng(31337);
  for (int instance = 0; instance < 50; ++instance) {
    const std::vector<double> values = random_values(instance_rng, 48);
    Rng rng = make_rng(instance);
    const ExtremumResult result =
        durr_hoyer_max(values, rng, SearchBudget::standard(values.size()));
    double last_accepted = values[result.trace.initial_index];
    for (const SearchRound& round : result.trace.rounds) {
      if (!round.accepted) continue;
      REQUIRE(round.measured_index.has_value());
      CHECK(values[*round.measured_index] > last_accepted);
      last_accepted = values[*round.measured_index];
    }
  }
}

TEST_CASE("identical inputs reproduce the trace byte for byte") {
  const std::vector<double> values{3.5, 1.25, 9, 9, 2, 8.75, 0.5};
  const SearchBudget budget{50, GroverSchedule::RandomizedDoubling};
  Rng rng1 = make_rng(4242);
  Rng rng2 = make_rng(4242);
  const ExtremumResult a = durr_hoyer_max(values, rng1, budget);
  const ExtremumResult b = durr_hoyer_max(values, rng2, budget);
  CHECK(search_trace_to_json(a.trace).dump() == search_trace_to_json(b.trace).dump());
  CHECK(a.index == b.index);
  CHECK(a.value == b.value);
}

TEST_CASE("minimum search") {
  Rng rng = make_rng(2);
  const ExtremumResult low = durr_hoyer_min(kTable1, rng, SearchBudget::standard(4));
  CHECK(low.value == 600);
  CHECK(low.index == 0);

  Rng rng2 = make_rng(3);
  const ExtremumResult flat =
      durr_hoyer_min(std::vector<double>{7, 7, 7}, rng2, SearchBudget::standard(3));
  CHECK(flat.value == 7);

  // minimizing the negated profit list finds the profit maximizer
  std::vector<double> negated{-500, -800, -1200, -2000, -1700, -1400, -1000, -600};
  Rng rng3 = make_rng(4);
  const ExtremumResult result = durr_hoyer_min(negated, rng3, SearchBudget::standard(8));
  CHECK(result.index == 3);
  CHECK(result.value == -2000);

  // mapped-back trace values are non-increasing for a min search
  double previous = std::numeric_limits<double>::infinity();
  for (const SearchRound& round : result.trace.rounds) {
    CHECK(round.best_value <= previous);
    previous = round.best_value;
  }
}

TEST_CASE("accepted rounds grow sublinearly with the grid") {
  for (std::size_t n : {16u, 64u, 256u}) {
    double accepted_total = 0.0;
    int runs = 0;
    Rng instance_rng = make_rng(n);
    for (int instance = 0; instance < 60; ++instance) {
      std::vector<double> values(n);
      for (double& v : values) v = next_unit(instance_rng);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng = make_rng(seed * 31 + instance);
        const ExtremumResult result =
            durr_hoyer_max(values, rng, SearchBudget::standard(n));
        for (const SearchRound& round : result.trace.rounds)
          if (round.accepted) accepted_total += 1.0;
        ++runs;
      }
    }
    CHECK(accepted_total / runs <= 3.0 * std::sqrt(static_cast<double>(n)));
  }
}
