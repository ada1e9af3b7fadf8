#pragma once

#include <cstddef>
#include <vector>

#include "qcournot/strategy_space.hpp"

namespace qcournot {

// Linear inverse demand P(Q) = intercept - slope*Q with a constant marginal
// cost. The only market model in this library.
struct MarketParams {
  double intercept;  // currency per unit
  double slope;      // currency per unit^2
  double unit_cost;  // currency per unit

  // Validates intercept > 0, slope > 0, unit_cost >= 0 and
  // intercept > unit_cost (otherwise no output is profitable).
  static MarketParams create(double intercept, double slope, double unit_cost);

  bool operator==(const MarketParams&) const = default;
};

// Which triangle stands in for consumer surplus.
//   PriceTriangle:  P(Q) * Q / 2  (half of revenue at the market point)
//   DemandTriangle: slope * Q^2 / 2 (area between inverse demand and price)
enum class CsConvention { PriceTriangle, DemandTriangle };

struct FirmOutcome {
  double quantity;
  double revenue;
  double cost;
  double profit;  // always revenue - cost
};

struct NashEquilibrium {
  double quantity;  // per firm
  double profit;    // per firm
};

// Market price at total output Q. Unclamped: negative results are returned
// as-is so that generalized grids are not silently corrupted; callers that
// care test price_is_negative.
double price(const MarketParams& params, double total_output);

inline bool price_is_negative(const MarketParams& params, double total_output) {
  return params.intercept - params.slope * total_output < 0.0;
}

// (price(Q) - unit_cost) * own_output. Requires 0 <= own_output <= total.
double profit(const MarketParams& params, double own_output, double total_output);

FirmOutcome firm_outcome(const MarketParams& params, double own_output, double total_output);

// Profit-maximizing output against a fixed rival output, floored at zero.
double best_response(const MarketParams& params, double rival_output);

// Symmetric equilibrium of the two-firm quantity game:
// q* = (intercept - unit_cost) / (3*slope) per firm.
NashEquilibrium nash_equilibrium(const MarketParams& params);

double consumer_surplus(const MarketParams& params, double total_output,
                        CsConvention convention);

// profit1 + profit2 + consumer surplus at Q = q1 + q2.
double welfare(const MarketParams& params, double q1, double q2,
               CsConvention convention);

// One spreadsheet row per quantity pair.
struct PayoffRow {
  double q1;
  double q2;
  double total_output;
  double price;
  FirmOutcome firm1;
  FirmOutcome firm2;
  double total_profit;
  double consumer_surplus;
  double welfare;
};

struct PayoffTable {
  MarketParams params;
  CsConvention convention;
  std::vector<double> grid1;
  std::vector<double> grid2;
  std::vector<PayoffRow> rows;  // grid1-major order, |grid1| * |grid2| rows
  bool negative_price = false;  // diagnostic: some row priced below zero
};

PayoffTable payoff_table(const MarketParams& params, const StrategySpace& grid1,
                         const StrategySpace& grid2, CsConvention convention);

struct AmortizedLoan {
  double monthly_payment;
  double total_paid;  // monthly_payment * months, unrounded
};

// Fixed-rate level-payment amortization at annual_rate compounded monthly.
// A zero rate degenerates to principal / months.
AmortizedLoan amortized_payment(double principal, double annual_rate, int months);

}  // namespace qcournot
