#include "qcournot/market.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcournot {

MarketParams MarketParams::create(double intercept, double slope, double unit_cost) {
  if (!(intercept > 0.0)) throw std::domain_error("market intercept must be > 0");
  if (!(slope > 0.0)) throw std::domain_error("market slope must be > 0");
  if (!(unit_cost >= 0.0)) throw std::domain_error("market unit cost must be >= 0");
  if (!(intercept > unit_cost))
    throw std::domain_error("market intercept must exceed unit cost");
  return MarketParams{intercept, slope, unit_cost};
}

double price(const MarketParams& params, double total_output) {
  if (total_output < 0.0) throw std::domain_error("total output must be >= 0");
  return params.intercept - params.slope * total_output;
}

double profit(const MarketParams& params, double own_output, double total_output) {
  if (own_output < 0.0) throw std::domain_error("own output must be >= 0");
  if (own_output > total_output)
    throw std::domain_error("own output cannot exceed total output");
  return (price(params, total_output) - params.unit_cost) * own_output;
}

FirmOutcome firm_outcome(const MarketParams& params, double own_output,
                         double total_output) {
  const double p = price(params, total_output);
  const double revenue = p * own_output;
  const double cost = params.unit_cost * own_output;
  return FirmOutcome{own_output, revenue, cost, revenue - cost};
}

double best_response(const MarketParams& params, double rival_output) {
  if (rival_output < 0.0) throw std::domain_error("rival output must be >= 0");
  const double interior =
      (params.intercept - params.unit_cost - params.slope * rival_output) /
      (2.0 * params.slope);
  return std::max(0.0, interior);
}

NashEquilibrium nash_equilibrium(const MarketParams& params) {
  const double q = (params.intercept - params.unit_cost) / (3.0 * params.slope);
  return NashEquilibrium{q, profit(params, q, 2.0 * q)};
}

double consumer_surplus(const MarketParams& params, double total_output,
                        CsConvention convention) {
  if (total_output < 0.0) throw std::domain_error("total output must be >= 0");
  switch (convention) {
    case CsConvention::PriceTriangle: {
      const double p = price(params, total_output);
      if (p < 0.0)
        throw std::domain_error(
            "price-triangle consumer surplus is undefined at a negative price");
      return p * total_output / 2.0;
    }
    case CsConvention::DemandTriangle:
      return params.slope * total_output * total_output / 2.0;
  }
  throw std::logic_error("unreachable");
}

double welfare(const MarketParams& params, double q1, double q2,
               CsConvention convention) {
  const double total = q1 + q2;
  return profit(params, q1, total) + profit(params, q2, total) +
         consumer_surplus(params, total, convention);
}

PayoffTable payoff_table(const MarketParams& params, const StrategySpace& grid1,
                         const StrategySpace& grid2, CsConvention convention) {
  PayoffTable table{params, convention, grid1.labels(), grid2.labels(), {}, false};
  table.rows.reserve(grid1.size() * grid2.size());
  for (double q1 : grid1.labels()) {
    for (double q2 : grid2.labels()) {
      const double total = q1 + q2;
      PayoffRow row;
      row.q1 = q1;
      row.q2 = q2;
      row.total_output = total;
      row.price = price(params, total);
      if (row.price < 0.0) table.negative_price = true;
      row.firm1 = firm_outcome(params, q1, total);
      row.firm2 = firm_outcome(params, q2, total);
      row.total_profit = row.firm1.profit + row.firm2.profit;
      row.consumer_surplus = consumer_surplus(params, total, convention);
      row.welfare = row.total_profit + row.consumer_surplus;
      table.rows.push_back(row);
    }
  }
  return table;
}

AmortizedLoan amortized_payment(double principal, double annual_rate, int months) {
  if (!(principal > 0.0)) throw std::domain_error("principal must be > 0");
  if (annual_rate < 0.0) throw std::domain_error("annual rate must be >= 0");
  if (months < 1) throw std::domain_error("months must be >= 1");
  const double r = annual_rate / 12.0;
  double payment;
  if (r == 0.0) {
    payment = principal / months;
  } else {
    payment = principal * r / (1.0 - std::pow(1.0 + r, -months));
  }
  return AmortizedLoan{payment, payment * months};
}

}  // namespace qcournot
