#pragma once

// Test-only statistics helpers, independent of the library under test.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace teststats {

// Regularized upper incomplete gamma Q(a, x), series / continued fraction.
inline double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::domain_error("gamma_q domain");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < 1000; ++n) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    const double p = sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    return 1.0 - p;
  }
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

// Goodness-of-fit p-value for observed counts against expected probabilities.
inline double chi_square_pvalue(const std::vector<std::size_t>& observed,
                                const std::vector<double>& expected_probability,
                                std::size_t draws) {
  double statistic = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = expected_probability[i] * static_cast<double>(draws);
    const double diff = static_cast<double>(observed[i]) - expected;
    statistic += diff * diff / expected;
  }
  const double dof = static_cast<double>(observed.size()) - 1.0;
  return gamma_q(dof / 2.0, statistic / 2.0);
}

}  // namespace teststats
