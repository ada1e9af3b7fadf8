#include "qcournot/strategy_space.hpp"

#include <cmath>
#include <stdexcept>

namespace qcournot {

StrategySpace::StrategySpace(std::vector<double> quantities)
    : quantities_(std::move(quantities)) {
  if (quantities_.empty())
    throw std::invalid_argument("strategy space must not be empty");
  for (std::size_t i = 1; i < quantities_.size(); ++i) {
    if (!(quantities_[i - 1] < quantities_[i]))
      throw std::invalid_argument("strategy space labels must be strictly increasing");
  }
}

std::optional<std::size_t> StrategySpace::index_of(double quantity) const {
  for (std::size_t i = 0; i < quantities_.size(); ++i) {
    if (std::abs(quantities_[i] - quantity) <= 1e-9) return i;
  }
  return std::nullopt;
}

}  // namespace qcournot
