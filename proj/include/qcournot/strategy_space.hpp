#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qcournot {

// Ordered grid of discrete output quantities. The positions double as basis
// labels for state vectors over the grid.
class StrategySpace {
 public:
  explicit StrategySpace(std::vector<double> quantities);

  std::size_t size() const { return quantities_.size(); }
  double label(std::size_t i) const { return quantities_.at(i); }
  const std::vector<double>& labels() const { return quantities_; }

  // Position of a quantity, matched to 1e-9; nullopt when absent.
  std::optional<std::size_t> index_of(double quantity) const;

  bool operator==(const StrategySpace&) const = default;

 private:
  std::vector<double> quantities_;
};

}  // namespace qcournot
