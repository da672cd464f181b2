#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lascar/rational.hpp"

namespace lascar {

/// Finds rational values for infinitesimal coefficients subject to order
/// constraints. Free variables receive pairwise distinct values that also
/// avoid every fixed value.
class IotaSystem {
 public:
  std::size_t add(std::optional<Rational> fixed = std::nullopt);
  std::size_t size() const { return fixed_.size(); }

  void less(std::size_t i, std::size_t j) { strict_.push_back({i, j}); }
  void equal(std::size_t i, std::size_t j) { equal_.push_back({i, j}); }
  void not_equal(std::size_t i, std::size_t j) { distinct_.push_back({i, j}); }
  /// sign(x_j - x_i) must equal `sign`.
  void relate(std::size_t i, std::size_t j, int sign);

  /// nullopt when the constraints are contradictory.
  std::optional<std::vector<Rational>> solve() const;

 private:
  struct Pair {
    std::size_t i, j;
  };
  std::vector<std::optional<Rational>> fixed_;
  std::vector<Pair> strict_;
  std::vector<Pair> equal_;
  std::vector<Pair> distinct_;
};

}  // namespace lascar
