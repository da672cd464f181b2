#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "lascar/circle.hpp"

namespace lascar {

/// Seeded generators for property sampling. Values use the first two basis
/// symbols with small coefficients so that cancellations are frequent.
class Sampler {
 public:
  Sampler(std::shared_ptr<IrrationalBasis> basis, std::uint64_t seed);

  int uniform(int lo, int hi);
  bool coin(double p = 0.5);
  /// k/den with den in 1..max_den and |value| <= range.
  Rational rational(int max_den = 6, int range = 2);
  /// q + c1*a1 + c2*a2 with c_i in {-1, 0, 1}; rational with probability p_rational.
  RealValue real(double p_rational = 0.4);
  StarValue star();
  EpsTag tag();
  Point point(double p_rational = 0.4);
  Translation translation(double p_rational = 0.5);

  std::mt19937_64& engine() { return rng_; }
  const std::shared_ptr<IrrationalBasis>& basis() const { return basis_; }

 private:
  std::shared_ptr<IrrationalBasis> basis_;
  std::mt19937_64 rng_;
};

}  // namespace lascar
