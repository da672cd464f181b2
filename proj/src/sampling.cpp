#include "lascar/sampling.hpp"

namespace lascar {

Sampler::Sampler(std::shared_ptr<IrrationalBasis> basis, std::uint64_t seed) : basis_(std::move(basis)), rng_(seed) {
  basis_->reserve(2);
}

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational Sampler::rational(int max_den, int range) {
  long den = uniform(1, max_den);
  long num = uniform(static_cast<int>(-range * den), static_cast<int>(range * den));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RealValue Sampler::real(double p_rational) {
  RealValue v(rational());
  if (coin(p_rational)) return v;
  int c1 = 0, c2 = 0;
  while (c1 == 0 && c2 == 0) {
    c1 = uniform(-1, 1);
    c2 = uniform(-1, 1);
  }
  return v + RealValue::symbol(basis_, 0, c1) + RealValue::symbol(basis_, 1, c2);
}

EpsTag Sampler::tag() { return static_cast<EpsTag>(uniform(-1, 1)); }

StarValue Sampler::star() {
  RealValue v = real();
  return v.is_rational() ? StarValue(v, tag()) : StarValue(v);
}

Point Sampler::point(double p_rational) { return Point(real(p_rational), Rational(uniform(-3, 3))); }

Translation Sampler::translation(double p_rational) { return {real(p_rational), Rational(uniform(-3, 3))}; }

}  // namespace lascar
