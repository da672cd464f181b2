#include <doctest.h>

#include <random>

#include "lascar/errors.hpp"
#include "lascar/expr.hpp"
#include "oracles.hpp"

using namespace lascar;

namespace {

const auto basis = IrrationalBasis::standard();
RealValue alpha(std::size_t i) { return RealValue::symbol(basis, i - 1); }
StarValue exact(const RealValue& v) { return StarValue(v); }
StarValue plus_eps(const Rational& q) { return StarValue(RealValue(q), EpsTag::PlusEps); }
StarValue minus_eps(const Rational& q) { return StarValue(RealValue(q), EpsTag::MinusEps); }
StarValue q(long p, long d = 1) { return StarValue(RealValue(ratio(p, d))); }

StarSet around(const Rational& r) {
  return {minus_eps(r), StarValue(RealValue(r)), plus_eps(r)};
}

// Small pool covering every rule: exact and tagged rationals, irrationals,
// and irrationals whose sums cancel to rationals.
std::vector<StarValue> pool() {
  std::vector<StarValue> out;
  for (long n : {0, 1, -1, 2})
    for (long d : {2, 3}) {
      Rational r = ratio(n, d);
      out.insert(out.end(), {StarValue(RealValue(r)), plus_eps(r), minus_eps(r)});
    }
  for (const RealValue& v : {alpha(1), -alpha(1), alpha(2), RealValue(ratio(1, 2)) - alpha(1) + alpha(2), -alpha(2)})
    out.push_back(exact(v));
  return out;
}

}  // namespace

TEST_CASE("plus_star on the documented cases") {
  CHECK(plus_star(q(1, 3), q(1, 4)) == StarSet{q(7, 12)});
  CHECK(plus_star(exact(alpha(1)), exact(RealValue(1) - alpha(1))) == around(1));
  CHECK(plus_star(plus_eps(ratio(1, 2)), minus_eps(ratio(1, 3))) == around(ratio(5, 6)));
  CHECK(plus_star(plus_eps(ratio(1, 2)), plus_eps(ratio(1, 4))) == StarSet{plus_eps(ratio(3, 4))});
  for (const auto& x : pool()) CHECK(plus_star(x, q(0)) == StarSet{x});
}

TEST_CASE("plus_star agrees with sign expansion on every pair from the pool") {
  for (const auto& x : pool())
    for (const auto& y : pool()) {
      INFO(x.to_string() << " + " << y.to_string());
      CHECK(plus_star(x, y) == oracle::plus(x, y));
    }
}

TEST_CASE("neg_star and times_star") {
  CHECK(neg_star(plus_eps(ratio(1, 2))) == minus_eps(ratio(-1, 2)));
  CHECK(neg_star(exact(alpha(1))) == exact(-alpha(1)));
  CHECK(times_star(2, plus_eps(ratio(1, 3))) == plus_eps(ratio(2, 3)));
  CHECK(times_star(-1, plus_eps(ratio(1, 3))) == minus_eps(ratio(-1, 3)));
  for (const auto& x : pool()) {
    CHECK(neg_star(neg_star(x)) == x);
    CHECK(times_star(1, x) == x);
    CHECK(times_star(-1, x) == neg_star(x));
  }
}

TEST_CASE("sum_star folds") {
  CHECK(sum_star({exact(alpha(1)), exact(-alpha(1))}) == around(0));
  CHECK(sum_star({q(1, 4), q(1, 4), q(1, 2)}) == StarSet{q(1)});
  std::vector<StarValue> three{exact(alpha(1)), exact(RealValue(ratio(1, 2)) - alpha(1) + alpha(2)), exact(-alpha(2))};
  StarSet left = oracle::plus(oracle::plus(three[0], three[1]), three[2]);
  StarSet right;
  for (const auto& p : oracle::plus(three[1], three[2])) right.merge(oracle::plus(three[0], p));
  CHECK(left == right);
  CHECK(sum_star(three) == left);
  CHECK(sum_star(three) == around(ratio(1, 2)));
  CHECK_THROWS_AS(sum_star(std::span<const StarValue>{}), UsageError);
}

TEST_CASE("mod_Z_reduce picks the canonical representative") {
  CHECK(mod_Z_reduce(q(7, 12)) == q(7, 12));
  CHECK(mod_Z_reduce(minus_eps(ratio(-1, 2))) == minus_eps(ratio(1, 2)));
  CHECK(mod_Z_reduce(minus_eps(0)) == minus_eps(1));
  CHECK(mod_Z_reduce(exact(alpha(1) + RealValue(3))) == exact(alpha(1)));
  for (const auto& x : pool()) {
    INFO(x.to_string());
    CHECK(mod_Z_reduce(x) == oracle::reduce(x));
  }
}

TEST_CASE("equivalences modulo infinitesimals and integers") {
  for (const auto& x : pool()) CHECK(equiv_zero(x, x));
  CHECK(equiv_zero(plus_eps(0), q(0)));
  CHECK_FALSE(equiv_zero(q(1, 3), q(1, 2)));
  CHECK(equiv_Z(exact(alpha(1)), exact(alpha(1) + RealValue(1))));
  CHECK(equiv_Z(plus_eps(0), minus_eps(1)));
  CHECK_FALSE(equiv_Z(q(1, 3), q(1, 2)));
}

TEST_CASE("to_real_mod_Z forgets tags and integers") {
  CHECK(to_real_mod_Z(plus_eps(ratio(1, 2))) == RealValue(ratio(1, 2)));
  CHECK(to_real_mod_Z(q(0)) == RealValue(0));
  CHECK(to_real_mod_Z(exact(alpha(1) + RealValue(3))) == alpha(1).fractional());
  for (const auto& x : pool()) CHECK(equiv_Z(x, StarValue(to_real_mod_Z(x))));
}

TEST_CASE("star expressions") {
  CHECK(eval_star("a1 + (1 - a1)", basis).to_string() == "{1-e, 1, 1+e}");
  CHECK(eval_star("0 + 1/2", basis).to_string() == "{1/2}");
  CHECK(eval_star("1/2+e + 1/3-e", basis).to_string() == "{5/6-e, 5/6, 5/6+e}");
  CHECK(eval_star("2*(1/3+e)", basis) == StarSet{plus_eps(ratio(2, 3))});
  CHECK(parse_star_value("1/2-e", basis) == minus_eps(ratio(1, 2)));
  try {
    eval_star("1/2 + + ", basis);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}
