#include <doctest.h>

#include "lascar/sampling.hpp"
#include "oracles.hpp"

using namespace lascar;

namespace {

const auto basis = IrrationalBasis::standard();
RealValue alpha(std::size_t i) { return RealValue::symbol(basis, i - 1); }
Point P(const RealValue& v, long iota = 0) { return Point(v, iota); }

}  // namespace

TEST_CASE("rotations") {
  CHECK(rotate(P(0), ratio(1, 2)) == P(ratio(1, 2)));
  Point a = P(alpha(1), 2);
  CHECK(rotate(rotate(a, ratio(1, 3)), ratio(2, 3)) == a);
  CHECK(rotate(P(alpha(1)), ratio(1, 4)).angle() == (alpha(1) + RealValue(ratio(1, 4))).fractional());
  CHECK(rotate(P(alpha(1)), ratio(1, 4)).angle() == alpha(1) + RealValue(ratio(1, 4)));
}

TEST_CASE("directed distance on the documented cases") {
  Point a = P(alpha(2));
  CHECK(sd(a, rotate(a, ratio(1, 2))) == StarValue(RealValue(ratio(1, 2))));
  CHECK(sd(a, a) == StarValue(RealValue(0)));
  CHECK(sd(a, P(alpha(2), 1)) == StarValue(RealValue(0), EpsTag::PlusEps));
  CHECK(sd(a, P(alpha(2), -1)) == StarValue(RealValue(1), EpsTag::MinusEps));
  CHECK(sd(P(0), P(alpha(1))) == StarValue(alpha(1)));
  CHECK(sd(P(alpha(1)), P(0)) == StarValue(RealValue(1) - alpha(1)));
}

TEST_CASE("reverse law against the directed-distance identity") {
  Sampler s(basis, 7);
  for (int t = 0; t < 500; ++t) {
    Point a = s.point(), b = s.point();
    if (a == b) continue;
    StarSet back = oracle::plus(StarValue(RealValue(1)), neg_star(sd(a, b)));
    REQUIRE(back.size() == 1);
    CHECK(sd(b, a) == oracle::reduce(back.front()));
  }
}

TEST_CASE("circular order") {
  Point a = P(alpha(1), 1);
  CHECK(s_relation(a, rotate(a, ratio(1, 4)), rotate(a, ratio(1, 2))));
  CHECK_FALSE(s_relation(a, rotate(a, ratio(1, 2)), rotate(a, ratio(1, 4))));
  Point b = P(alpha(2));
  CHECK_FALSE(s_relation(a, b, b));
  // Equal irrational distances: b, c an infinitesimal apart are still ordered.
  Point x = P(ratio(5, 3) - alpha(2), -2), y = P(RealValue(1) - alpha(1), 2), z = P(RealValue(1) - alpha(1), 3);
  CHECK(sd(x, y) == sd(x, z));
  CHECK(s_relation(x, y, z));
  CHECK_FALSE(s_relation(x, z, y));
}

TEST_CASE("circular order agrees with the floating-point picture") {
  Sampler s(basis, 11);
  for (int t = 0; t < 2000; ++t) {
    Point a = s.point(), b = s.point(), c = s.point();
    if (t % 3 == 0) c = P(b.angle(), s.uniform(-3, 3));
    INFO(a.to_string() << " | " << b.to_string() << " | " << c.to_string());
    CHECK(s_relation(a, b, c) == oracle::clockwise(a, b, c));
  }
}

TEST_CASE("independence") {
  std::vector<Point> dependent{P(0), P(ratio(1, 3))};
  std::vector<Point> generic{P(0), P(alpha(1))};
  std::vector<Point> shifted{P(0), P(0, 1)};
  CHECK_FALSE(independent(dependent));
  CHECK(independent(generic));
  CHECK(independent(shifted));
}

TEST_CASE("Lascar equivalence of points") {
  Point a = P(alpha(3));
  CHECK(lascar_equivalent(a, P(alpha(3), 1)));
  CHECK(lascar_equivalent(a, a));
  CHECK_FALSE(lascar_equivalent(a, rotate(a, ratio(1, 2))));
}

TEST_CASE("fresh generics are independent of everything reserved") {
  PointContext ctx(basis);
  std::vector<Point> seen{P(alpha(1)), P(alpha(2) - alpha(1), 3)};
  ctx.reserve(seen);
  for (int i = 0; i < 4; ++i) {
    Point f = ctx.fresh_generic();
    for (const auto& p : seen) CHECK_FALSE(sd(p, f).is_exact_rational());
    seen.push_back(f);
  }
  CHECK(independent(seen));
}
