#include <doctest.h>

#include "lascar/errors.hpp"
#include "lascar/m2.hpp"
#include "lascar/sampling.hpp"
#include "lascar/shell.hpp"
#include "oracles.hpp"

using namespace lascar;

namespace {

const auto basis = IrrationalBasis::standard();
RealValue alpha(std::size_t i) { return RealValue::symbol(basis, i - 1); }
Point P(const RealValue& v, long iota = 0) { return Point(v, iota); }

std::vector<Point> orbit(const Point& z, int n, int direction) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back(rotate(z, ratio(direction * i, n)));
  return out;
}

}  // namespace

TEST_CASE("short-arc relations") {
  Point a = P(alpha(1));
  CHECK(u_less(a, rotate(a, ratio(1, 8)), ratio(1, 4)));
  CHECK(u_eq(a, rotate(a, ratio(1, 2)), ratio(1, 2)));
  CHECK(u_less(a, rotate(a, ratio(7, 8)), ratio(1, 4)));
  CHECK_FALSE(u_less(a, rotate(a, ratio(1, 4)), ratio(1, 4)));
  CHECK(u_less(a, P(alpha(1), 5), ratio(1, 100)));
  CHECK_THROWS_AS(u_less(a, a, ratio(3, 4)), PreconditionError);
  CHECK_THROWS_AS(u_eq(a, a, 0), PreconditionError);
}

TEST_CASE("S'_k on the documented cases") {
  Point a = P(alpha(2), 1), b = P(alpha(3));
  CHECK(s_prime_k(a, rotate(a, ratio(1, 4)), rotate(a, ratio(1, 2)), 3));
  CHECK_FALSE(s_prime_k(a, b, b, 4));
}

TEST_CASE("S'_k defines the circular order") {
  Sampler s(basis, 5);
  for (int k = 3; k <= 6; ++k)
    for (int t = 0; t < 500; ++t) {
      Point x = s.point(), y = s.point(), z = s.point();
      if (t % 4 == 0) y = rotate(x, ratio(s.uniform(0, 2 * k), 2 * k));
      if (t % 5 == 0) z = P(y.angle(), s.uniform(-2, 2));
      INFO("k = " << k << ": " << x.to_string() << " | " << y.to_string() << " | " << z.to_string());
      bool expected = oracle::clockwise(x, y, z);
      CHECK(s_relation(x, y, z) == expected);
      CHECK(s_prime_k(x, y, z, k) == expected);
    }
}

TEST_CASE("E_n classes") {
  Point z = P(alpha(1), 2);
  CHECK(classify_En(std::vector<Point>{z, rotate(z, ratio(1, 3)), rotate(z, ratio(2, 3))}) == EnClass::Forward);
  CHECK(classify_En(std::vector<Point>{z, rotate(z, ratio(2, 3)), rotate(z, ratio(1, 3))}) == EnClass::Backward);
  CHECK(classify_En(std::vector<Point>{z, P(alpha(2)), P(alpha(3))}) == EnClass::Other);
  for (int n = 3; n <= 7; ++n) {
    CHECK(classify_En(orbit(z, n, 1)) == EnClass::Forward);
    CHECK(classify_En(orbit(z, n, -1)) == EnClass::Backward);
    auto nudged = orbit(z, n, 1);
    nudged.back() = Point(nudged.back().angle(), nudged.back().iota() + 1);
    CHECK(classify_En(nudged) == EnClass::Other);
  }
}

TEST_CASE("brackets through S alone enclose the exact bracket") {
  Sampler s(basis, 9);
  for (int t = 0; t < 100; ++t) {
    Point a = s.point(), b = s.point();
    M2Bracket e = bracket_via_m2(a, b);
    RealValue exact = bracket(a, b).value;
    INFO(a.to_string() << " | " << b.to_string());
    CHECK(encloses_mod_Z(e, exact));
    CHECK(e.high - e.low <= Rational(1, 1 << 20));
    if (e.exact) CHECK(RealValue(e.low) == exact);
  }
}
