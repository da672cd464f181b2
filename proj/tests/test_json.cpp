#include <doctest.h>

#include "lascar/errors.hpp"
#include "lascar/json_io.hpp"

using namespace lascar;

namespace {

const auto basis = IrrationalBasis::standard();
RealValue alpha(std::size_t i) { return RealValue::symbol(basis, i - 1); }
Point P(const RealValue& v, long iota = 0) { return Point(v, iota); }

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("points and values") {
  Point p = P(ratio(1, 3) + alpha(1) - ratio(2, 1) * alpha(2), -2);
  Json j = to_json(p);
  CHECK(j["iota"] == "-2");
  CHECK(point_from_json(reparse(j), basis) == p);
  CHECK(point_from_json(Json("a1"), basis) == P(alpha(1)));
  CHECK(point_from_json(Json::parse(R"({"angle": "1/2", "iota": 3})"), basis) == P(ratio(1, 2), 3));
  StarValue v(RealValue(ratio(5, 6)), EpsTag::MinusEps);
  CHECK(to_json(v) == "5/6-e");
  CHECK(star_from_json(reparse(to_json(v)), basis) == v);
  CHECK(to_json(StarSet{v, StarValue(RealValue(ratio(5, 6)))}) == Json::parse(R"(["5/6-e", "5/6"])"));
}

TEST_CASE("representations and translations") {
  Representation r{P(0), P(alpha(1)), P(alpha(2), 1), P(ratio(1, 2))};
  Json j = to_json(r);
  CHECK(j.contains("aPrime"));
  CHECK(representation_from_json(reparse(j), basis) == r);
  Translation t{alpha(3) - ratio(1, 4), 2};
  Translation back = translation_from_json(reparse(to_json(t)), basis);
  CHECK(back.shift == t.shift);
  CHECK(back.iota_shift == t.iota_shift);
}

TEST_CASE("chains") {
  Shell1 sh = make_shell({P(0), P(alpha(1)), P(alpha(2)), P(ratio(1, 2))});
  Chain c = sh.as_chain();
  CHECK(chain_from_json(reparse(to_json(c)), basis) == c);
  Simplex2 f = make_simplex({0, 1, 2}, {P(0), P(alpha(1)), P(alpha(2))},
                            {plain_edge(1, 2, P(alpha(1)), P(alpha(2))), plain_edge(0, 2, P(0), P(alpha(2))),
                             plain_edge(0, 1, P(0), P(alpha(1)))});
  CHECK(simplex2_from_json(reparse(to_json(f)), basis) == f);
  Chain two(2, {{f, 3}});
  CHECK(chain_from_json(reparse(to_json(two)), basis) == two);
}

TEST_CASE("malformed input is a usage error") {
  CHECK_THROWS_AS(representation_from_json(Json::parse(R"({"a": "0"})"), basis), UsageError);
  CHECK_THROWS_AS(point_from_json(Json::parse(R"({"angle": 3.5})"), basis), UsageError);
  CHECK_THROWS_AS(point_from_json(Json("1/2 +"), basis), ParseError);
  CHECK_THROWS_AS(chain_from_json(Json::parse(R"({"dim": 1, "terms": 4})"), basis), UsageError);
}
