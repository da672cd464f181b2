#include <doctest.h>

#include "lascar/chain.hpp"
#include "lascar/errors.hpp"
#include "lascar/sampling.hpp"
#include "lascar/shell.hpp"

using namespace lascar;

namespace {

const auto basis = IrrationalBasis::standard();
RealValue alpha(std::size_t i) { return RealValue::symbol(basis, i - 1); }
Point P(const RealValue& v, long iota = 0) { return Point(v, iota); }

// Vertex objects over support {0,1,2,3}.
const std::array<Point, 4> V{P(alpha(1)), P(alpha(2)), P(alpha(3)), P(alpha(4))};

// A 2-simplex on support {i,j,k} whose faces are each moved by their own
// translation, so the attaching data is nontrivial.
Simplex2 simplex(std::array<int, 3> sup, std::array<Point, 3> images, std::array<Translation, 3> moves) {
  const std::array<std::array<int, 2>, 3> pos{{{1, 2}, {0, 2}, {0, 1}}};
  std::array<Edge1, 3> faces;
  for (int f = 0; f < 3; ++f) {
    auto [q, r] = pos[f];
    faces[f] = make_edge(sup[q], sup[r], V[sup[q]], V[sup[r]], moves[f].apply(images[q]), moves[f].apply(images[r]));
  }
  return make_simplex(sup, images, faces);
}

Translation shift(const RealValue& v, long iota = 0) { return {v, iota}; }

// The boundary written out term by term.
Chain expected_boundary(const Simplex2& s) {
  return Chain(1, {{s.faces[0], 1}, {s.faces[1], -1}, {s.faces[2], 1}});
}

Chain expected_boundary(const Edge1& e) {
  return Chain(0, {{Vertex0{e.support[1], e.vertex_high}, 1}, {Vertex0{e.support[0], e.vertex_low}, -1}});
}

}  // namespace

TEST_CASE("edges") {
  Edge1 e = make_edge(0, 2, V[0], V[2], P(0), P(alpha(5)));
  CHECK(e.sd_type() == StarValue(alpha(5)));
  CHECK(boundary(Simplex(e)) == expected_boundary(e));
  CHECK_THROWS(boundary(boundary(Simplex(e))));
  CHECK_THROWS_AS(make_edge(2, 0, V[2], V[0], P(0), P(alpha(5))), PreconditionError);
  CHECK_THROWS_AS(make_edge(0, 1, V[0], V[1], P(0), P(ratio(1, 3))), PreconditionError);
}

TEST_CASE("2-simplex boundary is evaluated face by face") {
  Simplex2 s = simplex({0, 1, 3}, {P(0), P(alpha(5)), P(alpha(6), 1)},
                       {shift(0), shift(ratio(1, 3)), shift(alpha(7), -2)});
  CHECK(boundary(Simplex(s)) == expected_boundary(s));
  CHECK(boundary(boundary(Simplex(s))).empty());
  CHECK(is_shell(boundary(Simplex(s))));
  for (int i = 0; i < 3; ++i) CHECK(boundary_i(Simplex(s), i) == Simplex(s.faces[i]));
}

TEST_CASE("simplex invariants are enforced") {
  std::array<Point, 3> images{P(0), P(alpha(5)), P(alpha(6))};
  Edge1 f12 = make_edge(1, 2, V[1], V[2], images[1], images[2]);
  Edge1 f02 = make_edge(0, 2, V[0], V[2], images[0], images[2]);
  Edge1 f01 = make_edge(0, 1, V[0], V[1], images[0], images[1]);
  CHECK_NOTHROW(make_simplex({0, 1, 2}, images, {f12, f02, f01}));
  Edge1 wrong_type = make_edge(0, 1, V[0], V[1], images[0], P(alpha(8)));
  CHECK_THROWS_AS(make_simplex({0, 1, 2}, images, {f12, f02, wrong_type}), PreconditionError);
  Edge1 wrong_object = make_edge(0, 2, V[3], V[2], images[0], images[2]);
  CHECK_THROWS_AS(make_simplex({0, 1, 2}, images, {f12, wrong_object, f01}), PreconditionError);
  CHECK_THROWS_AS(make_simplex({0, 1, 2}, images, {f02, f12, f01}), PreconditionError);
}

TEST_CASE("chain arithmetic cancels structurally equal simplices") {
  Simplex2 s = simplex({0, 1, 2}, {P(0), P(alpha(5)), P(alpha(6))}, {shift(0), shift(0), shift(0)});
  Simplex2 t = simplex({0, 1, 2}, {P(0), P(alpha(5)), P(alpha(6))}, {shift(ratio(1, 2)), shift(0), shift(0)});
  Chain c(2, {{s, 2}, {t, -1}});
  CHECK(c.length() == 3);
  CHECK((c - c).empty());
  CHECK(2 * c == c + c);
  CHECK(c.support() == std::set<int>{0, 1, 2});
  Chain d = boundary(c);
  CHECK(d == 2 * expected_boundary(s) - expected_boundary(t));
  CHECK(boundary(d).empty());
  CHECK(boundary(Chain(2)).empty());
}

TEST_CASE("automorphisms act on chains and commute with the boundary") {
  Simplex2 s = simplex({0, 2, 3}, {P(alpha(5)), P(0), P(alpha(6), 2)}, {shift(alpha(7)), shift(0, 1), shift(0)});
  Chain c(2, {{s, 1}});
  CHECK(apply_automorphism(Translation{0, 0}, c) == c);
  Sampler smp(basis, 3);
  for (int t = 0; t < 50; ++t) {
    Translation u = smp.translation();
    CHECK(boundary(apply_automorphism(u, c)) == apply_automorphism(u, boundary(c)));
  }
}

TEST_CASE("shell recognition") {
  Representation r{P(0), P(alpha(1)), P(alpha(2)), P(ratio(1, 2))};
  Shell1 sh = make_shell(r);
  CHECK(is_shell(sh.as_chain()));
  Edge1 stray = make_edge(0, 2, V[3], V[2], P(0), P(alpha(2)));
  Chain bad(1, {{sh.e12, 1}, {stray, -1}, {sh.e01, 1}});
  CHECK_FALSE(is_shell(bad));
  CHECK_FALSE(is_shell(Chain(1, {{sh.e01, 1}})));
}
