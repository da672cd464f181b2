#include <doctest.h>

#include "lascar/sampling.hpp"
#include "lascar/walk.hpp"

using namespace lascar;

namespace {

const auto basis = IrrationalBasis::standard();
RealValue alpha(std::size_t i) { return RealValue::symbol(basis, i - 1); }
Point P(const RealValue& v, long iota = 0) { return Point(v, iota); }

PointContext context_after(const Representation& r) {
  PointContext ctx(basis);
  std::array<Point, 4> seen{r.a, r.b, r.c, r.a_prime};
  ctx.reserve(seen);
  return ctx;
}

int half_length(const ChainWalk& w) { return (static_cast<int>(w.terms.size()) - 1) / 2; }

}  // namespace

TEST_CASE("a single simplex is a walk of length one") {
  Representation r{P(0), P(alpha(1)), P(alpha(2)), P(0)};
  Shell1 sh = make_shell(r);
  std::array<Point, 3> images{r.a, r.b, r.c};
  Simplex2 f = make_simplex({0, 1, 2}, images, {sh.e12, sh.e02, sh.e01});
  ChainWalk w{{{1, f}}, {1, 2}};
  CHECK(verify_chain_walk(w, sh.e01, sh.e02));
  CHECK(boundary(w.as_chain()) == sh.as_chain());
  WalkRepresentation wr = walk_representation(w);
  CHECK(wr.pivot == 0);
  CHECK(wr.d.size() == 2);
  CHECK(wr.matching.empty());
  CHECK(walk_representation_defect(wr, sh).empty());
}

TEST_CASE("walk search on the documented shells") {
  Representation trivial{P(0), P(alpha(1)), P(alpha(2)), P(0)};
  PointContext ctx = context_after(trivial);
  auto w1 = search_walk(make_shell(trivial), 3, ctx);
  REQUIRE(w1);
  CHECK(w1->terms.size() == 1);

  // Sd(P(0), P(alpha_2)) already equals Sd(P(iota), P(alpha_2)), so a single
  // simplex bounds this shell.
  Representation shifted{P(0), P(alpha(1)), P(alpha(2)), P(0, 1)};
  auto w2 = search_walk(make_shell(shifted), 3, ctx);
  REQUIRE(w2);
  CHECK(w2->terms.size() == 1);

  // Rational sides force the infinitesimal tags to be carried around the walk.
  Representation forced{P(0), P(ratio(1, 3), 1), P(ratio(2, 3), 2), P(0, 3)};
  Shell1 sh = make_shell(forced);
  PointContext ctx3 = context_after(forced);
  CHECK_FALSE(search_walk(sh, 0, ctx3));
  auto w3 = search_walk(sh, 3, ctx3);
  REQUIRE(w3);
  CHECK(half_length(*w3) == 1);
  CHECK(verify_chain_walk(*w3, sh.e01, sh.e02));
  CHECK(boundary(w3->as_chain()) == sh.as_chain());
  WalkRepresentation wr = walk_representation(*w3);
  CHECK(wr.matching.size() == 1);
  CHECK(walk_representation_defect(wr, sh).empty());

  Representation half{P(0), P(alpha(1)), P(alpha(2)), P(ratio(1, 2))};
  for (int n = 0; n <= 3; ++n) CHECK_FALSE(search_walk(make_shell(half), n, ctx));
}

TEST_CASE("broken telescoping is rejected") {
  Representation forced{P(0), P(ratio(1, 3), 1), P(ratio(2, 3), 2), P(0, 3)};
  Shell1 sh = make_shell(forced);
  PointContext ctx = context_after(forced);
  auto w = search_walk(sh, 3, ctx);
  REQUIRE(w);
  REQUIRE(w->terms.size() == 3);
  ChainWalk broken = *w;
  broken.terms[1].second = std::get<Simplex2>(transform(Translation{0, 1}, Simplex(broken.terms[1].second)));
  CHECK_FALSE(verify_chain_walk(broken, sh.e01, sh.e02));
  ChainWalk reindexed = *w;
  reindexed.index_seq[1] = 7;
  CHECK_FALSE(verify_chain_walk(reindexed, sh.e01, sh.e02));
}

TEST_CASE("walk verification is invariant under translation") {
  Sampler s(basis, 17);
  Representation forced{P(0), P(ratio(1, 3), 1), P(ratio(2, 3), 2), P(0, 3)};
  Shell1 sh = make_shell(forced);
  PointContext ctx = context_after(forced);
  auto w = search_walk(sh, 3, ctx);
  REQUIRE(w);
  for (int t = 0; t < 50; ++t) {
    Translation u = s.translation();
    ChainWalk moved = *w;
    for (auto& term : moved.terms) term.second = std::get<Simplex2>(transform(u, term.second));
    CHECK(verify_chain_walk(moved, std::get<Edge1>(transform(u, sh.e01)), std::get<Edge1>(transform(u, sh.e02))));
  }
}

TEST_CASE("d_E upper bounds") {
  PointContext ctx(basis);
  Point a = P(alpha(1));
  std::array<Point, 1> seen{a};
  ctx.reserve(seen);
  CHECK(d_E_upper_bound(a, rotate(a, ratio(1, 2)), 3, ctx).kind == DEBound::Kind::Infinite);
  DEBound same = d_E_upper_bound(a, a, 3, ctx);
  CHECK(same.kind == DEBound::Kind::Finite);
  CHECK(same.n == 0);
  DEBound near = d_E_upper_bound(a, P(alpha(1), 1), 3, ctx);
  CHECK(near.kind == DEBound::Kind::Finite);
  CHECK(near.n <= 1);
}
