#include "lascar/walk.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lascar/errors.hpp"
#include "lascar/iota_solver.hpp"

namespace lascar {

namespace {

// The part of a 1-chain supported on {i, j}.
Chain restrict_to(const Chain& c, int i, int j) {
  std::array<int, 2> key{std::min(i, j), std::max(i, j)};
  Chain out(1);
  for (const auto& t : c.terms())
    if (std::get<Edge1>(t.simplex).support == key) out.add(t.simplex, t.coef);
  return out;
}

Chain signed_boundary(const std::pair<int, Simplex2>& term) {
  return term.first * boundary(Simplex(term.second));
}

int iota_sign(const Point& x, const Point& y) { return sgn(Rational(y.iota() - x.iota())); }

bool rational_gap(const Point& x, const Point& y) { return (y.angle() - x.angle()).is_rational(); }

std::vector<Point> walk_points(const ChainWalk& w) {
  std::vector<Point> out;
  for (const auto& [sign, b] : w.terms) {
    out.insert(out.end(), b.images.begin(), b.images.end());
    for (const auto& e : b.faces) out.insert(out.end(), {e.vertex_low, e.vertex_high, e.image_low, e.image_high});
  }
  return out;
}

}  // namespace

Chain ChainWalk::as_chain() const {
  Chain out(2);
  for (const auto& [sign, b] : terms) out.add(b, sign);
  return out;
}

bool verify_chain_walk(const ChainWalk& w, const Edge1& f01, const Edge1& f02) {
  if (w.terms.empty() || w.index_seq.size() != w.terms.size() + 1) return false;
  const std::size_t m = w.terms.size() - 1;
  const auto& k = w.index_seq;
  if (k.front() != 1 || k.back() != 2) return false;
  if (std::any_of(k.begin(), k.end(), [](int x) { return x == 0; })) return false;
  for (std::size_t i = 0; i <= m; ++i) {
    const auto& [sign, b] = w.terms[i];
    if (sign != 1 && sign != -1) return false;
    if (!simplex_defect(b).empty()) return false;
    std::set<int> want{k[i], k[i + 1], 0};
    if (want.size() != 3 || std::set<int>(b.support.begin(), b.support.end()) != want) return false;
  }
  if (restrict_to(signed_boundary(w.terms.front()), 0, 1) != Chain(1, {{f01, 1}})) return false;
  if (restrict_to(signed_boundary(w.terms.back()), 0, 2) != Chain(1, {{f02, -1}})) return false;
  for (std::size_t i = 0; i < m; ++i) {
    int ki = k[i + 1];
    Chain sum = restrict_to(signed_boundary(w.terms[i]), 0, ki) + restrict_to(signed_boundary(w.terms[i + 1]), 0, ki);
    if (!sum.empty()) return false;
  }
  return true;
}

std::string walk_representation_defect(const WalkRepresentation& r, const Shell1& s) {
  const auto& d = r.d;
  if (d.size() < 2 || d.size() % 2 != 0) return "path length must be even and positive";
  const int n = static_cast<int>(d.size()) / 2 - 1;
  if (r.pivot < 0 || r.pivot > n) return "pivot out of range";
  const int p = 2 * r.pivot;
  if (!(r.rep.b == d[p] && r.rep.c == d[p + 1])) return "pivot step is not (b, c)";
  if (!represents(s, r.rep)) return "extracted quadruple does not represent the shell";
  if (sd(r.apex, d.front()) != sd(r.rep.a, r.rep.b)) return "first step type differs from (a, b)";
  if (sd(r.apex, d.back()) != sd(r.rep.a_prime, r.rep.c)) return "last step type differs from (a', c)";
  for (int i = 0; i <= n; ++i) {
    std::array<Point, 3> triple{d[2 * i], d[2 * i + 1], r.apex};
    if (!independent(triple)) return "step " + std::to_string(i) + " is not independent over the apex";
  }
  if (sd(d[p], d[p + 1]) != s.e12.sd_type()) return "pivot step has the wrong type";
  if (static_cast<int>(r.matching.size()) != n) return "matching has the wrong size";
  std::set<int> from, to;
  for (auto [even, odd] : r.matching) {
    if (even % 2 != 0 || even == p || even < 0 || even > 2 * n) return "matching domain is wrong";
    if (odd % 2 != 1 || odd < 1 || odd > 2 * n - 1) return "matching range is wrong";
    from.insert(even);
    to.insert(odd);
    if (sd(d[even], d[even + 1]) != sd(d[odd + 1], d[odd])) return "matched steps have different types";
  }
  if (static_cast<int>(from.size()) != n || static_cast<int>(to.size()) != n) return "matching is not a bijection";
  return {};
}

WalkRepresentation walk_representation(const ChainWalk& w) {
  if (w.terms.empty()) throw PreconditionError("empty walk");
  const Edge1& f01 = w.terms.front().second.faces[2];
  const Edge1& f02 = w.terms.back().second.faces[1];
  if (!verify_chain_walk(w, f01, f02)) throw PreconditionError("not a chain walk");
  const std::array<int, 3> base{0, 1, 2};
  for (const auto& [sign, b] : w.terms)
    if (b.support != base) throw PreconditionError("walk leaves the support {0,1,2}");
  auto shell = as_shell(boundary(w.as_chain()));
  if (!shell) throw PreconditionError("walk boundary is not a 1-shell");
  const int m = static_cast<int>(w.terms.size()) - 1;
  const int n = m / 2;

  // Re-realize every simplex around one apex: angles follow by translation,
  // infinitesimal parts are solved jointly so shared steps agree.
  const Point apex = w.terms.front().second.images[0];
  std::vector<RealValue> angle(2 * n + 2);
  IotaSystem sys;
  const std::size_t ix = sys.add(apex.iota());
  std::vector<std::size_t> id(2 * n + 2);
  for (auto& v : id) v = sys.add();
  for (int i = 0; i <= m; ++i) {
    const auto& img = w.terms[i].second.images;
    int first = i % 2 == 0 ? i : i + 1;
    int second = i % 2 == 0 ? i + 1 : i;
    Translation t = Translation::between(img[0], apex);
    angle[first] = t.apply(img[1]).angle();
    angle[second] = t.apply(img[2]).angle();
    if (rational_gap(img[0], img[1])) sys.relate(ix, id[first], iota_sign(img[0], img[1]));
    if (rational_gap(img[0], img[2])) sys.relate(ix, id[second], iota_sign(img[0], img[2]));
    if (rational_gap(img[1], img[2])) sys.relate(id[first], id[second], iota_sign(img[1], img[2]));
  }
  auto iotas = sys.solve();
  if (!iotas) throw PreconditionError("walk steps admit no common frame");

  WalkRepresentation r;
  r.apex = apex;
  for (int k = 0; k <= 2 * n + 1; ++k) r.d.emplace_back(angle[k], (*iotas)[id[k]]);

  std::vector<int> evens, odds;
  for (int i = 0; i <= m; ++i) (i % 2 == 0 ? evens : odds).push_back(i);
  auto face12 = [&w](int i) -> const Edge1& { return w.terms[i].second.faces[0]; };
  auto pivot = std::find_if(evens.begin(), evens.end(), [&](int i) { return face12(i) == shell->e12; });
  if (pivot == evens.end()) throw PreconditionError("no pivot simplex carries f12");
  r.pivot = *pivot / 2;
  evens.erase(pivot);
  for (int e : evens) {
    auto match = std::find_if(odds.begin(), odds.end(), [&](int o) { return face12(o) == face12(e); });
    if (match == odds.end()) throw PreconditionError("unmatched 12-face");
    r.matching.emplace_back(e, *match);
    odds.erase(match);
  }

  const int p = 2 * r.pivot;
  r.rep.b = r.d[p];
  r.rep.c = r.d[p + 1];
  r.rep.a = Translation::between(r.d.front(), r.d[p]).apply(apex);
  r.rep.a_prime = Translation::between(r.d.back(), r.d[p + 1]).apply(apex);
  if (auto defect = walk_representation_defect(r, *shell); !defect.empty())
    throw std::logic_error("internal: walk representation invariant failed: " + defect);
  return r;
}

namespace {

struct WalkSearch {
  const Shell1& s;
  Point apex;
  Point v0, v1, v2;
  std::vector<RealValue> pool;

  // Odd step l goes d_{2l+1} -> d_{2l+2} with angle odd[l]; even step j
  // (j != pivot) is matched to odd step partner[j].
  std::optional<ChainWalk> attempt(int n, const std::vector<RealValue>& odd, int pivot,
                                   const std::vector<int>& partner) const {
    const StarValue n01 = s.e01.sd_type(), n12 = s.e12.sd_type(), n02 = s.e02.sd_type();
    std::vector<RealValue> step(2 * n + 1);
    for (int j = 0; j <= n; ++j) step[2 * j] = j == pivot ? n12.value() : -odd[partner[j]];
    for (int l = 0; l < n; ++l) step[2 * l + 1] = odd[l];
    std::vector<RealValue> angle{apex.angle() + n01.value()};
    for (const auto& st : step) angle.push_back(angle.back() + st);
    if (!(Point(angle.back()) == Point(apex.angle() + n02.value()))) return std::nullopt;

    std::vector<int> free_steps;
    for (int l = 0; l < n; ++l)
      if (odd[l].is_rational()) free_steps.push_back(l);
    for (unsigned mask = 0; mask < (1u << free_steps.size()); ++mask) {
      IotaSystem sys;
      const std::size_t ix = sys.add(apex.iota());
      std::vector<std::size_t> id(2 * n + 2);
      for (auto& v : id) v = sys.add();
      auto tagged = [&](std::size_t i, std::size_t j, const StarValue& t) {
        if (!t.is_exact()) sys.relate(i, j, static_cast<int>(t.tag()));
      };
      tagged(ix, id[0], n01);
      tagged(ix, id[2 * n + 1], n02);
      tagged(id[2 * pivot], id[2 * pivot + 1], n12);
      for (std::size_t q = 0; q < free_steps.size(); ++q) {
        int l = free_steps[q];
        int sign = (mask >> q) & 1u ? 1 : -1;
        sys.relate(id[2 * l + 1], id[2 * l + 2], sign);
        int j = static_cast<int>(std::find(partner.begin(), partner.end(), l) - partner.begin());
        sys.relate(id[2 * j], id[2 * j + 1], -sign);
      }
      for (int k = 0; k <= 2 * n + 1; ++k)
        if ((angle[k] - apex.angle()).is_rational()) sys.not_equal(ix, id[k]);
      auto iotas = sys.solve();
      if (!iotas) continue;
      std::vector<Point> d;
      for (int k = 0; k <= 2 * n + 1; ++k) d.emplace_back(angle[k], (*iotas)[id[k]]);
      try {
        if (auto w = build(n, d, pivot, partner)) return w;
      } catch (const PreconditionError&) {
        // a candidate realization violated a simplex invariant; try the next
      }
    }
    return std::nullopt;
  }

  std::optional<ChainWalk> build(int n, const std::vector<Point>& d, int pivot, const std::vector<int>& partner) const {
    auto f01 = [&](int k) { return make_edge(0, 1, v0, v1, apex, d[k]); };
    auto f02 = [&](int k) { return make_edge(0, 2, v0, v2, apex, d[k]); };
    std::vector<Edge1> step_face(n);  // 12-face shared by odd step l and its partner
    for (int j = 0; j <= n; ++j)
      if (j != pivot) step_face[partner[j]] = make_edge(1, 2, v1, v2, d[2 * j], d[2 * j + 1]);
    ChainWalk w;
    const int m = 2 * n;
    for (int i = 0; i <= m; ++i) {
      w.index_seq.push_back(i % 2 == 0 ? 1 : 2);
      if (i % 2 == 0) {
        Edge1 e12 = i / 2 == pivot ? s.e12 : step_face[partner[i / 2]];
        Edge1 e01 = i == 0 ? s.e01 : f01(i);
        Edge1 e02 = i == m ? s.e02 : f02(i + 1);
        w.terms.emplace_back(1, make_simplex({0, 1, 2}, {apex, d[i], d[i + 1]}, {e12, e02, e01}));
      } else {
        w.terms.emplace_back(-1, make_simplex({0, 1, 2}, {apex, d[i + 1], d[i]}, {step_face[i / 2], f02(i), f01(i + 1)}));
      }
    }
    w.index_seq.push_back(2);
    if (!verify_chain_walk(w, s.e01, s.e02)) return std::nullopt;
    if (boundary(w.as_chain()) != s.as_chain()) return std::nullopt;
    return w;
  }

  std::optional<ChainWalk> search(int n) const {
    std::vector<std::size_t> choice(n, 0);
    std::vector<RealValue> odd(n);
    for (;;) {
      for (int l = 0; l < n; ++l) odd[l] = pool[choice[l]];
      for (int pivot = 0; pivot <= n; ++pivot) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
          std::vector<int> partner(n + 1, -1);
          for (int j = 0, q = 0; j <= n; ++j)
            if (j != pivot) partner[j] = perm[q++];
          if (auto w = attempt(n, odd, pivot, partner)) return w;
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      int l = 0;
      while (l < n && ++choice[l] == pool.size()) choice[l++] = 0;
      if (l == n) return std::nullopt;
    }
  }
};

}  // namespace

std::optional<ChainWalk> search_walk(const Shell1& s, int n_max, PointContext& ctx) {
  if (n_max < 0) throw UsageError("walk search bound must be non-negative");
  if (auto defect = shell_defect(s); !defect.empty()) throw PreconditionError(defect);
  if (s.support() != std::array<int, 3>{0, 1, 2}) throw PreconditionError("walk search needs a shell on {0,1,2}");
  // Matched steps cancel in angle, so the walk closes up only when the
  // endpoint angles agree; this does not depend on the candidate.
  if (!shell_class(s).value.is_zero()) return std::nullopt;

  PointContext local = ctx;
  Chain sc = s.as_chain();
  std::vector<Point> seen;
  for (const auto& t : sc.terms()) {
    const auto& e = std::get<Edge1>(t.simplex);
    seen.insert(seen.end(), {e.vertex_low, e.vertex_high, e.image_low, e.image_high});
  }
  local.reserve(seen);

  WalkSearch search{s, s.e01.image_low, s.e01.vertex_low, s.e01.vertex_high, s.e12.vertex_high, {}};
  auto add_pool = [&search](const RealValue& v) {
    if (std::none_of(search.pool.begin(), search.pool.end(), [&v](const RealValue& u) { return u == v; }))
      search.pool.push_back(v);
  };
  add_pool(RealValue(0));
  for (const StarValue& t : {s.e01.sd_type(), s.e12.sd_type(), s.e02.sd_type()}) {
    add_pool(t.value());
    add_pool(-t.value());
  }
  for (int i = 0; i < n_max; ++i) add_pool(local.fresh_generic().angle());

  for (int n = 0; n <= n_max; ++n) {
    if (auto w = search.search(n)) {
      ctx.reserve(walk_points(*w));
      return w;
    }
  }
  return std::nullopt;
}

DEBound d_E_upper_bound(const Point& a, const Point& b, int n_max, PointContext& ctx) {
  if (!bracket(a, b).value.is_zero()) return {DEBound::Kind::Infinite, 0};
  if (a == b) return {DEBound::Kind::Finite, 0};
  int worst = 0;
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    std::array<Point, 2> ends{x, y};
    ctx.reserve(ends);
    Point p = ctx.fresh_generic();
    Point q = ctx.fresh_generic();
    Shell1 s = make_shell({x, p, q, y});
    auto w = search_walk(s, n_max, ctx);
    if (!w) return {DEBound::Kind::BeyondSearch, n_max};
    worst = std::max(worst, static_cast<int>(w->terms.size() - 1) / 2);
  }
  return {DEBound::Kind::Finite, worst};
}

}  // namespace lascar
