#include "lascar/shell.hpp"

#include <stdexcept>
#include <vector>

#include "lascar/errors.hpp"
#include "lascar/iota_solver.hpp"

namespace lascar {

namespace {

std::vector<Point> shell_points(const Shell1& s) {
  std::vector<Point> out;
  for (const Edge1* e : {&s.e01, &s.e12, &s.e02})
    out.insert(out.end(), {e->vertex_low, e->vertex_high, e->image_low, e->image_high});
  return out;
}

void check_boundary(const Chain& chain, const Chain& expected, const char* what) {
  if (boundary(chain) != expected) throw std::logic_error(std::string("internal: boundary check failed for ") + what);
}

// Moves rep so that its endpoints become (a, a_prime), keeping all three edge
// types. Angles follow by translation; infinitesimal parts are re-solved.
std::optional<Representation> realign(const Representation& src, const Point& a, const Point& a_prime) {
  Representation r = translate(Translation::between(src.a, a), src);
  if (!(r.a_prime.angle() == a_prime.angle())) return std::nullopt;
  IotaSystem sys;
  std::size_t ia = sys.add(a.iota()), ib = sys.add(), ic = sys.add(), iap = sys.add(a_prime.iota());
  auto keep = [&](std::size_t i, std::size_t j, const Point& x, const Point& y) {
    if ((y.angle() - x.angle()).is_rational()) sys.relate(i, j, sgn(Rational(y.iota() - x.iota())));
  };
  keep(ia, ib, src.a, src.b);
  keep(ib, ic, src.b, src.c);
  keep(iap, ic, src.a_prime, src.c);
  auto iotas = sys.solve();
  if (!iotas) return std::nullopt;
  return Representation{a, Point(r.b.angle(), (*iotas)[ib]), Point(r.c.angle(), (*iotas)[ic]), a_prime};
}

// a01 + a12 - a02 with apex d at index l; boundary is
// s - [0l](a, d) + [0l](low02, d).
Chain cone(const Shell1& s, const Representation& r, const Point& d, int l, const Point& low02) {
  auto [i0, i1, i2] = s.support();
  auto [v0, v1, v2] = s.vertices();
  Edge1 f0 = make_edge(i0, l, v0, d, r.a, d);
  Edge1 f0p = make_edge(i0, l, v0, d, low02, d);
  Edge1 f1 = make_edge(i1, l, v1, d, r.b, d);
  Edge1 f2 = make_edge(i2, l, v2, d, r.c, d);
  Chain out(2);
  out.add(make_simplex({i0, i1, l}, {r.a, r.b, d}, {f1, f0, s.e01}), 1);
  out.add(make_simplex({i1, i2, l}, {r.b, r.c, d}, {f2, f1, s.e12}), 1);
  out.add(make_simplex({i0, i2, l}, {r.a_prime, r.c, d}, {f2, f0p, s.e02}), -1);
  return out;
}

// a01 + a12 - b - a02 over fresh b, c at indices l3 < l4; boundary is
// s - ([0 l3](a,b) + [l3 l4](b,c) - [0 l4](a',c)).
Chain endpoint_part(const Shell1& s, const Representation& r, const Point& b, const Point& c, int l3, int l4) {
  auto [i0, i1, i2] = s.support();
  auto [v0, v1, v2] = s.vertices();
  Edge1 f03 = make_edge(i0, l3, v0, b, r.a, b);
  Edge1 f13 = make_edge(i1, l3, v1, b, r.b, b);
  Edge1 f23 = make_edge(i2, l3, v2, b, r.c, b);
  Edge1 f34 = make_edge(l3, l4, b, c, b, c);
  Edge1 f24 = make_edge(i2, l4, v2, c, r.c, c);
  Edge1 f04 = make_edge(i0, l4, v0, c, r.a_prime, c);
  Chain out(2);
  out.add(make_simplex({i0, i1, l3}, {r.a, r.b, b}, {f13, f03, s.e01}), 1);
  out.add(make_simplex({i1, i2, l3}, {r.b, r.c, b}, {f23, f13, s.e12}), 1);
  out.add(make_simplex({i2, l3, l4}, {r.c, b, c}, {f34, f24, f23}), -1);
  out.add(make_simplex({i0, i2, l4}, {r.a_prime, r.c, c}, {f24, f04, s.e02}), -1);
  return out;
}

}  // namespace

std::string representation_defect(const Representation& r) {
  auto dependent = [](const Point& x, const Point& y) { return sd(x, y).is_exact_rational(); };
  if (dependent(r.a, r.b)) return "representation points a, b are dependent";
  if (dependent(r.b, r.c)) return "representation points b, c are dependent";
  if (dependent(r.a_prime, r.c)) return "representation points a', c are dependent";
  return {};
}

Representation translate(const Translation& t, const Representation& r) {
  return {t.apply(r.a), t.apply(r.b), t.apply(r.c), t.apply(r.a_prime)};
}

Chain Shell1::as_chain() const { return Chain(1, {{e01, 1}, {e12, 1}, {e02, -1}}); }

Shell1 make_shell(const Representation& rep, std::array<int, 3> support) {
  return make_shell(rep, {rep.a, rep.b, rep.c}, support);
}

Shell1 make_shell(const Representation& rep, const std::array<Point, 3>& v, std::array<int, 3> support) {
  if (auto defect = representation_defect(rep); !defect.empty()) throw PreconditionError(defect);
  auto [i, j, k] = support;
  if (!(i < j && j < k)) throw PreconditionError("shell support not increasing");
  return {make_edge(i, j, v[0], v[1], rep.a, rep.b), make_edge(j, k, v[1], v[2], rep.b, rep.c),
          make_edge(i, k, v[0], v[2], rep.a_prime, rep.c)};
}

std::string shell_defect(const Shell1& s) {
  for (const Edge1* e : {&s.e01, &s.e12, &s.e02})
    if (auto d = edge_defect(*e); !d.empty()) return d;
  if (s.e01.support[1] != s.e12.support[0] || s.e01.support[0] != s.e02.support[0] ||
      s.e12.support[1] != s.e02.support[1])
    return "shell supports do not form a triangle";
  if (s.e01.vertex_low != s.e02.vertex_low || s.e01.vertex_high != s.e12.vertex_low ||
      s.e12.vertex_high != s.e02.vertex_high)
    return "shell edges disagree on a shared vertex object";
  return {};
}

std::optional<Shell1> as_shell(const Chain& c) {
  if (c.dim() != 1 || c.terms().size() != 3) return std::nullopt;
  std::vector<Edge1> plus, minus;
  for (const auto& t : c.terms()) {
    if (t.coef == 1)
      plus.push_back(std::get<Edge1>(t.simplex));
    else if (t.coef == -1)
      minus.push_back(std::get<Edge1>(t.simplex));
    else
      return std::nullopt;
  }
  if (plus.size() != 2 || minus.size() != 1) return std::nullopt;
  if (plus[0].support[0] > plus[1].support[0]) std::swap(plus[0], plus[1]);
  Shell1 s{plus[0], plus[1], minus[0]};
  if (!shell_defect(s).empty()) return std::nullopt;
  return s;
}

bool is_shell(const Chain& c) { return as_shell(c).has_value(); }

Representation representation_of(const Shell1& s) {
  const Point& a = s.e01.image_low;
  const Point& b = s.e01.image_high;
  Point c = Translation::between(s.e12.image_low, s.e12.image_high).apply(b);
  Point a_prime = Translation::between(s.e02.image_high, s.e02.image_low).apply(c);
  return {a, b, c, a_prime};
}

bool represents(const Shell1& s, const Representation& r) {
  return sd(r.a, r.b) == s.e01.sd_type() && sd(r.b, r.c) == s.e12.sd_type() && sd(r.a_prime, r.c) == s.e02.sd_type();
}

StarSet shell_holonomy(const Shell1& s) {
  return sum_star({s.e01.sd_type(), s.e12.sd_type(), neg_star(s.e02.sd_type())});
}

bool is_boundary(const Shell1& s) { return subset_of_integer_star(shell_holonomy(s)); }

std::optional<Chain> witness_boundary(const Shell1& s, PointContext& ctx) {
  if (auto defect = shell_defect(s); !defect.empty()) throw PreconditionError(defect);
  if (!is_boundary(s)) return std::nullopt;
  Representation r = representation_of(s);
  std::vector<Point> seen = shell_points(s);
  seen.insert(seen.end(), {r.c, r.a_prime});
  ctx.reserve(seen);
  Point d = ctx.fresh_generic();
  // sd(a', d) = sd(a, d): the endpoints differ by an infinitesimal only.
  Chain alpha = cone(s, r, d, s.support()[2] + 1, r.a);
  check_boundary(alpha, s.as_chain(), "boundary witness");
  return alpha;
}

H1Element bracket(const Point& a, const Point& b) { return H1Element(to_real_mod_Z(sd(a, b))); }

H1Element shell_class(const Shell1& s) {
  Representation r = representation_of(s);
  return bracket(r.a, r.a_prime);
}

Rebased rebase_first_vertex(const Shell1& s, const Point& v, PointContext& ctx) {
  if (s.e01.vertex_low == v) return {s, Chain(2)};
  Shell1 moved = s;
  moved.e01.vertex_low = v;
  moved.e02.vertex_low = v;
  Representation r = representation_of(s);
  std::vector<Point> seen = shell_points(s);
  seen.insert(seen.end(), {v, r.c, r.a_prime});
  ctx.reserve(seen);
  Point w = ctx.fresh_generic();
  auto [i0, i1, i2] = s.support();
  const int l = i2 + 1;
  Point z = Translation::between(r.a_prime, r.a).apply(r.c);
  Edge1 f1 = make_edge(i1, l, s.e01.vertex_high, w, r.b, w);
  Edge1 f2 = make_edge(i2, l, s.e12.vertex_high, w, z, w);
  auto pair = [&](const Shell1& t) {
    Edge1 f0 = make_edge(i0, l, t.e01.vertex_low, w, r.a, w);
    Chain c(2);
    c.add(make_simplex({i0, i1, l}, {r.a, r.b, w}, {f1, f0, t.e01}), 1);
    c.add(make_simplex({i0, i2, l}, {r.a, z, w}, {f2, f0, t.e02}), -1);
    return c;
  };
  Chain chain = pair(s) - pair(moved);
  check_boundary(chain, s.as_chain() - moved.as_chain(), "vertex rebase");
  return {moved, chain};
}

Chain equalize_shells(const Shell1& s0, const Shell1& s1, PointContext& ctx) {
  for (const Shell1* s : {&s0, &s1})
    if (auto defect = shell_defect(*s); !defect.empty()) throw PreconditionError(defect);
  if (s0.support() != s1.support()) throw PreconditionError("shells live on different supports");
  Representation r0 = representation_of(s0);
  Representation r1 = representation_of(s1);
  if (sd(r0.a, r0.a_prime) != sd(r1.a, r1.a_prime))
    throw PreconditionError("endpoint mismatch: shells have different endpoint types");
  if (s0 == s1) return Chain(2);

  std::vector<Point> seen = shell_points(s0);
  for (const Point& p : shell_points(s1)) seen.push_back(p);
  seen.insert(seen.end(), {r0.c, r0.a_prime, r1.c, r1.a_prime});
  ctx.reserve(seen);
  Rebased rb = rebase_first_vertex(s1, s0.e01.vertex_low, ctx);
  auto aligned = realign(r1, r0.a, r0.a_prime);
  if (!aligned) throw PreconditionError("endpoint mismatch: cannot realize the second shell on the first's endpoints");
  Point b = ctx.fresh_generic();
  Point c = ctx.fresh_generic();
  const int top = s0.support()[2];
  Chain alpha = endpoint_part(s0, r0, b, c, top + 1, top + 2) - endpoint_part(rb.shell, *aligned, b, c, top + 1, top + 2);
  alpha = alpha - rb.chain;
  check_boundary(alpha, s0.as_chain() - s1.as_chain(), "shell equalization");
  return alpha;
}

Composition compose_shells(const Shell1& s0, const Shell1& s1, PointContext& ctx) {
  Representation r0 = representation_of(s0);
  Representation r1 = representation_of(s1);
  return compose_shells(s0, r0, s1, translate(Translation::between(r1.a, r0.a_prime), r1), ctx);
}

Composition compose_shells(const Shell1& s0, const Representation& r0, const Shell1& s1, const Representation& r1,
                           PointContext& ctx) {
  for (const Shell1* s : {&s0, &s1})
    if (auto defect = shell_defect(*s); !defect.empty()) throw PreconditionError(defect);
  if (!represents(s0, r0) || !represents(s1, r1)) throw PreconditionError("representation does not match its shell");
  if (r0.a_prime != r1.a) throw PreconditionError("endpoint chaining mismatch: terminal point of s0 is not initial point of s1");
  if (s0.support() != s1.support()) throw PreconditionError("shells live on different supports");

  std::vector<Point> seen = shell_points(s0);
  for (const Point& p : shell_points(s1)) seen.push_back(p);
  for (const Representation* r : {&r0, &r1}) seen.insert(seen.end(), {r->a, r->b, r->c, r->a_prime});
  ctx.reserve(seen);
  const Point v0 = s0.e01.vertex_low;
  Rebased rb = rebase_first_vertex(s1, v0, ctx);
  Point d = ctx.fresh_generic();
  Point e = ctx.fresh_generic();
  auto [i0, i1, i2] = s0.support();
  (void)i1;
  const int l3 = i2 + 1, l4 = i2 + 2;

  Chain alpha1 = cone(s0, r0, d, l3, r0.a_prime) + cone(rb.shell, r1, e, l4, r1.a_prime);
  Simplex2 joint = make_simplex({i0, l3, l4}, {r0.a_prime, d, e},
                                {make_edge(l3, l4, d, e, d, e), make_edge(i0, l4, v0, e, r1.a, e),
                                 make_edge(i0, l3, v0, d, r0.a_prime, d)});
  alpha1.add(joint, -1);

  Point bn = ctx.fresh_generic();
  Point cn = ctx.fresh_generic();
  Representation rs{r0.a, bn, cn, r1.a_prime};
  Shell1 s = make_shell(rs, {v0, bn, cn}, s0.support());
  Chain alpha = alpha1 - endpoint_part(s, rs, d, e, l3, l4) + rb.chain;
  check_boundary(alpha, s0.as_chain() + s1.as_chain() - s.as_chain(), "shell composition");
  return {s, alpha};
}

H1Element psi(const Translation& t, const Point& base) { return bracket(base, t.apply(base)); }

bool representation_equiv(const Representation& r0, const Representation& r1) {
  return sd(r0.a, r0.b) == sd(r1.a, r1.b) && sd(r0.b, r0.c) == sd(r1.b, r1.c) &&
         sd(r0.a_prime, r0.c) == sd(r1.a_prime, r1.c);
}

bool e_relation(const Point& a, const Point& b) { return bracket(a, b).value.is_zero(); }

void require_well_formed(const Chain& c) {
  for (const auto& t : c.terms()) {
    std::string defect;
    if (auto e = std::get_if<Edge1>(&t.simplex)) defect = edge_defect(*e);
    if (auto f = std::get_if<Simplex2>(&t.simplex)) defect = simplex_defect(*f);
    if (!defect.empty()) throw PreconditionError(defect);
  }
}

}  // namespace lascar
