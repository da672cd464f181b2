#include "lascar/suite.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "lascar/errors.hpp"
#include "lascar/json_io.hpp"
#include "lascar/m2.hpp"
#include "lascar/sampling.hpp"
#include "lascar/walk.hpp"

namespace lascar {

std::string CheckResult::line() const {
  std::ostringstream out;
  out << (passed() ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << samples << " samples, " << std::fixed
      << std::setprecision(2) << seconds << " s";
  if (limit_seconds > 0) out << " (limit " << std::setprecision(0) << limit_seconds << " s)";
  if (!detail.empty()) out << "; " << detail;
  return out.str();
}

namespace {

// Records the first failed expectation.
struct Probe {
  std::size_t samples = 0;
  std::string failure;
  std::string note;

  bool ok() const { return failure.empty(); }
  void expect(bool condition, const std::function<std::string()>& what) {
    if (!condition && failure.empty()) failure = what();
  }
};

using Body = std::function<void(Probe&)>;

CheckResult timed(std::string id, std::string title, double limit, const Body& body) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.limit_seconds = limit;
  Probe probe;
  auto start = std::chrono::steady_clock::now();
  try {
    body(probe);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    probe.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.samples = probe.samples;
  r.property_ok = probe.ok();
  r.detail = probe.ok() ? probe.note : "counterexample: " + probe.failure;
  if (r.property_ok && r.limit_seconds > 0 && r.seconds >= r.limit_seconds)
    r.detail = "time limit exceeded" + (probe.note.empty() ? "" : "; " + probe.note);
  return r;
}

std::shared_ptr<IrrationalBasis> basis_of(const SuiteConfig& c) {
  return c.basis ? c.basis : IrrationalBasis::standard();
}

std::uint64_t seed_for(const SuiteConfig& c, int salt) { return c.seed * 1000003ULL + static_cast<std::uint64_t>(salt); }

StarSet fold_left(const StarValue& x, const StarValue& y, const StarValue& z) { return plus_star(plus_star(x, y), z); }

StarSet fold_right(const StarValue& x, const StarValue& y, const StarValue& z) {
  StarSet out;
  for (const auto& p : plus_star(y, z)) out.merge(plus_star(x, p));
  return out;
}

std::string show(std::initializer_list<StarValue> values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ", ") + v.to_string();
  return "(" + out + ")";
}

// A star value differing from x by an integer, or by an infinitesimal when rational.
StarValue related(const StarValue& x, Sampler& s, bool integer_shift) {
  RealValue v = x.value() + RealValue(integer_shift ? s.uniform(-2, 2) : 0);
  return v.is_rational() ? StarValue(v, s.tag()) : StarValue(v);
}

// ---- 1: Appendix B laws -------------------------------------------------

void appendix_b_laws(const SuiteConfig& cfg, Probe& p) {
  Sampler s(basis_of(cfg), seed_for(cfg, 1));
  for (int t = 0; t < 10000; ++t, ++p.samples) {
    StarValue x = s.star();
    StarValue y = s.coin(0.3) ? related(x, s, s.coin()) : s.star();
    StarValue z = s.coin(0.3) ? related(y, s, s.coin()) : s.star();
    auto ctx = [&] { return show({x, y, z}); };

    p.expect(plus_star(x, y) == plus_star(y, x), [&] { return "commutativity " + ctx(); });
    p.expect(fold_left(x, y, z) == fold_right(x, y, z), [&] { return "associativity " + ctx(); });
    p.expect(sum_star({x, y, z}).size() <= 3, [&] { return "3-fold size " + ctx(); });
    StarValue w = s.star();
    p.expect(sum_star({x, y, z, neg_star(x), w}).size() <= 3, [&] { return "5-fold size " + ctx(); });
    p.expect(neg_star(neg_star(x)) == x, [&] { return "involution " + ctx(); });

    StarValue z0(RealValue(0), s.tag()), z1(RealValue(0), s.tag());
    StarValue n0(RealValue(s.uniform(-3, 3)), s.tag()), n1(RealValue(s.uniform(-3, 3)), s.tag());
    p.expect(subset_of_zero_star(plus_star(z0, z1)) && in_zero_star(neg_star(z0)),
             [&] { return "closure of {0}* " + show({z0, z1}); });
    p.expect(subset_of_integer_star(plus_star(n0, n1)) && in_integer_star(neg_star(n0)),
             [&] { return "closure of Z* " + show({n0, n1}); });

    for (auto [name, eq] : {std::pair{"=0", &equiv_zero}, std::pair{"=Z", &equiv_Z}}) {
      p.expect(eq(x, x), [&] { return std::string("reflexivity ") + name + " " + ctx(); });
      p.expect(eq(x, y) == eq(y, x), [&] { return std::string("symmetry ") + name + " " + ctx(); });
      p.expect(!(eq(x, y) && eq(y, z)) || eq(x, z), [&] { return std::string("transitivity ") + name + " " + ctx(); });
    }

    RealValue expected = (to_real_mod_Z(x) + to_real_mod_Z(y)).fractional();
    for (const auto& m : plus_star(x, y))
      p.expect(to_real_mod_Z(m) == expected, [&] { return "quotient homomorphism " + ctx(); });
    if (!p.ok()) return;
  }
  p.note = "commutativity, associativity, |fold| <= 3, closure, equivalence axioms, quotient map";
}

// ---- 2: chain complex soundness -----------------------------------------

Point independent_point(Sampler& s, std::initializer_list<Point> others, double p_rational = 0.3) {
  for (;;) {
    Point q = s.point(p_rational);
    bool ok = true;
    for (const auto& o : others) ok = ok && !sd(o, q).is_exact_rational();
    if (ok) return q;
  }
}

Simplex2 random_simplex(Sampler& s, const std::vector<Point>& vertex_objects) {
  std::set<int> chosen;
  while (chosen.size() < 3) chosen.insert(s.uniform(0, static_cast<int>(vertex_objects.size()) - 1));
  std::array<int, 3> support{};
  std::copy(chosen.begin(), chosen.end(), support.begin());
  Point x = s.point(0.3);
  Point y = independent_point(s, {x});
  Point z = independent_point(s, {x, y});
  std::array<Point, 3> images{x, y, z};
  const std::array<std::array<int, 2>, 3> positions{{{1, 2}, {0, 2}, {0, 1}}};
  std::array<Edge1, 3> faces;
  for (int f = 0; f < 3; ++f) {
    auto [q, r] = positions[f];
    Translation t = s.coin(0.5) ? Translation{RealValue(0), 0} : s.translation();
    faces[f] = make_edge(support[q], support[r], vertex_objects[support[q]], vertex_objects[support[r]],
                         t.apply(images[q]), t.apply(images[r]));
  }
  return make_simplex(support, images, faces);
}

void chain_soundness(const SuiteConfig& cfg, Probe& p) {
  Sampler s(basis_of(cfg), seed_for(cfg, 2));
  for (int t = 0; t < 1000; ++t, ++p.samples) {
    std::vector<Point> vertex_objects;
    for (int i = 0; i < 5; ++i) vertex_objects.push_back(s.point());
    std::vector<Simplex2> pool;
    for (int i = 0; i < 4; ++i) pool.push_back(random_simplex(s, vertex_objects));
    Chain c(2);
    for (int k = s.uniform(1, 6); k > 0; --k) c.add(pool[s.uniform(0, 3)], s.uniform(-2, 2));
    p.expect(boundary(boundary(c)).empty(), [&] { return "boundary of boundary nonzero in sample " + std::to_string(t); });
    for (const auto& b : pool)
      p.expect(is_shell(boundary(Simplex(b))), [&] { return "boundary of a 2-simplex is not a shell"; });
    if (!p.ok()) return;
  }
  p.note = "d(d(c)) = 0 and every simplex boundary is a 1-shell";
}

// ---- 3: boundary criterion over a finite pool ---------------------------

void boundary_criterion(const SuiteConfig& cfg, Probe& p) {
  auto basis = basis_of(cfg);
  Sampler s(basis, seed_for(cfg, 3));
  RealValue a1 = RealValue::symbol(basis, 0), a2 = RealValue::symbol(basis, 1);
  std::vector<RealValue> angles{a1, a2, a1 + a2};
  for (int k = 0; k < 6; ++k) angles.emplace_back(ratio(k, 6));
  std::vector<Point> pool;
  for (const auto& ang : angles)
    for (int iota : {0, 1}) pool.emplace_back(ang, iota);
  auto pick = [&] { return pool[s.uniform(0, static_cast<int>(pool.size()) - 1)]; };
  auto dependent = [](const Point& x, const Point& y) { return sd(x, y).is_exact_rational(); };

  PointContext ctx(basis);
  ctx.reserve(pool);
  std::set<std::string> seen;
  int bounding = 0, other = 0;
  for (int attempts = 0; seen.size() < 300 && attempts < 100000; ++attempts) {
    Point a = pick(), b = pick(), c = pick();
    Point ap = pick();
    if (s.coin(0.5)) ap = Point(a.angle(), s.uniform(0, 1));
    Representation r{a, b, c, ap};
    if (dependent(a, b) || dependent(b, c) || dependent(ap, c)) continue;
    if (!seen.insert(to_json(r).dump()).second) continue;
    ++p.samples;
    Shell1 sh = make_shell(r);
    bool bounds = is_boundary(sh);
    bool lascar = lascar_equivalent(a, ap);
    auto walk = search_walk(sh, cfg.n_max, ctx);
    std::string label = to_json(r).dump();
    p.expect(bounds == lascar, [&] { return "holonomy verdict differs from Lascar equivalence for " + label; });
    p.expect(bounds == walk.has_value(), [&] { return "walk search disagrees with holonomy for " + label; });
    if (bounds) {
      ++bounding;
      auto w = witness_boundary(sh, ctx);
      p.expect(w && boundary(*w) == sh.as_chain(), [&] { return "witness fails re-verification for " + label; });
      if (walk) {
        p.expect(boundary(walk->as_chain()) == sh.as_chain() && verify_chain_walk(*walk, sh.e01, sh.e02),
                 [&] { return "walk fails re-verification for " + label; });
        walk_representation(*walk);
      }
    } else {
      ++other;
      p.expect(!witness_boundary(sh, ctx), [&] { return "witness for a non-bounding shell " + label; });
    }
    if (!p.ok()) return;
  }
  p.expect(bounding >= 50 && other >= 50, [&] { return "pool too one-sided"; });
  p.note = std::to_string(bounding) + " bounding, " + std::to_string(other) + " non-bounding shells; nMax = " +
           std::to_string(cfg.n_max);
}

// ---- 4: bracket group laws ------------------------------------------------

Representation random_representation(Sampler& s, const Point& a, const Point& a_prime) {
  Point b = independent_point(s, {a});
  Point c = independent_point(s, {b, a_prime});
  return {a, b, c, a_prime};
}

void bracket_laws(const SuiteConfig& cfg, Probe& p) {
  auto basis = basis_of(cfg);
  Sampler s(basis, seed_for(cfg, 4));
  for (int t = 0; t < 1000; ++t, ++p.samples) {
    Point a = s.point(), b = s.point(), c = s.point();
    Translation u = s.translation();
    auto ctx = [&] { return a.to_string() + " | " + b.to_string() + " | " + c.to_string(); };
    p.expect(bracket(a, b) + bracket(b, c) == bracket(a, c), [&] { return "[a,b]+[b,c] != [a,c] for " + ctx(); });
    p.expect(bracket(a, a).value.is_zero(), [&] { return "[a,a] != 0 for " + ctx(); });
    p.expect(-bracket(a, b) == bracket(b, a), [&] { return "-[a,b] != [b,a] for " + ctx(); });
    p.expect(bracket(u.apply(a), u.apply(b)) == bracket(a, b), [&] { return "translation changes [a,b] for " + ctx(); });
    if (!p.ok()) return;
  }
  PointContext pc(basis);
  for (int t = 0; t < 40; ++t, ++p.samples) {
    Point a = s.point(), ap = s.point(), app = s.point();
    Representation r0 = random_representation(s, a, ap);
    Representation r1 = translate(s.translation(), random_representation(s, ap, app));
    Shell1 s0 = make_shell(r0), s1 = make_shell(r1);
    Composition comp = compose_shells(s0, s1, pc);
    p.expect(boundary(comp.chain) == s0.as_chain() + s1.as_chain() - comp.shell.as_chain(),
             [&] { return "composition chain fails re-verification"; });
    p.expect(shell_class(comp.shell) == shell_class(s0) + shell_class(s1), [&] { return "composition class not additive"; });

    Translation w = s.translation();
    Representation r2 = random_representation(s, w.apply(a), w.apply(ap));
    Shell1 s2 = make_shell(r2);
    Chain eq = equalize_shells(s0, s2, pc);
    p.expect(boundary(eq) == s0.as_chain() - s2.as_chain(), [&] { return "equalization chain fails re-verification"; });
    if (!p.ok()) return;
  }
  p.note = "1000 point triples, 40 compositions and equalizations re-verified";
}

// ---- 5: the epimorphism psi ------------------------------------------------

void psi_epimorphism(const SuiteConfig& cfg, Probe& p) {
  Sampler s(basis_of(cfg), seed_for(cfg, 5));
  for (int t = 0; t < 500; ++t, ++p.samples) {
    Translation u = s.translation(), v = s.translation();
    Point a = s.point(), b = s.point();
    p.expect(psi(compose(u, v), a) == psi(u, a) + psi(v, a), [&] { return "psi not additive at " + a.to_string(); });
    p.expect(psi(u, a) == psi(u, b), [&] { return "psi depends on the base point"; });
  }
  for (int t = 0; t < 50; ++t, ++p.samples) {
    H1Element target(s.real(0.3));
    Translation u{target.value, 0};
    p.expect(psi(u, s.point()) == target, [&] { return "target " + target.to_string() + " not hit"; });
  }
  for (int t = 0; t < 200; ++t, ++p.samples) {
    Translation u = s.coin() ? Translation{RealValue(s.uniform(-3, 3)), Rational(s.uniform(-3, 3))} : s.translation();
    bool in_kernel = psi(u, s.point()).value.is_zero();
    p.expect(in_kernel == u.shift.is_integer(), [&] { return "kernel mismatch for shift " + u.shift.to_string(); });
  }
  p.note = "homomorphism, base independence, 50 surjectivity targets, kernel = integer shifts with any iota shift";
}

// ---- 6: H1 = R/Z -----------------------------------------------------------

Shell1 shell_with_class(PointContext& ctx, const Point& a, const RealValue& v) {
  Point ap = Translation{v, 0}.apply(a);
  std::array<Point, 2> ends{a, ap};
  ctx.reserve(ends);
  Point b = ctx.fresh_generic(), c = ctx.fresh_generic();
  return make_shell({a, b, c, ap});
}

void h1_isomorphism(const SuiteConfig& cfg, Probe& p) {
  auto basis = basis_of(cfg);
  Sampler s(basis, seed_for(cfg, 6));
  PointContext ctx(basis);
  for (int t = 0; t < 200; ++t, ++p.samples) {
    Representation r = random_representation(s, s.point(), s.point());
    Representation moved = translate(s.translation(), r);
    p.expect(representation_equiv(r, moved), [&] { return "translated representation not equivalent"; });
    p.expect(shell_class(make_shell(r)) == shell_class(make_shell(moved)), [&] { return "class not well defined"; });
    p.expect(shell_class(make_shell(r)) == bracket(r.a, r.a_prime), [&] { return "class differs from endpoint bracket"; });
  }
  for (int t = 0; t < 100; ++t, ++p.samples) {
    Point a = s.point();
    RealValue x = s.real(0.5), y = s.coin(0.2) ? x + RealValue(s.uniform(-1, 1)) : s.real(0.5);
    Shell1 sx = shell_with_class(ctx, a, x);
    Shell1 sy_reversed = shell_with_class(ctx, Translation{y, 0}.apply(a), -y);
    Composition diff = compose_shells(sx, sy_reversed, ctx);
    bool same = H1Element(x) == H1Element(y);
    p.expect(is_boundary(diff.shell) == same, [&] {
      return "classes " + x.to_string() + " and " + y.to_string() + (same ? " fail to" : " wrongly") + " co-bound";
    });
    p.expect(boundary(diff.chain) == sx.as_chain() + sy_reversed.as_chain() - diff.shell.as_chain(),
             [&] { return "difference chain fails re-verification"; });
  }
  for (int t = 0; t < 50; ++t, ++p.samples) {
    RealValue v = s.real(0.3);
    p.expect(shell_class(shell_with_class(ctx, s.point(), v)) == H1Element(v), [&] { return "class " + v.to_string() + " not realized"; });
  }
  p.note = "well defined on ~-classes, injective on sampled differences, surjective on sampled targets";
}

// ---- 7: M2 reduction ------------------------------------------------------

Point near_grid(Sampler& s, const Point& x) {
  switch (s.uniform(0, 3)) {
    case 0: return s.point();
    case 1: return x;
    default: {
      Point g = rotate(x, ratio(s.uniform(0, 11), 12));
      return Point(g.angle(), g.iota() + s.uniform(-1, 1));
    }
  }
}

void m2_reduction(const SuiteConfig& cfg, Probe& p) {
  Sampler s(basis_of(cfg), seed_for(cfg, 7));
  for (int k = 3; k <= 6; ++k)
    for (int t = 0; t < 500; ++t, ++p.samples) {
      Point x = s.point(), y = near_grid(s, x);
      Point z = s.coin(0.2) ? y : near_grid(s, x);
      p.expect(s_prime_k(x, y, z, k) == s_relation(x, y, z), [&] {
        return "S'_" + std::to_string(k) + " differs on " + x.to_string() + " | " + y.to_string() + " | " + z.to_string();
      });
      if (!p.ok()) return;
    }
  for (int n = 1; n <= 6; ++n)
    for (int t = 0; t < 20; ++t, ++p.samples) {
      Point z = s.point();
      Translation u = s.translation();
      std::vector<Point> fwd, bwd, gen;
      for (int i = 0; i < n; ++i) {
        fwd.push_back(u.apply(rotate(z, ratio(i, n))));
        bwd.push_back(u.apply(rotate(z, ratio(-i, n))));
        gen.push_back(s.point());
      }
      std::vector<Point> bumped = fwd;
      bumped.back() = Point(bumped.back().angle(), bumped.back().iota() + 1);
      auto label = [n](const char* what) { return std::string(what) + " tuple of length " + std::to_string(n); };
      p.expect(classify_En(fwd) == EnClass::Forward, [&] { return label("forward"); });
      p.expect(classify_En(bwd) == (n <= 2 ? EnClass::Forward : EnClass::Backward), [&] { return label("backward"); });
      p.expect(n == 1 || classify_En(bumped) == EnClass::Other, [&] { return label("perturbed"); });
      p.expect(n == 1 || !independent(gen) || classify_En(gen) == EnClass::Other, [&] { return label("generic"); });
      if (n >= 4) {
        std::swap(fwd[1], fwd[2]);
        p.expect(classify_En(fwd) == EnClass::Other, [&] { return label("permuted"); });
      }
    }
  for (int t = 0; t < 200; ++t, ++p.samples) {
    Point a = s.point(), b = s.coin(0.3) ? rotate(a, s.rational(8, 1)) : s.point();
    M2Bracket e = bracket_via_m2(a, b, s.uniform(3, 6));
    RealValue m1 = bracket(a, b).value;
    p.expect(encloses_mod_Z(e, m1), [&] { return "M2 bracket misses " + m1.to_string(); });
    p.expect(!e.exact || H1Element(RealValue(e.low)) == bracket(a, b), [&] { return "exact M2 bracket differs"; });
  }
  p.note = "S'_k for k = 3..6, E_n trichotomy for n = 1..6, 200 brackets through S alone";
}

// ---- 8: d_E inequality ----------------------------------------------------

void de_inequality(const SuiteConfig& cfg, Probe& p) {
  auto basis = basis_of(cfg);
  Sampler s(basis, seed_for(cfg, 8));
  PointContext ctx(basis);
  int finite = 0;
  auto companion = [&](const Point& a) {
    if (s.coin(0.15)) return s.point();
    return Point(a.angle() + RealValue(s.uniform(-1, 1)), s.coin(0.3) ? a.iota() : Rational(s.uniform(-3, 3)));
  };
  for (int t = 0; t < 60; ++t, ++p.samples) {
    Point a = s.point(), b = companion(a), c = companion(a);
    ctx.reserve(std::array<Point, 3>{a, b, c});
    DEBound ab = d_E_upper_bound(a, b, cfg.n_max, ctx);
    DEBound ac = d_E_upper_bound(a, c, cfg.n_max, ctx);
    DEBound cb = d_E_upper_bound(c, b, cfg.n_max, ctx);
    const auto F = DEBound::Kind::Finite;
    p.expect((ab.kind == DEBound::Kind::Infinite) == !e_relation(a, b), [&] { return "infinite bound off the kernel"; });
    if (ab.kind == F && ac.kind == F && cb.kind == F) {
      ++finite;
      p.expect(ab.n <= ac.n + cb.n + 8, [&] { return "triangle inequality fails at " + a.to_string(); });
    }
  }
  p.expect(finite >= 20, [&] { return "too few finite triples"; });
  p.note = std::to_string(finite) + " all-finite triples";
}


// ---- property groups --------------------------------------------------------

void chain_properties(const SuiteConfig& cfg, Probe& p) {
  auto basis = basis_of(cfg);
  Sampler s(basis, seed_for(cfg, 11));
  PointContext ctx(basis);
  for (int t = 0; t < 300; ++t, ++p.samples) {
    std::vector<Point> vertex_objects;
    for (int i = 0; i < 4; ++i) vertex_objects.push_back(s.point());
    Chain c(2);
    for (int k = s.uniform(1, 4); k > 0; --k) c.add(random_simplex(s, vertex_objects), s.uniform(-2, 2));
    Translation u = s.translation();
    p.expect(boundary(apply_automorphism(u, c)) == apply_automorphism(u, boundary(c)),
             [&] { return "boundary does not commute with a translation in sample " + std::to_string(t); });

    Point a = s.point();
    Point ap = s.coin() ? Point(a.angle(), a.iota() + s.uniform(-2, 2)) : s.point();
    Representation r = random_representation(s, a, ap);
    Shell1 sh = make_shell(r);
    std::string label = to_json(r).dump();
    p.expect(is_shell(sh.as_chain()), [&] { return "make_shell output is not a shell: " + label; });
    p.expect(is_boundary(sh) == lascar_equivalent(a, ap), [&] { return "is_boundary differs from Lascar: " + label; });
    if (lascar_equivalent(a, ap)) p.expect(is_boundary(sh), [&] { return "Lascar-equivalent ends but not bounding: " + label; });
    std::array<Point, 4> used{r.a, r.b, r.c, r.a_prime};
    ctx.reserve(used);
    auto w = witness_boundary(sh, ctx);
    p.expect(w.has_value() == is_boundary(sh), [&] { return "witness presence differs from verdict: " + label; });
    if (w) p.expect(boundary(*w) == sh.as_chain(), [&] { return "witness fails re-verification: " + label; });

    Representation r2 = translate(s.translation(), r);
    Shell1 sh2 = make_shell(r2);
    p.expect(representation_equiv(r, r2), [&] { return "translate is not ~-equivalent: " + label; });
    p.expect(shell_class(sh) == shell_class(sh2), [&] { return "equivalent shells with different classes: " + label; });
    p.expect(equiv_Z(shell_holonomy(sh).front(), shell_holonomy(sh2).front()),
             [&] { return "equivalent shells with different holonomy: " + label; });
    auto support = sh.support();
    p.expect(support == std::array<int, 3>{0, 1, 2}, [&] { return "class generated off support {0,1,2}"; });
    if (!p.ok()) return;
  }
  p.note = "boundary commutes with translations; shells, witnesses, holonomy and classes on 300 samples";
}

void circle_properties(const SuiteConfig& cfg, Probe& p) {
  Sampler s(basis_of(cfg), seed_for(cfg, 12));
  const StarValue one{RealValue(1)};
  std::size_t ties = 0;
  for (int t = 0; t < 2000; ++t, ++p.samples) {
    Point a = s.point(), b = s.point(), c = s.point();
    if (s.coin(0.2)) c = Point(b.angle(), b.iota() + s.uniform(-2, 2));
    auto label = [&] { return a.to_string() + " | " + b.to_string() + " | " + c.to_string(); };
    if (a != b) {
      StarSet back = minus_star(one, sd(a, b));
      p.expect(back.size() == 1 && mod_Z_reduce(back.front()) == sd(b, a), [&] { return "reverse law fails: " + label(); });
    }
    p.expect(subset_of_integer_star(sum_star({sd(a, b), sd(b, c), neg_star(sd(a, c))})),
             [&] { return "additivity mod Z fails: " + label(); });
    Translation u = s.translation();
    p.expect(sd(u.apply(a), u.apply(b)) == sd(a, b), [&] { return "sd not translation invariant: " + label(); });
    if (sd(a, b) != sd(c, b))
      p.expect(Translation::between(a, c).apply(b) != b, [&] { return "pairs with distinct sd related: " + label(); });
    if (a != b && b != c && a != c) {
      const StarValue zero{RealValue(0)};
      if (sd(a, b) != sd(a, c)) {
        bool by_distance = zero < sd(a, b) && sd(a, b) < sd(a, c);
        p.expect(s_relation(a, b, c) == by_distance, [&] { return "S differs from distance order: " + label(); });
      } else {
        ++ties;
        p.expect(s_relation(a, b, c) == (b.iota() < c.iota()), [&] { return "S tie not ordered by iota: " + label(); });
      }
      p.expect(s_relation(a, b, c) != s_relation(a, c, b), [&] { return "S is not a strict circular order: " + label(); });
      p.expect(s_relation(a, b, c) == s_relation(b, c, a), [&] { return "S is not cyclic: " + label(); });
    }
    for (int den = 2; den <= 8; ++den)
      for (int num = 1; 2 * num <= den; ++num) {
        Rational r = ratio(num, den);
        if (!u_eq(a, b, r)) continue;
        for (int den2 = 2; den2 <= 8; ++den2)
          for (int num2 = 1; 2 * num2 <= den2; ++num2)
            if (u_eq(a, b, ratio(num2, den2)))
              p.expect(ratio(num2, den2) == r, [&] { return "u_eq holds for two radii: " + label(); });
      }
    int n = s.uniform(1, 5);
    std::vector<Point> tuple, moved;
    Point z = s.point();
    int mode = s.uniform(0, 2);
    for (int i = 0; i < n; ++i) {
      Point q = mode == 2 ? s.point() : rotate(z, ratio(mode == 0 ? i : -i, n));
      tuple.push_back(q);
      moved.push_back(u.apply(q));
    }
    p.expect(classify_En(tuple) == classify_En(moved), [&] { return "classify_En not translation invariant"; });
    if (!p.ok()) return;
  }
  p.note = "reverse law, additivity, sd invariance, S from distances (" + std::to_string(ties) +
           " infinitesimal ties), u_eq uniqueness, E_n invariance";
}

template <class T, class Read>
void round_trip(Probe& p, const T& value, Read read, const char* what) {
  Json printed = to_json(value);
  T back = read(Json::parse(printed.dump()));
  p.expect(back == value, [&] { return std::string(what) + " does not round-trip: " + printed.dump(); });
}

void json_properties(const SuiteConfig& cfg, Probe& p) {
  auto basis = basis_of(cfg);
  Sampler s(basis, seed_for(cfg, 13));
  PointContext ctx(basis);
  for (int t = 0; t < 300; ++t, ++p.samples) {
    round_trip(p, s.point(), [&](const Json& j) { return point_from_json(j, basis); }, "point");
    round_trip(p, s.star(), [&](const Json& j) { return star_from_json(j, basis); }, "star value");
    Translation u = s.translation();
    Translation back = translation_from_json(Json::parse(to_json(u).dump()), basis);
    p.expect(back.shift == u.shift && back.iota_shift == u.iota_shift, [&] { return "translation does not round-trip"; });
    Point a = s.point();
    Representation r = random_representation(s, a, s.coin() ? a : s.point());
    round_trip(p, r, [&](const Json& j) { return representation_from_json(j, basis); }, "representation");
    std::vector<Point> vertex_objects;
    for (int i = 0; i < 4; ++i) vertex_objects.push_back(s.point());
    Simplex2 f = random_simplex(s, vertex_objects);
    round_trip(p, f, [&](const Json& j) { return simplex2_from_json(j, basis); }, "simplex");
    Chain c(2);
    c.add(f, s.uniform(1, 3));
    c.add(random_simplex(s, vertex_objects), -1);
    round_trip(p, c, [&](const Json& j) { return chain_from_json(j, basis); }, "chain");
    round_trip(p, boundary(c), [&](const Json& j) { return chain_from_json(j, basis); }, "1-chain");
    if (t % 10 == 0) {
      Shell1 sh = make_shell({a, r.b, r.c, a});
      std::array<Point, 4> used{r.a, r.b, r.c, r.a_prime};
      ctx.reserve(used);
      if (auto w = search_walk(sh, 1, ctx)) {
        ChainWalk w2 = walk_from_json(Json::parse(to_json(*w).dump()), basis);
        p.expect(w2.index_seq == w->index_seq && w2.as_chain() == w->as_chain(), [&] { return "walk does not round-trip"; });
      }
    }
    if (!p.ok()) return;
  }
  p.note = "points, star values, translations, representations, simplices, chains and walks";
}

void star_properties(const SuiteConfig& cfg, Probe& p) {
  Sampler s(basis_of(cfg), seed_for(cfg, 14));
  for (int t = 0; t < 2000; ++t, ++p.samples) {
    StarValue x = s.star();
    StarValue y = s.coin() ? StarValue(x.value(), x.value().is_rational() ? s.tag() : EpsTag::Exact) : s.star();
    bool same_standard_part = x.value() == y.value();
    p.expect(equiv_zero(x, y) == same_standard_part,
             [&] { return "equiv_zero is not the standard-part quotient on " + x.to_string() + ", " + y.to_string(); });
    if (!p.ok()) return;
  }
  p.note = "equiv_zero collapses exactly the tags of a common standard part";
}

void walk_properties(const SuiteConfig& cfg, Probe& p) {
  auto basis = basis_of(cfg);
  Sampler s(basis, seed_for(cfg, 15));
  PointContext ctx(basis);
  int found = 0;
  for (int t = 0; t < 60; ++t, ++p.samples) {
    Point a = s.point();
    Point ap = Point(a.angle() + RealValue(s.uniform(-1, 1)), a.iota() + s.uniform(-2, 2));
    Representation r = random_representation(s, a, ap);
    std::array<Point, 4> used{r.a, r.b, r.c, r.a_prime};
    ctx.reserve(used);
    Shell1 sh = make_shell(r);
    auto w = search_walk(sh, cfg.n_max, ctx);
    std::string label = to_json(r).dump();
    if (!w) continue;
    ++found;
    WalkRepresentation wr = walk_representation(*w);
    std::string defect = walk_representation_defect(wr, sh);
    p.expect(defect.empty(), [&] { return "walk representation invariant fails (" + defect + "): " + label; });
    Translation u = s.translation();
    ChainWalk moved = *w;
    for (auto& [sign, f] : moved.terms) f = std::get<Simplex2>(transform(u, f));
    Edge1 f01 = std::get<Edge1>(transform(u, sh.e01)), f02 = std::get<Edge1>(transform(u, sh.e02));
    p.expect(verify_chain_walk(moved, f01, f02), [&] { return "walk verification not translation invariant: " + label; });
    if (!p.ok()) return;
  }
  p.expect(found >= 30, [&] { return "too few walks found: " + std::to_string(found); });
  p.note = std::to_string(found) + " walks with valid representations, verification translation invariant";
}

}  // namespace

CheckResult run_criterion(int id, const SuiteConfig& config) {
  auto bind = [&config](void (*f)(const SuiteConfig&, Probe&)) { return [f, &config](Probe& p) { f(config, p); }; };
  switch (id) {
    case 1: return timed("1", "Appendix B star-arithmetic laws", 10, bind(appendix_b_laws));
    case 2: return timed("2", "chain complex soundness", 10, bind(chain_soundness));
    case 3: return timed("3", "boundary criterion on the finite pool", 60, bind(boundary_criterion));
    case 4: return timed("4", "bracket group laws", 30, bind(bracket_laws));
    case 5: return timed("5", "epimorphism psi", 10, bind(psi_epimorphism));
    case 6: return timed("6", "H1 isomorphic to R/Z", 30, bind(h1_isomorphism));
    case 7: return timed("7", "M2 reduction", 30, bind(m2_reduction));
    case 8: return timed("8", "d_E triangle inequality", 60, bind(de_inequality));
    default: throw UsageError("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CheckResult> run_acceptance(const SuiteConfig& config) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, config));
  return out;
}

std::vector<CheckResult> run_properties(const SuiteConfig& config) {
  auto bind = [&config](void (*f)(const SuiteConfig&, Probe&)) { return [f, &config](Probe& p) { f(config, p); }; };
  return {timed("chain", "chain and shell invariants", 60, bind(chain_properties)),
          timed("circle", "circle model invariants", 60, bind(circle_properties)),
          timed("json", "JSON round-trip", 60, bind(json_properties)),
          timed("star", "star quotient invariants", 60, bind(star_properties)),
          timed("walk", "chain-walk invariants", 60, bind(walk_properties))};
}

}  // namespace lascar
