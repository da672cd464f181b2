#include "lascar/chain.hpp"

#include <algorithm>
#include <cstdlib>

#include "lascar/errors.hpp"

namespace lascar {

Edge1 plain_edge(int i, int j, const Point& vi, const Point& vj) { return make_edge(i, j, vi, vj, vi, vj); }

Edge1 make_edge(int i, int j, const Point& vi, const Point& vj, const Point& image_i, const Point& image_j) {
  Edge1 e{{i, j}, vi, vj, image_i, image_j};
  if (auto defect = edge_defect(e); !defect.empty()) throw PreconditionError(defect);
  return e;
}

std::string edge_defect(const Edge1& e) {
  if (e.support[0] >= e.support[1]) return "edge support not increasing";
  Point pair[2] = {e.image_low, e.image_high};
  if (!independent(pair)) return "edge images " + e.image_low.to_string() + ", " + e.image_high.to_string() + " are dependent";
  return {};
}

Point Simplex2::vertex(int position) const {
  switch (position) {
    case 0: return faces[2].vertex_low;
    case 1: return faces[2].vertex_high;
    default: return faces[0].vertex_high;
  }
}

std::string simplex_defect(const Simplex2& s) {
  const auto& v = s.support;
  if (!(v[0] < v[1] && v[1] < v[2])) return "simplex support not increasing";
  const std::array<std::array<int, 2>, 3> expected{{{v[1], v[2]}, {v[0], v[2]}, {v[0], v[1]}}};
  for (int p = 0; p < 3; ++p) {
    if (s.faces[p].support != expected[p]) return "face " + std::to_string(p) + " has the wrong support";
    if (auto d = edge_defect(s.faces[p]); !d.empty()) return d;
  }
  if (s.faces[2].vertex_low != s.faces[1].vertex_low || s.faces[2].vertex_high != s.faces[0].vertex_low ||
      s.faces[0].vertex_high != s.faces[1].vertex_high)
    return "faces disagree on a shared vertex object";
  if (!independent(s.images)) return "top images are not independent";
  const std::array<std::array<int, 2>, 3> positions{{{1, 2}, {0, 2}, {0, 1}}};
  for (int p = 0; p < 3; ++p)
    if (s.faces[p].sd_type() != sd(s.images[positions[p][0]], s.images[positions[p][1]]))
      return "face " + std::to_string(p) + " is not elementarily attached";
  return {};
}

Simplex2 make_simplex(std::array<int, 3> support, std::array<Point, 3> images, std::array<Edge1, 3> faces) {
  Simplex2 s{support, std::move(images), std::move(faces)};
  if (auto defect = simplex_defect(s); !defect.empty()) throw PreconditionError(defect);
  return s;
}

int dimension(const Simplex& s) { return static_cast<int>(s.index()); }

namespace {

Edge1 transform_edge(const Translation& t, const Edge1& e) {
  return {e.support, t.apply(e.vertex_low), t.apply(e.vertex_high), t.apply(e.image_low), t.apply(e.image_high)};
}

}  // namespace

Simplex transform(const Translation& t, const Simplex& s) {
  if (auto v = std::get_if<Vertex0>(&s)) return Vertex0{v->index, t.apply(v->vertex)};
  if (auto e = std::get_if<Edge1>(&s)) return transform_edge(t, *e);
  const auto& f = std::get<Simplex2>(s);
  Simplex2 out = f;
  for (auto& p : out.images) p = t.apply(p);
  for (auto& e : out.faces) e = transform_edge(t, e);
  return out;
}

std::vector<int> support_of(const Simplex& s) {
  if (auto v = std::get_if<Vertex0>(&s)) return {v->index};
  if (auto e = std::get_if<Edge1>(&s)) return {e->support[0], e->support[1]};
  const auto& f = std::get<Simplex2>(s).support;
  return {f[0], f[1], f[2]};
}

Chain::Chain(int dim, std::initializer_list<std::pair<Simplex, long>> terms) : dim_(dim) {
  for (const auto& [s, k] : terms) add(s, k);
}

void Chain::add(const Simplex& s, long coef) {
  if (dimension(s) != dim_) throw PreconditionError("simplex dimension does not match chain dimension");
  if (coef == 0) return;
  auto it = std::find_if(terms_.begin(), terms_.end(), [&s](const Term& t) { return t.simplex == s; });
  if (it == terms_.end()) {
    terms_.push_back({s, coef});
    return;
  }
  it->coef += coef;
  if (it->coef == 0) terms_.erase(it);
}

void Chain::add(const Chain& other, long scale) {
  if (other.empty()) return;
  if (other.dim_ != dim_) throw PreconditionError("adding chains of different dimensions");
  for (const auto& t : other.terms_) add(t.simplex, scale * t.coef);
}

long Chain::length() const {
  long n = 0;
  for (const auto& t : terms_) n += std::labs(t.coef);
  return n;
}

std::set<int> Chain::support() const {
  std::set<int> out;
  for (const auto& t : terms_)
    for (int i : support_of(t.simplex)) out.insert(i);
  return out;
}

Chain operator*(long k, const Chain& c) {
  Chain out(c.dim_);
  out.add(c, k);
  return out;
}

bool operator==(const Chain& a, const Chain& b) {
  if (a.empty() && b.empty()) return true;
  if (a.dim_ != b.dim_) return false;
  return (a - b).empty();
}

Simplex boundary_i(const Simplex& s, int i) {
  if (i < 0 || i > dimension(s)) throw PreconditionError("face index out of range");
  if (auto e = std::get_if<Edge1>(&s)) return e->vertex(1 - i);
  if (auto f = std::get_if<Simplex2>(&s)) return f->faces[i];
  throw PreconditionError("a vertex has no faces");
}

Chain boundary(const Simplex& s) {
  int n = dimension(s);
  if (n == 0) throw PreconditionError("boundary of a 0-chain");
  Chain out(n - 1);
  for (int i = 0; i <= n; ++i) out.add(boundary_i(s, i), i % 2 == 0 ? 1 : -1);
  return out;
}

Chain boundary(const Chain& c) {
  if (c.dim() == 0) throw PreconditionError("boundary of a 0-chain");
  Chain out(c.dim() - 1);
  for (const auto& t : c.terms()) out.add(boundary(t.simplex), t.coef);
  return out;
}

Chain apply_automorphism(const Translation& t, const Chain& c) {
  Chain out(c.dim());
  for (const auto& term : c.terms()) out.add(transform(t, term.simplex), term.coef);
  return out;
}

}  // namespace lascar
