#include "lascar/json_io.hpp"

#include "lascar/errors.hpp"
#include "lascar/expr.hpp"

namespace lascar {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_of(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw UsageError(std::string(what) + " must be a string");
}

template <std::size_t N>
std::array<int, N> support_from(const Json& j) {
  if (!j.is_array() || j.size() != N) throw UsageError("support has the wrong length");
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_number_integer()) throw UsageError("support entries must be integers");
    out[i] = j[i].get<int>();
  }
  return out;
}

template <std::size_t N>
std::array<Point, N> points_from(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  if (!j.is_array() || j.size() != N) throw UsageError("point list has the wrong length");
  std::array<Point, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = point_from_json(j[i], basis);
  return out;
}

}  // namespace

Json to_json(const Point& p) { return {{"angle", p.angle().to_string()}, {"iota", to_string(p.iota())}}; }

Json to_json(const Translation& t) {
  return {{"shift", t.shift.to_string()}, {"iotaShift", to_string(t.iota_shift)}};
}

Json to_json(const StarValue& v) { return v.to_string(); }

Json to_json(const StarSet& s) {
  Json out = Json::array();
  for (const auto& v : s.sorted()) out.push_back(to_json(v));
  return out;
}

Json to_json(const Representation& r) {
  return {{"a", to_json(r.a)}, {"b", to_json(r.b)}, {"c", to_json(r.c)}, {"aPrime", to_json(r.a_prime)}};
}

Json to_json(const Edge1& e) {
  return {{"support", e.support},
          {"vertices", {to_json(e.vertex_low), to_json(e.vertex_high)}},
          {"images", {to_json(e.image_low), to_json(e.image_high)}}};
}

Json to_json(const Simplex2& s) {
  Json images = Json::array(), faces = Json::array();
  for (const auto& p : s.images) images.push_back(to_json(p));
  for (const auto& f : s.faces) faces.push_back(to_json(f));
  return {{"support", s.support}, {"images", images}, {"faces", faces}};
}

Json to_json(const Simplex& s) {
  if (auto v = std::get_if<Vertex0>(&s)) return {{"support", {v->index}}, {"vertex", to_json(v->vertex)}};
  if (auto e = std::get_if<Edge1>(&s)) return to_json(*e);
  return to_json(std::get<Simplex2>(s));
}

Json to_json(const Chain& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms()) terms.push_back({{"coef", t.coef}, {"simplex", to_json(t.simplex)}});
  return {{"dim", c.dim()}, {"terms", terms}};
}

Json to_json(const ChainWalk& w) {
  Json terms = Json::array();
  for (const auto& [sign, b] : w.terms) terms.push_back({{"sign", sign}, {"simplex", to_json(b)}});
  return {{"indexSeq", w.index_seq}, {"terms", terms}};
}

Json to_json(const WalkRepresentation& r) {
  Json d = Json::array(), matching = Json::array();
  for (const auto& p : r.d) d.push_back(to_json(p));
  for (auto [e, o] : r.matching) matching.push_back({e, o});
  return {{"rep", to_json(r.rep)}, {"apex", to_json(r.apex)}, {"d", d}, {"pivot", r.pivot}, {"matching", matching}};
}

Point point_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  if (j.is_string()) return Point(parse_real(j.get<std::string>(), basis));
  RealValue angle = parse_real(text_of(field(j, "angle"), "angle"), basis);
  Rational iota = j.contains("iota") ? parse_rational(text_of(j.at("iota"), "iota")) : Rational(0);
  return Point(angle, iota);
}

Translation translation_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  if (j.is_string()) return {parse_real(j.get<std::string>(), basis), 0};
  RealValue shift = parse_real(text_of(field(j, "shift"), "shift"), basis);
  Rational k = j.contains("iotaShift") ? parse_rational(text_of(j.at("iotaShift"), "iotaShift")) : Rational(0);
  return {shift, k};
}

StarValue star_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  return parse_star_value(text_of(j, "star value"), basis);
}

Representation representation_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  const Json& ap = j.contains("aPrime") ? j.at("aPrime") : field(j, "a_prime");
  return {point_from_json(field(j, "a"), basis), point_from_json(field(j, "b"), basis),
          point_from_json(field(j, "c"), basis), point_from_json(ap, basis)};
}

Edge1 edge_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  auto s = support_from<2>(field(j, "support"));
  auto v = points_from<2>(field(j, "vertices"), basis);
  auto im = points_from<2>(field(j, "images"), basis);
  return make_edge(s[0], s[1], v[0], v[1], im[0], im[1]);
}

Simplex2 simplex2_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  auto s = support_from<3>(field(j, "support"));
  auto im = points_from<3>(field(j, "images"), basis);
  const Json& f = field(j, "faces");
  if (!f.is_array() || f.size() != 3) throw UsageError("a 2-simplex has three faces");
  return make_simplex(s, im, {edge_from_json(f[0], basis), edge_from_json(f[1], basis), edge_from_json(f[2], basis)});
}

Simplex simplex_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  const Json& s = field(j, "support");
  if (!s.is_array()) throw UsageError("support must be an array");
  switch (s.size()) {
    case 1: return Vertex0{support_from<1>(s)[0], point_from_json(field(j, "vertex"), basis)};
    case 2: return edge_from_json(j, basis);
    case 3: return simplex2_from_json(j, basis);
    default: throw UsageError("simplices of dimension above 2 are not supported");
  }
}

Chain chain_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer()) throw UsageError("dim must be an integer");
  Chain c(dim.get<int>());
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw UsageError("terms must be an array");
  for (const auto& t : terms) {
    const Json& coef = field(t, "coef");
    if (!coef.is_number_integer()) throw UsageError("coef must be an integer");
    c.add(simplex_from_json(field(t, "simplex"), basis), coef.get<long>());
  }
  return c;
}

ChainWalk walk_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis) {
  ChainWalk w;
  const Json& seq = j.contains("indexSeq") ? j.at("indexSeq") : field(j, "index_seq");
  if (!seq.is_array()) throw UsageError("indexSeq must be an array");
  for (const auto& k : seq) {
    if (!k.is_number_integer()) throw UsageError("indexSeq entries must be integers");
    w.index_seq.push_back(k.get<int>());
  }
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw UsageError("terms must be an array");
  for (const auto& t : terms) {
    const Json& sign = field(t, "sign");
    if (!sign.is_number_integer()) throw UsageError("sign must be an integer");
    w.terms.emplace_back(sign.get<int>(), simplex2_from_json(field(t, "simplex"), basis));
  }
  return w;
}

}  // namespace lascar
