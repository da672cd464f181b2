#include "lascar/star.hpp"

#include <algorithm>

#include "lascar/errors.hpp"

namespace lascar {

StarValue::StarValue(RealValue value, EpsTag tag) : value_(std::move(value)), tag_(tag) {
  if (tag_ != EpsTag::Exact && !value_.is_rational())
    throw PreconditionError("infinitesimal decoration on irrational value " + value_.to_string());
}

int StarValue::compare(const StarValue& other) const {
  if (int c = value_.compare(other.value_); c != 0) return c;
  int t = static_cast<int>(tag_) - static_cast<int>(other.tag_);
  return (t > 0) - (t < 0);
}

std::string StarValue::to_string() const {
  std::string v = value_.to_string();
  switch (tag_) {
    case EpsTag::MinusEps: return v + "-e";
    case EpsTag::PlusEps: return v + "+e";
    case EpsTag::Exact: break;
  }
  return v;
}

StarSet::StarSet(std::initializer_list<StarValue> values) {
  for (const auto& v : values) insert(v);
}

void StarSet::insert(const StarValue& v) {
  if (!contains(v)) members_.push_back(v);
}

void StarSet::merge(const StarSet& other) {
  for (const auto& v : other) insert(v);
}

bool StarSet::contains(const StarValue& v) const {
  return std::find(members_.begin(), members_.end(), v) != members_.end();
}

std::vector<StarValue> StarSet::sorted() const {
  std::vector<StarValue> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const StarSet& a, const StarSet& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&b](const StarValue& v) { return b.contains(v); });
}

std::string StarSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& v : sorted()) {
    if (!first) out += ", ";
    out += v.to_string();
    first = false;
  }
  return out + "}";
}

namespace {

StarSet spread(const RealValue& r) {
  return {StarValue(r, EpsTag::MinusEps), StarValue(r), StarValue(r, EpsTag::PlusEps)};
}

}  // namespace

StarSet plus_star(const StarValue& a, const StarValue& b) {
  RealValue r = a.value() + b.value();
  if (a.is_exact() && b.is_exact()) {
    if (!r.is_rational()) return {StarValue(r)};
    if (a.value().is_rational()) return {StarValue(r)};
    return spread(r);  // two irrationals with rational sum
  }
  if (a.is_exact() || b.is_exact()) {
    const StarValue& plain = a.is_exact() ? a : b;
    const StarValue& decorated = a.is_exact() ? b : a;
    if (!plain.value().is_rational()) return {StarValue(r)};
    return {StarValue(r, decorated.tag())};
  }
  if (a.tag() == b.tag()) return {StarValue(r, a.tag())};
  return spread(r);
}

StarSet plus_star(const StarSet& a, const StarValue& b) {
  StarSet out;
  for (const auto& p : a) out.merge(plus_star(p, b));
  return out;
}

StarValue neg_star(const StarValue& a) { return StarValue(-a.value(), flip(a.tag())); }

StarSet minus_star(const StarValue& a, const StarValue& b) { return plus_star(a, neg_star(b)); }

StarValue times_star(const Rational& r0, const StarValue& a) {
  if (r0 == 0) return StarValue(RealValue(0));
  return StarValue(r0 * a.value(), r0 > 0 ? a.tag() : flip(a.tag()));
}

StarSet sum_star(std::span<const StarValue> values) {
  if (values.empty()) throw UsageError("sum_star of an empty list");
  StarSet acc{values.front()};
  for (std::size_t i = 1; i < values.size(); ++i) acc = plus_star(acc, values[i]);
  return acc;
}

StarValue mod_Z_reduce(const StarValue& a) {
  RealValue v = a.value().fractional();
  if (v.is_zero() && a.tag() == EpsTag::MinusEps) return StarValue(RealValue(1), EpsTag::MinusEps);
  return StarValue(v, a.tag());
}

bool subset_of_zero_star(const StarSet& s) { return std::all_of(s.begin(), s.end(), in_zero_star); }
bool subset_of_integer_star(const StarSet& s) { return std::all_of(s.begin(), s.end(), in_integer_star); }

bool equiv_zero(const StarValue& a, const StarValue& b) { return subset_of_zero_star(minus_star(a, b)); }
bool equiv_Z(const StarValue& a, const StarValue& b) { return subset_of_integer_star(minus_star(a, b)); }

RealValue to_real_mod_Z(const StarValue& a) { return a.value().fractional(); }

}  // namespace lascar
