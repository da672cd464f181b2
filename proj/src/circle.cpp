#include "lascar/circle.hpp"

#include "lascar/errors.hpp"
#include <utility>

namespace lascar {

Point::Point(RealValue angle, Rational iota) : angle_(angle.fractional()), iota_(std::move(iota)) {
  iota_.canonicalize();
}

std::strong_ordering structural_order(const Point& a, const Point& b) {
  if (auto c = structural_order(a.angle_, b.angle_); c != 0) return c;
  int s = cmp(a.iota_, b.iota_);
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Point::to_string() const {
  std::string out = angle_.to_string();
  if (iota_ == 0) return out;
  Rational mag = abs(iota_);
  out += iota_ > 0 ? " + " : " - ";
  return out + (mag == 1 ? std::string("i") : lascar::to_string(mag) + "*i");
}

Point rotate(const Point& a, const Rational& r) { return Point(a.angle() + RealValue(r), a.iota()); }

Point PointContext::fresh_generic() {
  basis_->reserve(next_ + 1);
  return Point(RealValue::symbol(basis_, next_++));
}

void PointContext::reserve(std::span<const Point> points) {
  for (const auto& p : points) next_ = std::max(next_, p.angle().symbol_span());
}

StarValue sd(const Point& a, const Point& b) {
  RealValue delta = (b.angle() - a.angle()).fractional();
  Rational k = b.iota() - a.iota();
  if (!delta.is_rational() || k == 0) return StarValue(delta);
  if (k > 0) return StarValue(delta, EpsTag::PlusEps);
  if (delta.is_zero()) return StarValue(RealValue(1), EpsTag::MinusEps);
  return StarValue(delta, EpsTag::MinusEps);
}

namespace {

// Clockwise position of b seen from a: angle offset in [0,1), then iota offset.
// A point just behind a sits at offset 1.
std::pair<RealValue, Rational> clockwise_offset(const Point& a, const Point& b) {
  RealValue delta = (b.angle() - a.angle()).fractional();
  Rational k = b.iota() - a.iota();
  if (delta.is_zero() && k < 0) delta = RealValue(1);
  return {delta, k};
}

}  // namespace

// Agrees with comparing sd(a,b) and sd(a,c) whenever those differ. Equal
// irrational distances (b, c an infinitesimal apart) are ordered by iota.
bool s_relation(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c) return false;
  auto [db, kb] = clockwise_offset(a, b);
  auto [dc, kc] = clockwise_offset(a, c);
  if (int r = db.compare(dc); r != 0) return r < 0;
  return kb < kc;
}

bool independent(std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (sd(points[i], points[j]).is_exact_rational()) return false;
  return true;
}

bool lascar_equivalent(const Point& a, const Point& b) { return in_integer_star(sd(a, b)); }

}  // namespace lascar
