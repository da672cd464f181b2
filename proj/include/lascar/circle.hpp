#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lascar/real_value.hpp"
#include "lascar/star.hpp"

namespace lascar {

/// A point of the saturated circle at desk scale: a real angle in [0,1)
/// plus a rational multiple of one positive infinitesimal iota.
class Point {
 public:
  Point() = default;
  explicit Point(RealValue angle, Rational iota = 0);

  const RealValue& angle() const { return angle_; }
  const Rational& iota() const { return iota_; }

  friend bool operator==(const Point& a, const Point& b) { return a.iota_ == b.iota_ && a.angle_ == b.angle_; }
  /// Key order for containers; unrelated to the cyclic order.
  friend std::strong_ordering structural_order(const Point& a, const Point& b);

  std::string to_string() const;

 private:
  RealValue angle_;
  Rational iota_ = 0;
};

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return structural_order(a, b) < 0; }
};

/// Translation by a real shift and an infinitesimal shift. Rotations g_r are
/// the rational, iota-free case.
struct Translation {
  RealValue shift;
  Rational iota_shift = 0;

  Point apply(const Point& p) const { return Point(p.angle() + shift, p.iota() + iota_shift); }
  Translation inverse() const { return {-shift, -iota_shift}; }
  friend Translation compose(const Translation& outer, const Translation& inner) {
    return {outer.shift + inner.shift, outer.iota_shift + inner.iota_shift};
  }
  /// The translation taking `from` to `to`.
  static Translation between(const Point& from, const Point& to) {
    return {to.angle() - from.angle(), to.iota() - from.iota()};
  }
};

Point rotate(const Point& a, const Rational& r);

/// Fresh-point allocator over one basis. Single owner.
class PointContext {
 public:
  explicit PointContext(std::shared_ptr<IrrationalBasis> basis) : basis_(std::move(basis)) {}

  const std::shared_ptr<IrrationalBasis>& basis() const { return basis_; }
  std::size_t fresh_counter() const { return next_; }

  /// A point on a never-used basis symbol, independent of everything seen so far.
  Point fresh_generic();
  /// Marks the symbols used by these points as taken.
  void reserve(std::span<const Point> points);
  void reserve(const Point& p) { reserve(std::span<const Point>(&p, 1)); }

 private:
  std::shared_ptr<IrrationalBasis> basis_;
  std::size_t next_ = 0;
};

/// The directed S-distance of b from a, canonical in [0,1) u [0,1)* u {1-e}.
StarValue sd(const Point& a, const Point& b);

/// S(a,b,c): distinct, and b comes before c going clockwise from a.
bool s_relation(const Point& a, const Point& b, const Point& c);

/// No pair lies in a common rational orbit exactly.
bool independent(std::span<const Point> points);

bool lascar_equivalent(const Point& a, const Point& b);

}  // namespace lascar
