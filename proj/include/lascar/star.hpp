#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lascar/real_value.hpp"

namespace lascar {

enum class EpsTag { MinusEps = -1, Exact = 0, PlusEps = 1 };

inline EpsTag flip(EpsTag t) { return static_cast<EpsTag>(-static_cast<int>(t)); }

/// An element of R u Q*: a real value, optionally decorated with an
/// infinitesimal -e or +e. Decorations attach to rationals only.
class StarValue {
 public:
  StarValue() = default;
  StarValue(RealValue value, EpsTag tag = EpsTag::Exact);  // NOLINT

  const RealValue& value() const { return value_; }
  EpsTag tag() const { return tag_; }
  bool is_exact() const { return tag_ == EpsTag::Exact; }
  bool is_exact_rational() const { return tag_ == EpsTag::Exact && value_.is_rational(); }

  friend bool operator==(const StarValue& a, const StarValue& b) {
    return a.tag_ == b.tag_ && a.value_ == b.value_;
  }
  /// Value order, ties broken by MinusEps < Exact < PlusEps.
  int compare(const StarValue& other) const;
  friend bool operator<(const StarValue& a, const StarValue& b) { return a.compare(b) < 0; }

  std::string to_string() const;

 private:
  RealValue value_;
  EpsTag tag_ = EpsTag::Exact;
};

/// A finite set of star values (at most three for any fold of +* and -*).
class StarSet {
 public:
  StarSet() = default;
  StarSet(std::initializer_list<StarValue> values);

  void insert(const StarValue& v);
  void merge(const StarSet& other);
  bool contains(const StarValue& v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const StarValue& front() const { return members_.front(); }

  /// Members in StarValue order.
  std::vector<StarValue> sorted() const;

  friend bool operator==(const StarSet& a, const StarSet& b);

  /// "{1-e, 1, 1+e}"
  std::string to_string() const;

 private:
  std::vector<StarValue> members_;
};

StarSet plus_star(const StarValue& a, const StarValue& b);
StarSet plus_star(const StarSet& a, const StarValue& b);
StarValue neg_star(const StarValue& a);
StarSet minus_star(const StarValue& a, const StarValue& b);

/// r0 x* a for a rational left operand. Negative scalars swap the decoration.
StarValue times_star(const Rational& r0, const StarValue& a);

/// Left fold of plus_star with union; throws UsageError on an empty list.
StarSet sum_star(std::span<const StarValue> values);
inline StarSet sum_star(std::initializer_list<StarValue> values) {
  return sum_star(std::span<const StarValue>(values.begin(), values.size()));
}

/// Representative with value in [0,1); 0-e is reported as 1-e.
StarValue mod_Z_reduce(const StarValue& a);

/// Membership in {0}* = {0-e, 0, 0+e} and in Z* respectively.
inline bool in_zero_star(const StarValue& v) { return v.value().is_zero(); }
inline bool in_integer_star(const StarValue& v) { return v.value().is_integer(); }
bool subset_of_zero_star(const StarSet& s);
bool subset_of_integer_star(const StarSet& s);

bool equiv_zero(const StarValue& a, const StarValue& b);
bool equiv_Z(const StarValue& a, const StarValue& b);

/// The class in R/Z, as a value in [0, 1).
RealValue to_real_mod_Z(const StarValue& a);

}  // namespace lascar
