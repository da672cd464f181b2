#pragma once

#include <compare>
#include <memory>
#include <string>

#include "lascar/basis.hpp"
#include "lascar/rational.hpp"

namespace lascar {

/// q0 + sum q_i alpha_i over an IrrationalBasis. Rationality and equality are
/// decided on coefficients; ordering refines the basis certificates.
class RealValue {
 public:
  RealValue() = default;
  RealValue(Rational q) : q0_(std::move(q)) { q0_.canonicalize(); }  // NOLINT: rationals embed implicitly
  RealValue(long q) : q0_(q) {}                 // NOLINT

  static RealValue symbol(std::shared_ptr<IrrationalBasis> basis, std::size_t index, const Rational& coeff = 1);

  const Rational& rational_part() const { return q0_; }
  const Coeffs& coefficients() const { return coeffs_; }
  const std::shared_ptr<IrrationalBasis>& basis() const { return basis_; }
  bool is_rational() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && q0_ == 0; }
  bool is_integer() const { return coeffs_.empty() && lascar::is_integer(q0_); }

  /// Highest symbol index used plus one (0 for rationals).
  std::size_t symbol_span() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first + 1; }

  friend RealValue operator+(const RealValue& a, const RealValue& b);
  friend RealValue operator-(const RealValue& a, const RealValue& b);
  friend RealValue operator-(const RealValue& a);
  friend RealValue operator*(const Rational& k, const RealValue& a);

  friend bool operator==(const RealValue& a, const RealValue& b);

  /// -1, 0, 1 by numeric order. Throws RefinementError if undecidable within the cap.
  int compare(const RealValue& other) const;
  int sign() const;

  Integer floor() const;
  /// The representative of this value modulo 1 in [0, 1).
  RealValue fractional() const;

  /// Lexicographic order on the representation; a key order, not the numeric one.
  friend std::strong_ordering structural_order(const RealValue& a, const RealValue& b);

  /// "q0 + q1*a1 - q2*a2" with zero terms dropped; "0" for zero.
  std::string to_string() const;

 private:
  Rational q0_ = 0;
  Coeffs coeffs_;
  std::shared_ptr<IrrationalBasis> basis_;
};

inline bool operator<(const RealValue& a, const RealValue& b) { return a.compare(b) < 0; }
inline bool operator>(const RealValue& a, const RealValue& b) { return a.compare(b) > 0; }
inline bool operator<=(const RealValue& a, const RealValue& b) { return a.compare(b) <= 0; }
inline bool operator>=(const RealValue& a, const RealValue& b) { return a.compare(b) >= 0; }

}  // namespace lascar
