#include "lascar/real_value.hpp"

#include "lascar/errors.hpp"

namespace lascar {

namespace {

std::shared_ptr<IrrationalBasis> common_basis(const RealValue& a, const RealValue& b) {
  const auto& x = a.basis();
  const auto& y = b.basis();
  if (!x) return y;
  if (!y || x == y) return x;
  if (a.is_rational()) return y;
  if (b.is_rational()) return x;
  throw ConfigError("values refer to different irrational bases");
}

}  // namespace

RealValue RealValue::symbol(std::shared_ptr<IrrationalBasis> basis, std::size_t index, const Rational& coeff) {
  basis->reserve(index + 1);
  RealValue v;
  if (coeff != 0) v.coeffs_.emplace(index, coeff);
  v.basis_ = std::move(basis);
  return v;
}

RealValue operator+(const RealValue& a, const RealValue& b) {
  RealValue out = a;
  out.basis_ = common_basis(a, b);
  out.q0_ += b.q0_;
  for (const auto& [i, c] : b.coeffs_) {
    Rational& slot = out.coeffs_[i];
    slot += c;
    if (slot == 0) out.coeffs_.erase(i);
  }
  return out;
}

RealValue operator-(const RealValue& a) { return Rational(-1) * a; }

RealValue operator-(const RealValue& a, const RealValue& b) { return a + (-b); }

RealValue operator*(const Rational& k, const RealValue& a) {
  RealValue out;
  out.basis_ = a.basis_;
  out.q0_ = k * a.q0_;
  if (k != 0)
    for (const auto& [i, c] : a.coeffs_) out.coeffs_.emplace(i, k * c);
  return out;
}

bool operator==(const RealValue& a, const RealValue& b) {
  if (!a.coeffs_.empty() && !b.coeffs_.empty()) common_basis(a, b);
  return a.q0_ == b.q0_ && a.coeffs_ == b.coeffs_;
}

int RealValue::sign() const {
  if (coeffs_.empty()) return sgn(q0_);
  return basis_->sign(q0_, coeffs_);
}

int RealValue::compare(const RealValue& other) const { return (*this - other).sign(); }

Integer RealValue::floor() const {
  if (coeffs_.empty()) return lascar::floor(q0_);
  auto [lo, hi] = basis_->enclose(q0_, coeffs_, Rational(1, 2));
  Integer n = lascar::floor(lo);
  // The value is irrational, so it is never equal to n + 1.
  return (*this - RealValue(Rational(n + 1))).sign() > 0 ? Integer(n + 1) : n;
}

RealValue RealValue::fractional() const { return *this - RealValue(Rational(floor())); }

std::strong_ordering structural_order(const RealValue& a, const RealValue& b) {
  if (a.q0_ != b.q0_) return a.q0_ < b.q0_ ? std::strong_ordering::less : std::strong_ordering::greater;
  auto i = a.coeffs_.begin();
  auto j = b.coeffs_.begin();
  for (; i != a.coeffs_.end() && j != b.coeffs_.end(); ++i, ++j) {
    if (i->first != j->first) return i->first < j->first ? std::strong_ordering::less : std::strong_ordering::greater;
    if (i->second != j->second)
      return i->second < j->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (i == a.coeffs_.end() && j == b.coeffs_.end()) return std::strong_ordering::equal;
  return i == a.coeffs_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string RealValue::to_string() const {
  std::string out;
  auto append = [&out](const Rational& c, const std::string& name) {
    Rational mag = abs(c);
    std::string term = name.empty() ? lascar::to_string(mag)
                       : mag == 1   ? name
                                    : lascar::to_string(mag) + "*" + name;
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  };
  if (q0_ != 0) append(q0_, "");
  for (const auto& [i, c] : coeffs_) append(c, basis_->name(i));
  return out.empty() ? "0" : out;
}

}  // namespace lascar
