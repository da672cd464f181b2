#include "lascar/rational.hpp"

#include <cctype>

#include "lascar/errors.hpp"

namespace lascar {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (!all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1);
  Integer d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  Rational q{Integer{std::string(num)}, d};
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace lascar
