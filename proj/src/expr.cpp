#include "lascar/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "lascar/errors.hpp"

namespace lascar {

namespace {

struct Token {
  enum Kind { Number, Name, Plus, Minus, Star, LParen, RParen, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw ParseError("expected digits after '/'", i);
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Token::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && is_name_char(s[i])) ++i;
      out.push_back({Token::Name, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i++});
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

// Exact linear arithmetic.
struct RealDomain {
  using Value = RealValue;
  static Value constant(const RealValue& v) { return v; }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value neg(const Value& a) { return -a; }
  static Value scale(const Rational& r, const Value& a) { return r * a; }
};

// Multivalued star arithmetic.
struct StarDomain {
  using Value = StarSet;
  static Value constant(const RealValue& v) { return {StarValue(v)}; }
  static Value add(const Value& a, const Value& b) {
    StarSet out;
    for (const auto& y : b) out.merge(plus_star(a, y));
    return out;
  }
  static Value neg(const Value& a) {
    StarSet out;
    for (const auto& x : a) out.insert(neg_star(x));
    return out;
  }
  static Value scale(const Rational& r, const Value& a) {
    StarSet out;
    for (const auto& x : a) out.insert(times_star(r, x));
    return out;
  }
};

template <class D>
class Parser {
 public:
  using Value = typename D::Value;

  Parser(std::string_view text, const std::shared_ptr<IrrationalBasis>& basis, bool allow_eps)
      : tokens_(tokenize(text)), basis_(basis), allow_eps_(allow_eps) {}

  Value parse() {
    Value v = expr();
    if (peek().kind != Token::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return v;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool at_eps_suffix() const {
    return (peek().kind == Token::Plus || peek().kind == Token::Minus) && peek(1).kind == Token::Name &&
           peek(1).text == "e";
  }

  Value expr() {
    Value v = unary();
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = next().kind == Token::Minus;
      Value rhs = unary();
      v = D::add(v, minus ? D::neg(rhs) : rhs);
    }
    return v;
  }

  Value unary() {
    std::size_t start = peek().pos;
    bool negate = false;
    while (peek().kind == Token::Minus) {
      next();
      negate = !negate;
    }
    Value v = factor();
    if (negate) v = D::neg(v);
    if (at_eps_suffix()) {
      if (!allow_eps_) throw ParseError("infinitesimal suffix not allowed here", peek().pos);
      EpsTag tag = next().kind == Token::Plus ? EpsTag::PlusEps : EpsTag::MinusEps;
      next();
      v = with_eps(v, tag, start);
    }
    return v;
  }

  Value with_eps(const Value& v, EpsTag tag, std::size_t at) {
    if constexpr (std::is_same_v<D, StarDomain>) {
      if (v.size() != 1 || !v.front().is_exact_rational())
        throw ParseError("'+e'/'-e' applies to an exact rational term only", at);
      return {StarValue(v.front().value(), tag)};
    } else {
      throw ParseError("infinitesimal suffix not allowed here", at);
    }
  }

  Value factor() {
    const Token& t = peek();
    if (t.kind == Token::Number && peek(1).kind == Token::Star) {
      Rational r = parse_rational(next().text);
      next();
      return D::scale(r, factor());
    }
    return atom();
  }

  Value atom() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Number: return D::constant(RealValue(parse_rational(t.text)));
      case Token::Name: {
        if (!basis_) throw ParseError("no basis available for '" + t.text + "'", t.pos);
        auto index = basis_->lookup(t.text);
        if (!index) throw ParseError("unknown symbol '" + t.text + "'", t.pos);
        return D::constant(RealValue::symbol(basis_, *index));
      }
      case Token::LParen: {
        Value v = expr();
        if (peek().kind != Token::RParen) throw ParseError("expected ')'", peek().pos);
        next();
        return v;
      }
      case Token::End: throw ParseError("unexpected end of expression", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::shared_ptr<IrrationalBasis> basis_;
  bool allow_eps_;
};

}  // namespace

StarSet eval_star(std::string_view text, const std::shared_ptr<IrrationalBasis>& basis) {
  return Parser<StarDomain>(text, basis, true).parse();
}

StarValue parse_star_value(std::string_view text, const std::shared_ptr<IrrationalBasis>& basis) {
  StarSet s = eval_star(text, basis);
  if (s.size() != 1) throw ParseError("expression denotes several star values", 0);
  return s.front();
}

RealValue parse_real(std::string_view text, const std::shared_ptr<IrrationalBasis>& basis) {
  return Parser<RealDomain>(text, basis, false).parse();
}

}  // namespace lascar
