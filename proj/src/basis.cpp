#include "lascar/basis.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "lascar/errors.hpp"

namespace lascar {

namespace {

unsigned long nth_prime(std::size_t n) {
  static std::vector<unsigned long> primes{2};
  for (unsigned long candidate = primes.back() + 1; primes.size() < n; ++candidate) {
    bool prime = true;
    for (unsigned long p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes[n - 1];
}

unsigned long isqrt(unsigned long n) {
  unsigned long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

unsigned long squarefree_part(unsigned long n) {
  unsigned long out = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return out * n;
}

// alpha = sqrt(n) - floor(sqrt(n)); returns whether `x` lies strictly below alpha.
bool below_fractional_root(const Rational& x, unsigned long radicand, unsigned long root_floor) {
  Rational shifted = x + root_floor;
  return shifted < 0 || shifted * shifted < radicand;
}

}  // namespace

std::shared_ptr<IrrationalBasis> IrrationalBasis::standard(int refinement_cap) {
  return std::shared_ptr<IrrationalBasis>(new IrrationalBasis(true, refinement_cap));
}

void IrrationalBasis::push_sqrt_symbol(std::string name, unsigned long radicand) {
  Symbol s;
  s.name = std::move(name);
  s.radicand = radicand;
  s.root_floor = isqrt(radicand);
  s.low = 0;
  s.high = 1;
  symbols_.push_back(std::move(s));
}

std::shared_ptr<IrrationalBasis> IrrationalBasis::from_json(const nlohmann::json& decl, int refinement_cap) {
  if (!decl.is_array()) throw ConfigError("basis file must hold a JSON list of symbols");
  std::shared_ptr<IrrationalBasis> basis(new IrrationalBasis(false, refinement_cap));
  std::set<std::string> names;
  for (const auto& entry : decl) {
    Symbol s;
    try {
      s.name = entry.at("name").get<std::string>();
      s.low = parse_rational(entry.at("low").get<std::string>());
      s.high = parse_rational(entry.at("high").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("basis entry: ") + e.what());
    } catch (const ParseError& e) {
      throw ConfigError(std::string("basis entry: ") + e.what());
    }
    if (s.name.empty() || !std::isalpha(static_cast<unsigned char>(s.name[0])) || s.name == "e")
      throw ConfigError("basis symbol names must start with a letter and differ from 'e'");
    if (!names.insert(s.name).second) throw ConfigError("duplicate basis symbol '" + s.name + "'");
    if (!(s.low < s.high)) throw ConfigError("certificate for '" + s.name + "' needs low < high");
    std::string refine = entry.value("refine", std::string("explicit"));
    if (refine.rfind("bisect-sqrt:", 0) == 0) {
      std::string_view digits(refine);
      digits.remove_prefix(12);
      unsigned long n = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 2)
        throw ConfigError("bad refinement rule '" + refine + "'");
      s.radicand = n;
      s.root_floor = isqrt(n);
      if (below_fractional_root(s.high, n, s.root_floor) || !below_fractional_root(s.low, n, s.root_floor))
        throw ConfigError("certificate for '" + s.name + "' does not enclose its square-root surrogate");
    } else if (refine != "explicit") {
      throw ConfigError("unknown refinement rule '" + refine + "'");
    }
    basis->symbols_.push_back(std::move(s));
  }
  basis->validate_independence();
  return basis;
}

std::shared_ptr<IrrationalBasis> IrrationalBasis::load(const std::string& path, int refinement_cap) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open basis file '" + path + "'");
  nlohmann::json decl;
  try {
    in >> decl;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("basis file '" + path + "': " + e.what());
  }
  return from_json(decl, refinement_cap);
}

void IrrationalBasis::validate_independence() const {
  // sqrt(n) is rational for square n, and sqrt(n), sqrt(m) are Q-dependent
  // exactly when n and m share their squarefree part.
  std::map<unsigned long, std::string> seen;
  for (const auto& s : symbols_) {
    if (!s.radicand) continue;
    unsigned long core = squarefree_part(*s.radicand);
    if (core == 1) throw ConfigError("symbol '" + s.name + "' is rational (perfect-square radicand)");
    auto [it, fresh] = seen.emplace(core, s.name);
    if (!fresh) throw ConfigError("symbols '" + it->second + "' and '" + s.name + "' are Q-linearly dependent");
  }
}

void IrrationalBasis::reserve(std::size_t count) {
  if (count <= symbols_.size()) return;
  if (!growable_)
    throw ConfigError("basis exhausted: " + std::to_string(count) + " symbols requested, " +
                      std::to_string(symbols_.size()) + " declared");
  while (symbols_.size() < count) {
    std::size_t i = symbols_.size() + 1;
    push_sqrt_symbol("a" + std::to_string(i), nth_prime(i));
  }
}

std::optional<std::size_t> IrrationalBasis::lookup(std::string_view name) {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  if (growable_ && name.size() > 1 && name[0] == 'a') {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec == std::errc() && ptr == name.data() + name.size() && k >= 1 && name[1] != '0' && k < 100000) {
      reserve(k);
      return k - 1;
    }
  }
  return std::nullopt;
}

std::pair<Rational, Rational> IrrationalBasis::interval(const Rational& q0, const Coeffs& coeffs) const {
  Rational lo = q0, hi = q0;
  for (const auto& [index, c] : coeffs) {
    const Symbol& s = symbols_.at(index);
    if (c > 0) {
      lo += c * s.low;
      hi += c * s.high;
    } else {
      lo += c * s.high;
      hi += c * s.low;
    }
  }
  return {lo, hi};
}

bool IrrationalBasis::refine(const Coeffs& coeffs) {
  bool progressed = false;
  for (const auto& [index, c] : coeffs) {
    Symbol& s = symbols_.at(index);
    if (!s.radicand || s.halvings >= refinement_cap_) continue;
    Rational mid = (s.low + s.high) / 2;
    if (below_fractional_root(mid, *s.radicand, s.root_floor))
      s.low = mid;
    else
      s.high = mid;
    ++s.halvings;
    progressed = true;
  }
  return progressed;
}

int IrrationalBasis::sign(const Rational& q0, const Coeffs& coeffs) {
  if (coeffs.empty()) return sgn(q0);
  for (;;) {
    auto [lo, hi] = interval(q0, coeffs);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (!refine(coeffs))
      throw RefinementError("ordering undecided after " + std::to_string(refinement_cap_) +
                            " certificate halvings (dependent basis or cap too small)");
  }
}

std::pair<Rational, Rational> IrrationalBasis::enclose(const Rational& q0, const Coeffs& coeffs,
                                                       const Rational& width) {
  for (;;) {
    auto iv = interval(q0, coeffs);
    if (iv.second - iv.first <= width) return iv;
    if (!refine(coeffs))
      throw RefinementError("enclosure wider than requested after " + std::to_string(refinement_cap_) +
                            " certificate halvings");
  }
}

}  // namespace lascar
