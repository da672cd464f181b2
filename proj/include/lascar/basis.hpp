#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lascar/rational.hpp"

namespace lascar {

/// Sparse coefficient vector over basis symbol indices; zero entries are never stored.
using Coeffs = std::map<std::size_t, Rational>;

/// A finite list of formal irrationals alpha_1..alpha_m, declared Q-linearly
/// independent together with 1, each carried by a refinable rational
/// enclosure. Equality of combinations is symbolic; only ordering consults
/// the enclosures.
///
/// The standard basis grows on demand: symbol a<i> is the fractional part of
/// sqrt(p_i), p_i the i-th prime. A basis loaded from a file is fixed.
///
/// Refinement mutates the enclosure cache. Use a basis from one thread at a
/// time (or behind external locking); values referring to it may be copied
/// freely.
class IrrationalBasis {
 public:
  static constexpr int kDefaultRefinementCap = 256;

  struct Symbol {
    std::string name;
    Rational low;
    Rational high;
    std::optional<unsigned long> radicand;  // nullopt: explicit, non-refinable
    unsigned long root_floor = 0;
    int halvings = 0;
  };

  static std::shared_ptr<IrrationalBasis> standard(int refinement_cap = kDefaultRefinementCap);

  /// JSON list of {name, low: "p/q", high: "p/q", refine: "bisect-sqrt:<n>" | "explicit"}.
  /// Throws ConfigError on malformed or dependent declarations.
  static std::shared_ptr<IrrationalBasis> from_json(const nlohmann::json& decl,
                                                    int refinement_cap = kDefaultRefinementCap);
  static std::shared_ptr<IrrationalBasis> load(const std::string& path,
                                               int refinement_cap = kDefaultRefinementCap);

  std::size_t size() const { return symbols_.size(); }
  bool growable() const { return growable_; }
  int refinement_cap() const { return refinement_cap_; }
  const Symbol& symbol(std::size_t index) const { return symbols_.at(index); }
  const std::string& name(std::size_t index) const { return symbols_.at(index).name; }

  /// Makes symbols [0, count) available. Fixed bases throw ConfigError when
  /// asked for more than they declare (fresh-symbol exhaustion).
  void reserve(std::size_t count);

  /// Index of a named symbol; the standard basis materializes "a<k>" on demand.
  std::optional<std::size_t> lookup(std::string_view name);

  /// Sign of q0 + sum c_i alpha_i. Zero only when every c_i is zero and q0 is zero;
  /// otherwise decided by refinement, throwing RefinementError past the cap.
  int sign(const Rational& q0, const Coeffs& coeffs);

  /// An enclosure [lo, hi] of q0 + sum c_i alpha_i no wider than `width`
  /// (unless refinement stops at the cap, in which case RefinementError).
  std::pair<Rational, Rational> enclose(const Rational& q0, const Coeffs& coeffs, const Rational& width);

 private:
  IrrationalBasis(bool growable, int cap) : growable_(growable), refinement_cap_(cap) {}

  void push_sqrt_symbol(std::string name, unsigned long radicand);
  std::pair<Rational, Rational> interval(const Rational& q0, const Coeffs& coeffs) const;
  bool refine(const Coeffs& coeffs);
  void validate_independence() const;

  std::vector<Symbol> symbols_;
  bool growable_;
  int refinement_cap_;
};

}  // namespace lascar
