#pragma once

#include <optional>
#include <span>

#include "lascar/circle.hpp"

namespace lascar {

/// U_{<r}(a,b): the shorter arc between a and b is shorter than r. 0 < r <= 1/2.
bool u_less(const Point& a, const Point& b, const Rational& r);
/// U_{=r}(a,b): the shorter arc between a and b has length exactly r. 0 < r <= 1/2.
bool u_eq(const Point& a, const Point& b, const Rational& r);

/// S(x,y,z) decided from U_{<1/k}, equality and the rotations g_{i/k} only,
/// by cutting the circle at the grid x, g_{1/k}x, ..., g_{(k-1)/k}x. k >= 3.
bool s_prime_k(const Point& x, const Point& y, const Point& z, int k);

enum class EnClass { Forward, Backward, Other };
const char* to_string(EnClass c);

/// The E_n class of an n-tuple: the forward grid, the backward grid, or the rest.
EnClass classify_En(std::span<const Point> tuple);

/// A closed enclosure of the bracket [a,b] in [0,1], obtained by bisecting
/// the circle with S'_k queries against rotated copies of a.
struct M2Bracket {
  Rational low;
  Rational high;
  bool exact = false;  // low == high is the bracket itself
};
M2Bracket bracket_via_m2(const Point& a, const Point& b, int k = 3, int depth = 48);

/// Whether a value in [0,1) lies in the enclosure modulo 1.
bool encloses_mod_Z(const M2Bracket& e, const RealValue& value);

}  // namespace lascar
