#include "lascar/m2.hpp"

#include <algorithm>

#include "lascar/errors.hpp"

namespace lascar {

namespace {

StarValue shorter_arc(const Point& a, const Point& b) { return std::min(sd(a, b), sd(b, a)); }

void check_radius(const Rational& r) {
  if (r <= 0 || r > Rational(1, 2)) throw PreconditionError("U radius must lie in (0, 1/2]");
}

// Position of p relative to the grid g_{j/k}(x): grid point j sits at 2j,
// the open arc after it at 2j+1.
int locate(const Point& x, const Point& p, int k) {
  const Rational step(1, k);
  for (int j = 0; j < k; ++j) {
    Point g = rotate(x, ratio(j, k));
    if (p == g) return 2 * j;
    if (u_less(g, p, step) && u_less(rotate(g, step), p, step)) return 2 * j + 1;
  }
  throw PreconditionError("point not located on the grid");  // unreachable for k >= 3
}

}  // namespace

bool u_less(const Point& a, const Point& b, const Rational& r) {
  check_radius(r);
  return shorter_arc(a, b) < StarValue(RealValue(r));
}

bool u_eq(const Point& a, const Point& b, const Rational& r) {
  check_radius(r);
  return shorter_arc(a, b) == StarValue(RealValue(r));
}

bool s_prime_k(const Point& x, const Point& y, const Point& z, int k) {
  if (k < 3) throw PreconditionError("S'_k needs k >= 3");
  if (x == y || y == z || x == z) return false;
  int py = locate(x, y, k);
  int pz = locate(x, z, k);
  if (py != pz) return py < pz;
  // Same open arc: y precedes z iff g_{-1/k}(z) < y < z.
  const Rational step(1, k);
  return u_less(rotate(z, -step), y, step) && u_less(z, y, step);
}

const char* to_string(EnClass c) {
  switch (c) {
    case EnClass::Forward: return "forward";
    case EnClass::Backward: return "backward";
    case EnClass::Other: return "other";
  }
  return "other";
}

EnClass classify_En(std::span<const Point> z) {
  const std::size_t n = z.size();
  if (n == 0) throw PreconditionError("E_n needs n >= 1");
  const Rational step(1, static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (z[i] == z[j] || (n > 1 && u_less(z[i], z[j], std::min(step, Rational(1, 2))))) return EnClass::Other;
  // For n <= 2 the forward and backward grids coincide.
  if (n <= 2) return EnClass::Forward;
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    forward = forward && z[i + 1] == rotate(z[i], step);
    backward = backward && z[i + 1] == rotate(z[i], -step);
  }
  if (forward) return EnClass::Forward;
  if (backward) return EnClass::Backward;
  return EnClass::Other;
}

M2Bracket bracket_via_m2(const Point& a, const Point& b, int k, int depth) {
  if (a == b) return {0, 0, true};
  Rational low = 0;
  Rational high = 1;
  for (int step = 0; step < depth; ++step) {
    Rational mid = (low + high) / 2;
    Point c = rotate(a, mid);
    if (b == c) return {mid, mid, true};
    if (s_prime_k(a, b, c, k))
      high = mid;
    else
      low = mid;
  }
  return {low, high, false};
}

bool encloses_mod_Z(const M2Bracket& e, const RealValue& value) {
  auto inside = [&e](const RealValue& v) { return RealValue(e.low) <= v && v <= RealValue(e.high); };
  return inside(value) || inside(value + RealValue(1));
}

}  // namespace lascar
