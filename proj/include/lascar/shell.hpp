#pragma once

#include <array>
#include <optional>
#include <string>

#include "lascar/chain.hpp"

namespace lascar {

/// Four points (a, b, c, a') realizing the attaching maps of a 1-shell.
/// (a, a') is its endpoint pair.
struct Representation {
  Point a, b, c, a_prime;

  friend bool operator==(const Representation&, const Representation&) = default;
};

std::string representation_defect(const Representation& r);
Representation translate(const Translation& t, const Representation& r);

/// A 1-shell e01 + e12 - e02 on an increasing support triple.
struct Shell1 {
  Edge1 e01, e12, e02;

  std::array<int, 3> support() const { return {e01.support[0], e01.support[1], e12.support[1]}; }
  std::array<Point, 3> vertices() const { return {e01.vertex_low, e01.vertex_high, e12.vertex_high}; }
  Chain as_chain() const;

  friend bool operator==(const Shell1&, const Shell1&) = default;
};

/// Vertex objects default to a, b, c.
Shell1 make_shell(const Representation& rep, std::array<int, 3> support = {0, 1, 2});
Shell1 make_shell(const Representation& rep, const std::array<Point, 3>& vertices, std::array<int, 3> support = {0, 1, 2});

std::string shell_defect(const Shell1& s);
/// Reads a 1-chain as a shell when it has the shape f12 - f02 + f01 with coherent vertex objects.
std::optional<Shell1> as_shell(const Chain& c);
bool is_shell(const Chain& c);

/// A representation of s: a, b are the images of e01; c and a' are reached by
/// transporting the other two attaching maps.
Representation representation_of(const Shell1& s);
/// Whether r realizes the three edge types of s.
bool represents(const Shell1& s, const Representation& r);

/// n01 +* n12 +* n20.
StarSet shell_holonomy(const Shell1& s);
bool is_boundary(const Shell1& s);

/// A 2-chain with boundary s when s bounds, verified before it is returned.
std::optional<Chain> witness_boundary(const Shell1& s, PointContext& ctx);

/// An element of R/Z, stored as its representative in [0,1).
struct H1Element {
  RealValue value;

  H1Element() = default;
  explicit H1Element(const RealValue& v) : value(v.fractional()) {}

  friend H1Element operator+(const H1Element& x, const H1Element& y) { return H1Element(x.value + y.value); }
  friend H1Element operator-(const H1Element& x) { return H1Element(-x.value); }
  friend bool operator==(const H1Element& x, const H1Element& y) { return x.value == y.value; }
  std::string to_string() const { return value.to_string(); }
};

H1Element bracket(const Point& a, const Point& b);
/// The class of s: the bracket of its endpoint pair.
H1Element shell_class(const Shell1& s);

/// A shell equal to s except that the vertex object at its first index is v,
/// together with a chain R such that boundary(R) = s - result.
struct Rebased {
  Shell1 shell;
  Chain chain{2};
};
Rebased rebase_first_vertex(const Shell1& s, const Point& v, PointContext& ctx);

/// A 2-chain with boundary s0 - s1, for shells with a common endpoint class.
Chain equalize_shells(const Shell1& s0, const Shell1& s1, PointContext& ctx);

struct Composition {
  Shell1 shell;
  Chain chain{2};  // boundary = s0 + s1 - shell
};
/// A shell with endpoint pair (a, a'') from shells with pairs (a, a') and (a', a'').
Composition compose_shells(const Shell1& s0, const Shell1& s1, PointContext& ctx);
/// As above with explicit representations, whose shared endpoint must coincide.
Composition compose_shells(const Shell1& s0, const Representation& r0, const Shell1& s1, const Representation& r1,
                           PointContext& ctx);

H1Element psi(const Translation& t, const Point& base);
bool representation_equiv(const Representation& r0, const Representation& r1);
bool e_relation(const Point& a, const Point& b);

/// Throws PreconditionError unless every simplex of c is well formed.
void require_well_formed(const Chain& c);

}  // namespace lascar
