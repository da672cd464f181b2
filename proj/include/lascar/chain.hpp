#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lascar/circle.hpp"

namespace lascar {

/// A vertex object at a support index; the point stands for its enumerated closure.
struct Vertex0 {
  int index = 0;
  Point vertex;

  friend bool operator==(const Vertex0&, const Vertex0&) = default;
};

/// A closed independent 1-simplex. The vertex objects name the closures at
/// the two support indices; the images record where their generators land
/// inside the edge's own closed set.
struct Edge1 {
  std::array<int, 2> support{0, 1};
  Point vertex_low, vertex_high;
  Point image_low, image_high;

  StarValue sd_type() const { return sd(image_low, image_high); }
  Vertex0 vertex(int position) const { return position == 0 ? Vertex0{support[0], vertex_low} : Vertex0{support[1], vertex_high}; }

  friend bool operator==(const Edge1&, const Edge1&) = default;
};

/// An edge whose images are its vertex objects themselves.
Edge1 plain_edge(int i, int j, const Point& vi, const Point& vj);
Edge1 make_edge(int i, int j, const Point& vi, const Point& vj, const Point& image_i, const Point& image_j);

/// A closed independent 2-simplex. faces[p] is the face opposite position p,
/// so the boundary is faces[0] - faces[1] + faces[2].
struct Simplex2 {
  std::array<int, 3> support{0, 1, 2};
  std::array<Point, 3> images;
  std::array<Edge1, 3> faces;

  Point vertex(int position) const;
  friend bool operator==(const Simplex2&, const Simplex2&) = default;
};

/// Builds a 2-simplex from explicit faces (opposite positions 0, 1, 2) and
/// checks every invariant, throwing PreconditionError on violation.
Simplex2 make_simplex(std::array<int, 3> support, std::array<Point, 3> images, std::array<Edge1, 3> faces);

/// Empty string when the simplex is well formed, else the first violated invariant.
std::string simplex_defect(const Simplex2& s);
std::string edge_defect(const Edge1& e);

using Simplex = std::variant<Vertex0, Edge1, Simplex2>;

int dimension(const Simplex& s);
Simplex transform(const Translation& t, const Simplex& s);
std::vector<int> support_of(const Simplex& s);

/// A finite formal Z-combination of simplices of one dimension, with
/// cancellation by structural equality.
class Chain {
 public:
  struct Term {
    Simplex simplex;
    long coef;
  };

  explicit Chain(int dim = 1) : dim_(dim) {}
  Chain(int dim, std::initializer_list<std::pair<Simplex, long>> terms);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const Simplex& s, long coef);
  void add(const Chain& other, long scale = 1);

  long length() const;
  std::set<int> support() const;

  friend Chain operator+(Chain a, const Chain& b) { a.add(b, 1); return a; }
  friend Chain operator-(Chain a, const Chain& b) { a.add(b, -1); return a; }
  friend Chain operator*(long k, const Chain& c);
  /// Equal as elements of the free abelian group.
  friend bool operator==(const Chain& a, const Chain& b);

 private:
  int dim_;
  std::vector<Term> terms_;
};

/// The i-th face of a simplex of dimension >= 1.
Simplex boundary_i(const Simplex& s, int i);
Chain boundary(const Simplex& s);
Chain boundary(const Chain& c);

Chain apply_automorphism(const Translation& t, const Chain& c);

}  // namespace lascar
