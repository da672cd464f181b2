#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lascar/shell.hpp"

namespace lascar {

/// A signed sequence of 2-simplices b_0..b_m with index sequence k_0..k_{m+1},
/// read as a walk from f01 to -f02.
struct ChainWalk {
  std::vector<std::pair<int, Simplex2>> terms;
  std::vector<int> index_seq;

  Chain as_chain() const;
};

/// Checks the three walk conditions literally: supports {k_i, k_{i+1}, 0},
/// the two end faces, and the telescoping of consecutive shared faces.
bool verify_chain_walk(const ChainWalk& w, const Edge1& f01, const Edge1& f02);

/// The representation data carried by a walk on support {0,1,2}.
/// Points live in the frame of the common apex; d_{2i0}, d_{2i0+1} realize
/// the pivot face and each other even step is matched to an odd step of the
/// same type read backwards.
struct WalkRepresentation {
  Representation rep;
  Point apex;
  std::vector<Point> d;
  int pivot = 0;                              // i0: the pivot step is (d_{2 i0}, d_{2 i0 + 1})
  std::vector<std::pair<int, int>> matching;  // (2i, m(2i)) with m(2i) odd
};

/// Empty when every invariant holds, else the first violation.
std::string walk_representation_defect(const WalkRepresentation& r, const Shell1& s);

/// Throws PreconditionError on walks that fail verification or leave {0,1,2}.
WalkRepresentation walk_representation(const ChainWalk& w);

/// Bounded search for a walk of length at most 2 nMax + 1 with boundary s.
/// NotFound (nullopt) is a verdict about the search bound only. Points used by
/// a returned walk are reserved in ctx.
std::optional<ChainWalk> search_walk(const Shell1& s, int n_max, PointContext& ctx);

struct DEBound {
  enum class Kind { Finite, Infinite, BeyondSearch } kind = Kind::Finite;
  int n = 0;
};
/// Upper bound for d_E(a, b): Infinite when [a,b] != 0, otherwise the least
/// walk half-length found for canonical shells in both directions.
DEBound d_E_upper_bound(const Point& a, const Point& b, int n_max, PointContext& ctx);

}  // namespace lascar
