#pragma once

#include <memory>
#include <string_view>

#include "lascar/basis.hpp"
#include "lascar/real_value.hpp"
#include "lascar/star.hpp"

namespace lascar {

/// Evaluates a star expression: rationals "p/q", basis names, unary and
/// binary +/-, parentheses, rational scalars "r*x", and "+e"/"-e" suffixes on
/// rational terms. Throws ParseError carrying the offending position.
StarSet eval_star(std::string_view text, const std::shared_ptr<IrrationalBasis>& basis);

/// Parses a single star value such as "1/2-e" or "a1 - 1/3".
StarValue parse_star_value(std::string_view text, const std::shared_ptr<IrrationalBasis>& basis);

/// Parses an exact linear combination "q0 + q1*a1 - a2" (no infinitesimals).
RealValue parse_real(std::string_view text, const std::shared_ptr<IrrationalBasis>& basis);

}  // namespace lascar
