#pragma once

#include <memory>

#include <nlohmann/json.hpp>

#include "lascar/shell.hpp"
#include "lascar/walk.hpp"

namespace lascar {

using Json = nlohmann::json;

// Writers. Rationals and real values are strings ("1/2", "1/3 + a1").
Json to_json(const Point& p);
Json to_json(const Translation& t);
Json to_json(const StarValue& v);
Json to_json(const StarSet& s);
Json to_json(const Representation& r);
Json to_json(const Edge1& e);
Json to_json(const Simplex2& s);
Json to_json(const Simplex& s);
Json to_json(const Chain& c);
Json to_json(const ChainWalk& w);
Json to_json(const WalkRepresentation& r);

// Readers. Malformed input throws UsageError (ParseError for expressions);
// structural violations of simplex invariants throw PreconditionError.
Point point_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);
Translation translation_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);
StarValue star_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);
Representation representation_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);
Edge1 edge_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);
Simplex2 simplex2_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);
Simplex simplex_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);
Chain chain_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);
ChainWalk walk_from_json(const Json& j, const std::shared_ptr<IrrationalBasis>& basis);

}  // namespace lascar
