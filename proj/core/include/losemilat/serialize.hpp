#pragma once

// JSON forms. Exact integers are written as decimal strings so that values beyond
// 64 bits survive the round trip.
//
//   point set       [[1,1,1],[1,1,2],...]            lexicographic point order
//   component       {"sigma":[2,3,1],"kind":2,"constraints":["x2 = x3","x3 <= x1"]}
//   stats           {"n":3,"avg_irr":{"num":"72","den":"25"},"decimal":"2.88","total_equations":"25"}

#include <nlohmann/json.hpp>

#include "losemilat/chain.hpp"
#include "losemilat/point_set.hpp"
#include "losemilat/solver.hpp"

namespace losemilat {

nlohmann::json to_json(const PointSet& set);
nlohmann::json to_json(const ChainComponent& component);
nlohmann::json to_json(const CoordinateSemilattice& gamma);
nlohmann::json stats_json(int n);

/// Inverse of to_json(PointSet). Throws ContextError on malformed or out-of-range points.
PointSet point_set_from_json(const nlohmann::json& j, const Context& ctx, const Limits& limits = {});

}  // namespace losemilat
