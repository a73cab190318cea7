#pragma once

#include "eschur/shapes.hpp"
#include "eschur/tableaux.hpp"

#include <json.hpp>

#include <string>

namespace eschur {

using json = nlohmann::json;

json to_json(const Partition &p);
Partition partition_from_json(const json &j);

json to_json(const SkewShape &s);
SkewShape skew_from_json(const json &j);

// {"shape": {"outer", "inner"}, "extent", "window": [m, M],
//  "entries": [[i, j, v], ...], "edges": [[i, j, [v, ...]], ...]}
// Edges are named by the cell below them.
json to_json(const EdgeTableau &t);
json to_json(const Tableau &t);
EdgeTableau elt_from_json(const json &j);

} // namespace eschur
