#pragma once

#include <json.hpp>

#include "qschur/exact.hpp"
#include "qschur/insertion.hpp"
#include "qschur/lrrule.hpp"
#include "qschur/lspaths.hpp"
#include "qschur/patterns.hpp"
#include "qschur/tableaux.hpp"

// Canonical JSON forms for every value the CLI reads or writes. Terms of a
// polynomial are listed from the largest exponent vector downward in the
// graded lexicographic order; (q,t)-terms ascend lexicographically.

namespace qschur {

using json = nlohmann::ordered_json;

json xpoly_to_json(const XPoly& p);
XPoly xpoly_from_json(const json& j);

json grid_to_json(const Grid& g);
Grid grid_from_json(const json& j);

json skew_to_json(const SkewGrid& s);
SkewGrid skew_from_json(const json& j);

json triarray_to_json(const TriArray& x);
TriArray triarray_from_json(const json& j);

json path_to_json(const RationalPath& p);
RationalPath path_from_json(const json& j);

json expansion_to_json(const LRExpansion& e);
json insertion_to_json(const InsertionResult& r);

}  // namespace qschur
