#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "relgraph/family.hpp"
#include "relgraph/theorems.hpp"

namespace relgraph {

// One object per instance: family, group, subset, path, n, r, transitivity,
// caveat, checks [{claim, j_or_g, lhs, rhs, pass, tight, v}], witnesses, notes.
nlohmann::ordered_json to_json(const VerificationReport& report);
// Single line, no trailing newline.
std::string to_ndjson_line(const VerificationReport& report);

nlohmann::ordered_json to_json(const FamilySummary& summary);
// Human-readable table of per-claim counts.
void print_summary(std::ostream& out, const FamilySummary& summary);

}  // namespace relgraph
