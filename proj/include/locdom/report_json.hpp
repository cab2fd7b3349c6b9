#pragma once

#include <json.hpp>

#include "locdom/blockcactus.hpp"
#include "locdom/census.hpp"
#include "locdom/families.hpp"
#include "locdom/solver.hpp"
#include "locdom/tables.hpp"

namespace locdom {

/// Version of every JSON document the CLI writes.
inline constexpr int kJsonSchema = 1;

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const FormulaTriple& t);
nlohmann::json to_json(const FamilyDescriptor& d);
nlohmann::json to_json(const FamilyMatch& m);
nlohmann::json to_json(const HierarchyTags& t);
nlohmann::json to_json(const TableRow& row);

/// Timing is left out unless asked for, so reports from different runs compare equal.
nlohmann::json to_json(const CensusReport& r, bool with_timing = false);

}  // namespace locdom
