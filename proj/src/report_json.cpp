#include "locdom/report_json.hpp"

#include "locdom/family_spec.hpp"

namespace locdom {

using nlohmann::json;

json to_json(VertexSet s) { return s.to_vector(); }

json to_json(const SolveResult& r) {
    json j = {{"value", r.value}, {"witness", to_json(r.witness)}};
    if (r.optima_count) j["optima_count"] = *r.optima_count;
    return j;
}

json to_json(const FormulaTriple& t) {
    const auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
    return {{"lambda", opt(t.lambda)},
            {"lambda_complement", opt(t.lambda_complement)},
            {"lambda_global", opt(t.lambda_global)}};
}

json to_json(const FamilyDescriptor& d) {
    return {{"tag", std::string(to_string(d.tag))},
            {"params", d.params},
            {"corners", d.corners},
            {"spec", format_family_spec(d)}};
}

json to_json(const FamilyMatch& m) {
    json j = {{"matched", m.matched}};
    if (m.templ) {
        j["template"] = to_json(*m.templ);
        j["role_map"] = m.role_map;
    }
    json all = json::array();
    for (const FamilyDescriptor& d : m.all_matches) all.push_back(format_family_spec(d));
    j["all_matches"] = all;
    return j;
}

json to_json(const HierarchyTags& t) {
    json shapes = json::array();
    for (BlockShape s : t.block_shapes) shapes.push_back(std::string(to_string(s)));
    return {{"tree", t.is_tree},
            {"unicyclic", t.is_unicyclic},
            {"cactus", t.is_cactus},
            {"block_graph", t.is_block_graph},
            {"block_cactus", t.is_block_cactus},
            {"block_shapes", shapes}};
}

json to_json(const TableRow& row) {
    return {{"table", row.table},
            {"family", format_family_spec(row.family)},
            {"order", row.order},
            {"expected", to_json(row.expected)},
            {"exact",
             {{"lambda", row.lambda},
              {"lambda_complement", row.lambda_complement},
              {"lambda_global", row.lambda_global},
              {"lambda_global_of_complement", row.lambda_global_of_complement}}},
            {"agrees", row.agrees}};
}

json to_json(const CensusReport& r, bool with_timing) {
    json checks = json::array();
    for (const CensusCheck& meta : census_checks()) {
        const auto it = r.checks.find(meta.id);
        if (it == r.checks.end()) continue;
        const CheckTally& t = it->second;
        json cex = json::array();
        for (const Counterexample& c : t.counterexamples) cex.push_back({{"graph6", c.graph6}, {"detail", c.detail}});
        checks.push_back({{"id", meta.id},
                          {"scope", meta.scope},
                          {"claim", meta.claim},
                          {"tested", t.tested},
                          {"passed", t.passed},
                          {"failed", t.failed},
                          {"counterexamples", cex}});
    }
    const auto keyed = [](const auto& m) {
        json j = json::object();
        for (const auto& [k, v] : m) {
            if constexpr (std::is_same_v<std::decay_t<decltype(k)>, std::string>) j[k] = v;
            else j[std::to_string(k)] = v;
        }
        return j;
    };
    json j = {{"schema", kJsonSchema},
              {"graphs", r.stats.graphs},
              {"failures", r.total_failures()},
              {"checks", checks},
              {"stats",
               {{"by_order", keyed(r.stats.by_order)},
                {"by_lambda", keyed(r.stats.by_lambda)},
                {"relations", keyed(r.stats.relations)},
                {"block_cactus", r.stats.block_cactus},
                {"block_cactus_relations_lambda_ge3", keyed(r.stats.block_cactus_relations_lambda_ge3)}}}};
    if (r.aborted) j["aborted"] = *r.aborted;
    if (with_timing) j["seconds"] = r.seconds;
    return j;
}

}  // namespace locdom
