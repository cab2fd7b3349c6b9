#include <doctest.h>

#include <fstream>

#include "locdom/census.hpp"
#include "locdom/families.hpp"
#include "locdom/graph6.hpp"
#include "locdom/report_json.hpp"

using namespace locdom;

namespace {

std::vector<CorpusEntry> load(const std::string& name, int max_n) {
    std::ifstream file(std::string(LOCDOM_CORPUS_DIR) + "/" + name);
    REQUIRE(file);
    Graph6Reader r(file);
    std::vector<CorpusEntry> out;
    while (auto e = r.next())
        if (e->graph.order() <= max_n) out.push_back({std::move(e->graph), e->line});
    return out;
}

}  // namespace

TEST_CASE("check registry") {
    CHECK(census_checks().size() == 17);
    CHECK(find_census_check("complement-diff") != nullptr);
    CHECK(find_census_check("nope") == nullptr);
    CHECK_THROWS(run_census({}, {.checks = {"nope"}}));
}

TEST_CASE("a few checks on a handful of graphs") {
    std::vector<CorpusEntry> corpus;
    for (const FamilyDescriptor& d : {family::path(5), family::cycle(5), family::paw(), family::complete(4)})
        corpus.push_back({build(d), ""});
    const CensusReport r = run_census(corpus, {.checks = {"complement-diff", "global-bounds", "diam5-global"}});
    CHECK(r.stats.graphs == 4);
    CHECK(r.checks.size() == 3);
    CHECK(r.checks.at("complement-diff").tested == 4);
    CHECK(r.checks.at("diam5-global").tested == 0);
    CHECK(r.total_failures() == 0);
    CHECK(r.stats.relations.at("PlusOne") == 2);  // paw and K4
}

TEST_CASE("results do not depend on the number of workers") {
    const auto corpus = load("graphs_n1-7.g6", 6);
    CensusOptions opts;
    opts.max_counterexamples = 5;
    opts.jobs = 1;
    const CensusReport one = run_census(corpus, opts);
    opts.jobs = 5;
    const CensusReport many = run_census(corpus, opts);
    CHECK(one.same_results(many));
    CHECK(to_json(one).dump() == to_json(many).dump());
}

TEST_CASE("merge is order independent") {
    const auto corpus = load("connected_n1-7.g6", 5);
    const std::vector<const CensusCheck*> all = [] {
        std::vector<const CensusCheck*> v;
        for (const CensusCheck& c : census_checks()) v.push_back(&c);
        return v;
    }();
    CensusReport a, b, whole;
    for (std::size_t i = 0; i < corpus.size(); ++i) census_one(corpus[i], all, i % 2 ? a : b);
    for (const CorpusEntry& e : corpus) census_one(e, all, whole);
    CensusReport ab = a, ba = b;
    ab.merge(b);
    ba.merge(a);
    CHECK(ab.same_results(ba));
    CHECK(ab.same_results(whole));
}

TEST_CASE("json document shape") {
    const auto corpus = load("connected_n1-7.g6", 4);
    const auto j = to_json(run_census(corpus));
    CHECK(j["schema"] == kJsonSchema);
    CHECK(j["graphs"] == 10);
    CHECK(j["checks"].size() == census_checks().size());
    CHECK(j["checks"][0]["id"] == "complement-diff");
    CHECK_FALSE(j.contains("seconds"));
}
