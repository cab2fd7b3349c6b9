#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

struct CorpusEntry {
    Graph graph;
    /// The graph6 line the graph came from; empty if it was built in memory.
    std::string source;
};

/// One stated property checked across a corpus.
struct CensusCheck {
    std::string id;
    /// Graphs the check applies to.
    std::string scope;
    /// The property itself.
    std::string claim;
};

/// Every check the census knows, in report order.
const std::vector<CensusCheck>& census_checks();
const CensusCheck* find_census_check(std::string_view id);

struct Counterexample {
    std::string graph6;
    std::string detail;

    auto operator<=>(const Counterexample&) const = default;
};

struct CheckTally {
    std::uint64_t tested = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<Counterexample> counterexamples;  // sorted, capped

    bool operator==(const CheckTally&) const = default;
};

/// Aggregates over every graph seen.
struct CensusStats {
    std::uint64_t graphs = 0;
    std::map<int, std::uint64_t> by_order;
    std::map<int, std::uint64_t> by_lambda;
    std::map<std::string, std::uint64_t> relations;          // MinusOne / Equal / PlusOne
    std::uint64_t block_cactus = 0;
    std::map<std::string, std::uint64_t> block_cactus_relations_lambda_ge3;

    bool operator==(const CensusStats&) const = default;
};

struct CensusReport {
    std::size_t max_counterexamples = 10;
    std::map<std::string, CheckTally> checks;
    CensusStats stats;
    double seconds = 0.0;
    /// Set when the corpus could not be read to the end.
    std::optional<std::string> aborted;

    std::uint64_t total_failures() const;

    /// Associative and commutative up to `seconds`, which is summed.
    void merge(const CensusReport& other);

    /// Equality ignoring timing.
    bool same_results(const CensusReport& other) const;
};

struct CensusOptions {
    /// Check ids to run; empty means all.
    std::vector<std::string> checks = {};
    int jobs = 1;
    std::size_t max_counterexamples = 10;
};

/// Throws PreconditionError for an unknown check id.
CensusReport run_census(const std::vector<CorpusEntry>& corpus, const CensusOptions& opts = {});

/// Runs the selected checks on one graph, adding into report.
void census_one(const CorpusEntry& entry, const std::vector<const CensusCheck*>& checks, CensusReport& report);

}  // namespace locdom
