#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

// Predicates. All assume s is a subset of g.vertices().

bool is_dominating(const Graph& g, VertexSet s);

/// Dominating, and the traces N(v) & s are pairwise distinct over v outside s.
bool is_ld_set(const Graph& g, VertexSet s);

/// The vertex outside an LD-set s that is adjacent to every member of s.
/// Such a vertex is unique when it exists. Throws PreconditionError when s is
/// not an LD-set, InvariantError if two candidates turn up.
std::optional<Vertex> dominating_vertex(const Graph& g, VertexSet s);

/// LD-set of both g and its complement. Uses the dominating-vertex test, which
/// agrees with checking the complement directly.
bool is_global_ld_set(const Graph& g, VertexSet s);

struct GlobalityReport {
    bool is_global = false;
    std::optional<Vertex> dominating_vertex;
};

/// Precondition: s is an LD-set of g.
GlobalityReport globality(const Graph& g, VertexSet s);

struct SolveOptions {
    /// Also count every optimal set (slower: the last cardinality is scanned fully).
    bool count_optima = false;
    /// lambda only: solve each connected component separately and combine.
    bool split_components = true;
};

struct SolveResult {
    int value = 0;
    /// Lexicographically smallest optimal set.
    VertexSet witness;
    std::optional<std::uint64_t> optima_count;
};

/// Location-domination number.
SolveResult lambda(const Graph& g, const SolveOptions& opts = {});

/// Domination number.
SolveResult gamma(const Graph& g, const SolveOptions& opts = {});

/// Global location-domination number; always searched on the whole graph.
SolveResult lambda_g(const Graph& g, const SolveOptions& opts = {});

/// Some LD-code of g is global, i.e. lambda_g(g) == lambda(g).
bool has_global_ld_code(const Graph& g);
bool has_global_ld_code(const Graph& g, int lambda_value);

/// Visits the LD-codes of g in lexicographic order; stop early by returning false.
void for_each_ld_code(const Graph& g, const std::function<bool(VertexSet)>& visit);
void for_each_ld_code(const Graph& g, int lambda_value, const std::function<bool(VertexSet)>& visit);
std::vector<VertexSet> enumerate_ld_codes(const Graph& g);

/// Sign of lambda(complement) - lambda.
enum class ComplementRelation { MinusOne, Equal, PlusOne };

std::string_view to_string(ComplementRelation r);

/// Throws InvariantError when the two values are more than one apart.
ComplementRelation relation_from(int lambda_value, int lambda_complement_value);
ComplementRelation complement_relation(const Graph& g);

/// Necessary conditions carried by a non-global LD-set and its dominating
/// vertex u. A false flag is a counterexample, never an exception.
struct NonGlobalConditions {
    Vertex dominating_vertex = 0;
    int set_size = 0;
    std::optional<int> eccentricity;  // of u; nullopt when some vertex is unreachable
    std::optional<int> radius;
    std::optional<int> diameter;
    int max_degree = 0;

    bool eccentricity_ok = false;  // ecc(u) <= 2
    bool radius_ok = false;        // rad <= 2
    bool diameter_ok = false;      // diam <= 4
    bool degree_ok = false;        // max degree >= |s|

    bool all() const { return eccentricity_ok && radius_ok && diameter_ok && degree_ok; }
};

/// Precondition: s is an LD-set of g with a dominating vertex.
NonGlobalConditions nonglobal_witness_conditions(const Graph& g, VertexSet s);

/// Smallest k with n <= k + 2^k - 1: n - k outside vertices need distinct
/// nonempty traces inside a k-set.
int lower_bound(int n);
int lower_bound(const Graph& g);

/// Visits the k-subsets of universe in lexicographic order; stop early by
/// returning false. Returns false iff stopped early.
bool for_each_k_subset(VertexSet universe, int k, const std::function<bool(VertexSet)>& visit);

}  // namespace locdom
