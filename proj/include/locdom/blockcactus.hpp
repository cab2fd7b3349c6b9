#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locdom/families.hpp"
#include "locdom/graph.hpp"
#include "locdom/solver.hpp"

namespace locdom {

enum class BlockShape {
    Vertex,    // isolated vertex
    Edge,      // K2, a bridge
    Triangle,  // C3 = K3, counts as both cycle and clique
    Clique,    // K_m, m >= 4
    Cycle,     // C_m, m >= 4
    Other,
};

std::string_view to_string(BlockShape s);
BlockShape block_shape(const Graph& g, VertexSet block);

struct HierarchyTags {
    bool is_tree = false;
    bool is_unicyclic = false;
    bool is_cactus = false;
    bool is_block_graph = false;
    bool is_block_cactus = false;
    /// Shapes parallel to blocks(g).blocks.
    std::vector<BlockShape> block_shapes;
};

HierarchyTags hierarchy(const Graph& g);
bool is_block_cactus(const Graph& g);

struct StructureViolation {
    /// Stable name of the property that failed, e.g. "nu-cliques".
    std::string check;
    std::string detail;
};

/// Structure of a block-cactus around the dominating vertex u of a non-global
/// LD-set s, with W = V - N[u].
///
/// Checks, each reported under its own name on failure:
///   nu-cliques               G[N(u)] is a disjoint union of cliques
///   w-intersection-size      1 <= |N(u) & N(w)| <= 2 for w in W
///   w-singleton-in-s         N(u) & N(w) = {x}  implies  x in s
///   w-doubleton-nonadjacent  N(u) & N(w) = {x,y}  implies  x !~ y
///   w-singleton-unique       no two w share the same singleton intersection
///   w-doubleton-disjoint     w != w' with doubleton intersections have disjoint N[w], N[w']
///   w-components             every component of G[W] is K1 or K2
///   w-edge-in-c5             an edge inside W lies in a C5 block through u
///   nu-component-s-count     a component of G[N(u)] of order r meets s in max(1, r-1) vertices
struct StructureReport {
    Vertex dominating_vertex = 0;
    std::vector<VertexSet> clique_components_of_nu;
    std::vector<VertexSet> w_components;
    std::vector<StructureViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Precondition: g is a block-cactus and s a non-global LD-set of g.
StructureReport validate_nonglobal_structure(const Graph& g, VertexSet s);

struct FamilyMatch {
    bool matched = false;
    /// First template that fits, in the order the recogniser lists them.
    std::optional<FamilyDescriptor> templ;
    /// role_map[template vertex] = input vertex.
    std::vector<Vertex> role_map;
    /// Every template that fits; more than one means overlapping families.
    std::vector<FamilyDescriptor> all_matches;
};

/// Block-cactus with lambda >= 3 and no global LD-code:
///   K1 v (K1 + K_r), the K2-pendant K_{r+1}, K_{r+1} (all r >= 3),
///   Fig6D, and Fig6E (t + t' >= 2, r_i >= 2).
/// Precondition: block-cactus with lambda >= 3; lambda is computed if absent.
FamilyMatch match_nonglobal_families(const Graph& g, std::optional<int> lambda_value = std::nullopt);

/// The same templates without the lambda precondition.
FamilyMatch recognize_nonglobal_templates(const Graph& g);

/// Block-cactus with lambda(complement) = lambda + 1:
///   K1 v (K1 + K_r) and the K2-pendant K_{r+1} (r >= 2), K_{r+1} (r >= 1),
///   K1 v (K_r1 + ... + K_rt) (t >= 2, r_i >= 2).
FamilyMatch recognize_complement_plus_one_templates(const Graph& g);

/// Precondition: block-cactus with lambda = 2. PlusOne exactly for C3, the paw,
/// the butterfly and the banner complement; otherwise the exact relation, which
/// must be Equal (InvariantError if the exact solve disagrees).
ComplementRelation classify_lambda2_blockcactus(const Graph& g);

/// Precondition: block-cactus of order >= 2.
bool predict_complement_plus_one(const Graph& g);

/// Graphs outside the templates whose lambda_g is lambda + 1:
/// P2, P5, C3, C5, banner complement, paw, bull, butterfly.
bool is_small_nonglobal_exception(const Graph& g);

/// Precondition: block-cactus. lambda is computed if absent.
int predict_lambda_g(const Graph& g, std::optional<int> lambda_value = std::nullopt);

}  // namespace locdom
