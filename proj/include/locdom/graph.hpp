#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locdom/vertex_set.hpp"

namespace locdom {

/// Current cap on graph order. Defaults to kMaxVertices.
int vertex_limit();

/// Lower the cap (1 <= limit <= kMaxVertices); throws PreconditionError otherwise.
void set_vertex_limit(int limit);

/// Applies LOCDOM_MAX_N when set. Throws PreconditionError on a malformed
/// or out-of-range value; does nothing when the variable is absent.
void configure_vertex_limit_from_env();

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Takes open neighbourhoods; rejects asymmetric or reflexive input.
    explicit Graph(std::vector<VertexSet> adjacency);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const;

    VertexSet vertices() const { return VertexSet::prefix(order()); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    VertexSet closed_neighbors(Vertex v) const { return adj_[v].with(v); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int degree(Vertex v) const { return adj_[v].size(); }
    int max_degree() const;
    std::vector<int> degree_sequence() const;  // sorted ascending

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Edges with both endpoints in s.
    int edges_within(VertexSet s) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);

/// G + H; H's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// G v H: the union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);

/// Removes v and renumbers the remaining vertices in their original order.
Graph delete_vertex(const Graph& g, Vertex v);

/// G[s], vertices renumbered in increasing order of their label in g.
Graph induced_subgraph(const Graph& g, VertexSet s);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// All-pairs hop distances by BFS.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    /// nullopt when v is unreachable from u.
    std::optional<int> at(Vertex u, Vertex v) const;
    bool connected() const { return connected_; }

    // These three throw DisconnectedError on a disconnected graph.
    int eccentricity(Vertex v) const;
    int radius() const;
    int diameter() const;

private:
    int n_;
    bool connected_ = true;
    std::vector<int> dist_;  // -1 = unreachable
};

inline DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

/// Blocks (maximal 2-connected pieces, bridges, isolated vertices) and cut
/// vertices. Blocks are listed in lex order of their vertex sets.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};

BlockDecomposition blocks(const Graph& g);

/// An adjacency-preserving bijection g -> h as map[v_g] = v_h, if one exists.
/// Backtracking with degree pruning; meant for n up to about 12.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

inline bool is_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

}  // namespace locdom
