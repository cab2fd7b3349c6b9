#include "locdom/graph.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

std::atomic<int> g_vertex_limit{kMaxVertices};

void check_order(int n) {
    if (n < 1) throw PreconditionError("graph must have at least one vertex");
    if (n > vertex_limit())
        throw PreconditionError("graph order " + std::to_string(n) + " exceeds the vertex limit " +
                                std::to_string(vertex_limit()));
}

}  // namespace

int vertex_limit() { return g_vertex_limit.load(std::memory_order_relaxed); }

void set_vertex_limit(int limit) {
    if (limit < 1 || limit > kMaxVertices)
        throw PreconditionError("vertex limit must lie in 1.." + std::to_string(kMaxVertices));
    g_vertex_limit.store(limit, std::memory_order_relaxed);
}

void configure_vertex_limit_from_env() {
    const char* raw = std::getenv("LOCDOM_MAX_N");
    if (raw == nullptr) return;
    int value = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end)
        throw PreconditionError(std::string("LOCDOM_MAX_N is not an integer: '") + raw + "'");
    set_vertex_limit(value);
}

Graph::Graph(int n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {
    const int n = order();
    check_order(n);
    const VertexSet all = vertices();
    for (Vertex v = 0; v < n; ++v) {
        if (!adj_[v].is_subset_of(all))
            throw PreconditionError("neighbour out of range at vertex " + std::to_string(v));
        if (adj_[v].contains(v)) throw PreconditionError("loop at vertex " + std::to_string(v));
        for (Vertex u : adj_[v])
            if (!adj_[u].contains(v))
                throw PreconditionError("asymmetric adjacency between " + std::to_string(u) + " and " +
                                        std::to_string(v));
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    check_order(n);
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
        adj[u] = adj[u].with(v);
        adj[v] = adj[v].with(u);
    }
    return Graph(std::move(adj));
}

int Graph::size() const {
    int twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
}

int Graph::max_degree() const {
    int best = 0;
    for (VertexSet s : adj_) best = std::max(best, s.size());
    return best;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (VertexSet s : adj_) out.push_back(s.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::edges_within(VertexSet s) const {
    int twice = 0;
    for (Vertex v : s) twice += (adj_[v] & s).size();
    return twice / 2;
}

Graph complement(const Graph& g) {
    const VertexSet all = g.vertices();
    std::vector<VertexSet> adj(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = (all - g.neighbors(v)).without(v);
    return Graph(std::move(adj));
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
    const int ng = g.order();
    const int n = ng + h.order();
    check_order(n);
    const VertexSet gside = VertexSet::prefix(ng);
    const VertexSet hside = VertexSet::prefix(n) - gside;
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < ng; ++v) adj[v] = g.neighbors(v) | (cross ? hside : VertexSet{});
    for (Vertex v = 0; v < h.order(); ++v)
        adj[ng + v] = VertexSet(h.neighbors(v).bits() << ng) | (cross ? gside : VertexSet{});
    return Graph(std::move(adj));
}

// Keeps the members of `bits` that lie in `keep`, packed into the low positions.
std::uint64_t compress(std::uint64_t bits, VertexSet keep) {
    std::uint64_t out = 0;
    int i = 0;
    for (Vertex v : keep) {
        if ((bits >> v) & 1U) out |= std::uint64_t{1} << i;
        ++i;
    }
    return out;
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s.empty()) throw PreconditionError("induced subgraph of the empty set");
    if (!s.is_subset_of(g.vertices())) throw PreconditionError("vertex set exceeds the graph");
    std::vector<VertexSet> adj;
    adj.reserve(static_cast<std::size_t>(s.size()));
    for (Vertex v : s) adj.emplace_back(compress(g.neighbors(v).bits(), s));
    return Graph(std::move(adj));
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (g.order() < 2) throw PreconditionError("cannot delete the only vertex");
    return induced_subgraph(g, g.vertices().without(v));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet comp = VertexSet::singleton(left.front());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), dist_(static_cast<std::size_t>(n_ * n_), -1) {
    for (Vertex s = 0; s < n_; ++s) {
        VertexSet seen = VertexSet::singleton(s);
        VertexSet frontier = seen;
        int d = 0;
        while (!frontier.empty()) {
            for (Vertex v : frontier) dist_[s * n_ + v] = d;
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            frontier = next - seen;
            seen |= frontier;
            ++d;
        }
        if (seen != g.vertices()) connected_ = false;
    }
}

std::optional<int> DistanceMatrix::at(Vertex u, Vertex v) const {
    const int d = dist_[u * n_ + v];
    if (d < 0) return std::nullopt;
    return d;
}

int DistanceMatrix::eccentricity(Vertex v) const {
    if (!connected_) throw DisconnectedError();
    return *std::max_element(dist_.begin() + v * n_, dist_.begin() + (v + 1) * n_);
}

int DistanceMatrix::radius() const {
    int best = n_;
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, eccentricity(v));
    return best;
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, eccentricity(v));
    return best;
}

namespace {

// Hopcroft-Tarjan lowpoint DFS; each biconnected component is popped off an
// edge stack when its articulation point is finished.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<VertexSet> found;
    int clock = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(static_cast<std::size_t>(graph.order()), -1), low(disc) {}

    void visit(Vertex v, Vertex parent) {
        disc[v] = low[v] = clock++;
        for (Vertex w : g.neighbors(v)) {
            if (disc[w] < 0) {
                stack.emplace_back(v, w);
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    VertexSet block;
                    Edge e;
                    do {
                        e = stack.back();
                        stack.pop_back();
                        block = block.with(e.first).with(e.second);
                    } while (e != Edge{v, w});
                    found.push_back(block);
                }
            } else if (w != parent && disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder finder(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (finder.disc[v] >= 0) continue;
        if (g.degree(v) == 0) {
            finder.disc[v] = finder.clock++;
            finder.found.push_back(VertexSet::singleton(v));
            continue;
        }
        finder.visit(v, -1);
    }
    BlockDecomposition out;
    out.blocks = std::move(finder.found);
    std::sort(out.blocks.begin(), out.blocks.end(), LexLess{});
    std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
    for (VertexSet b : out.blocks)
        for (Vertex v : b) ++count[v];
    for (Vertex v = 0; v < g.order(); ++v)
        if (count[v] > 1) out.cut_vertices = out.cut_vertices.with(v);
    return out;
}

namespace {

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<Vertex> order;  // g's vertices in matching order
    std::vector<Vertex> map;    // g -> h
    VertexSet used;
    std::vector<std::uint64_t> sig_g, sig_h;

    // Degree in the high bits, then the sorted degrees of the neighbours hashed in.
    static std::vector<std::uint64_t> signatures(const Graph& x) {
        std::vector<std::uint64_t> sig(static_cast<std::size_t>(x.order()));
        for (Vertex v = 0; v < x.order(); ++v) {
            std::vector<int> nd;
            for (Vertex w : x.neighbors(v)) nd.push_back(x.degree(w));
            std::sort(nd.begin(), nd.end());
            std::uint64_t hsh = 1469598103934665603ULL;
            for (int d : nd) hsh = (hsh ^ static_cast<std::uint64_t>(d + 1)) * 1099511628211ULL;
            sig[v] = (static_cast<std::uint64_t>(x.degree(v)) << 56) ^ (hsh >> 8);
        }
        return sig;
    }

    IsoSearch(const Graph& a, const Graph& b)
        : g(a), h(b), map(static_cast<std::size_t>(a.order()), -1), sig_g(signatures(a)), sig_h(signatures(b)) {
        // Greedy order: next vertex is the one with most already-ordered
        // neighbours, ties broken by degree. Keeps adjacency constraints tight.
        VertexSet placed;
        for (int i = 0; i < g.order(); ++i) {
            Vertex best = -1;
            int best_links = -1, best_deg = -1;
            for (Vertex v : g.vertices() - placed) {
                const int links = (g.neighbors(v) & placed).size();
                if (links > best_links || (links == best_links && g.degree(v) > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = g.degree(v);
                }
            }
            order.push_back(best);
            placed = placed.with(best);
        }
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const Vertex v = order[depth];
        for (Vertex c : h.vertices() - used) {
            if (sig_h[c] != sig_g[v]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const Vertex pv = order[i];
                ok = g.adjacent(v, pv) == h.adjacent(c, map[pv]);
            }
            if (!ok) continue;
            map[v] = c;
            used = used.with(c);
            if (extend(depth + 1)) return true;
            used = used.without(c);
            map[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    IsoSearch search(g, h);
    std::vector<std::uint64_t> a = search.sig_g, b = search.sig_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    if (!search.extend(0)) return std::nullopt;
    return search.map;
}

}  // namespace locdom
