#include "locdom/families.hpp"

#include <numeric>
#include <string>

#include "locdom/errors.hpp"

namespace locdom {

namespace family {
FamilyDescriptor path(int n) { return {FamilyTag::Path, {n}, 0}; }
FamilyDescriptor cycle(int n) { return {FamilyTag::Cycle, {n}, 0}; }
FamilyDescriptor wheel(int n) { return {FamilyTag::Wheel, {n}, 0}; }
FamilyDescriptor complete(int n) { return {FamilyTag::Complete, {n}, 0}; }
FamilyDescriptor star(int n) { return {FamilyTag::Star, {n}, 0}; }
FamilyDescriptor complete_bipartite(int r, int s) { return {FamilyTag::CompleteBipartite, {r, s}, 0}; }
FamilyDescriptor bi_star(int r, int s) { return {FamilyTag::BiStar, {r, s}, 0}; }
FamilyDescriptor paw() { return {FamilyTag::Paw, {}, 0}; }
FamilyDescriptor bull() { return {FamilyTag::Bull, {}, 0}; }
FamilyDescriptor banner() { return {FamilyTag::Banner, {}, 0}; }
FamilyDescriptor banner_complement() { return {FamilyTag::BannerComplement, {}, 0}; }
FamilyDescriptor butterfly() { return {FamilyTag::Butterfly, {}, 0}; }
FamilyDescriptor corner() { return {FamilyTag::Corner, {}, 0}; }
FamilyDescriptor fig8a(int r) { return {FamilyTag::Fig8A, {r}, 0}; }
FamilyDescriptor fig8b(int r) { return {FamilyTag::Fig8B, {r}, 0}; }
FamilyDescriptor fig8c(int r) { return {FamilyTag::Fig8C, {r}, 0}; }
FamilyDescriptor fig8d(std::vector<int> cliques) { return {FamilyTag::Fig8D, std::move(cliques), 0}; }
FamilyDescriptor fig6d() { return {FamilyTag::Fig6D, {}, 0}; }
FamilyDescriptor fig6e(std::vector<int> cliques, int corners) {
    return {FamilyTag::Fig6E, std::move(cliques), corners};
}
}  // namespace family

std::string_view to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Path: return "Path";
        case FamilyTag::Cycle: return "Cycle";
        case FamilyTag::Wheel: return "Wheel";
        case FamilyTag::Complete: return "Complete";
        case FamilyTag::Star: return "Star";
        case FamilyTag::CompleteBipartite: return "CompleteBipartite";
        case FamilyTag::BiStar: return "BiStar";
        case FamilyTag::Paw: return "Paw";
        case FamilyTag::Bull: return "Bull";
        case FamilyTag::Banner: return "Banner";
        case FamilyTag::BannerComplement: return "BannerComplement";
        case FamilyTag::Butterfly: return "Butterfly";
        case FamilyTag::Corner: return "Corner";
        case FamilyTag::Fig8A: return "Fig8A";
        case FamilyTag::Fig8B: return "Fig8B";
        case FamilyTag::Fig8C: return "Fig8C";
        case FamilyTag::Fig8D: return "Fig8D";
        case FamilyTag::Fig6D: return "Fig6D";
        case FamilyTag::Fig6E: return "Fig6E";
    }
    return "?";
}

namespace {

[[noreturn]] void reject(const FamilyDescriptor& d, const std::string& why) {
    throw PreconditionError(std::string(to_string(d.tag)) + ": " + why);
}

void want_params(const FamilyDescriptor& d, std::size_t count) {
    if (d.params.size() != count)
        reject(d, "expected " + std::to_string(count) + " parameter(s), got " + std::to_string(d.params.size()));
    if (d.corners != 0) reject(d, "corner copies only apply to Fig6E");
}

void at_least(const FamilyDescriptor& d, int value, int min, const char* name) {
    if (value < min) reject(d, std::string(name) + " must be >= " + std::to_string(min));
}

int clique_total(const FamilyDescriptor& d) { return std::accumulate(d.params.begin(), d.params.end(), 0); }

// Corner edges in the documented labelling; vertex 0 is the attach vertex.
constexpr Edge kCornerEdges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {3, 5}};

struct EdgeList {
    int n = 0;
    std::vector<Edge> edges;

    void clique(Vertex first, int size) {
        for (Vertex a = first; a < first + size; ++a)
            for (Vertex b = a + 1; b < first + size; ++b) edges.emplace_back(a, b);
    }
    Graph graph() const { return Graph::from_edges(n, edges); }
};

}  // namespace

void validate(const FamilyDescriptor& d) {
    switch (d.tag) {
        case FamilyTag::Path: want_params(d, 1); at_least(d, d.params[0], 1, "n"); break;
        case FamilyTag::Cycle: want_params(d, 1); at_least(d, d.params[0], 3, "n"); break;
        case FamilyTag::Wheel: want_params(d, 1); at_least(d, d.params[0], 4, "n"); break;
        case FamilyTag::Complete: want_params(d, 1); at_least(d, d.params[0], 1, "n"); break;
        case FamilyTag::Star: want_params(d, 1); at_least(d, d.params[0], 2, "n"); break;
        case FamilyTag::CompleteBipartite:
            want_params(d, 2);
            at_least(d, d.params[0], 1, "r");
            at_least(d, d.params[1], 1, "s");
            break;
        case FamilyTag::BiStar:
            want_params(d, 2);
            at_least(d, d.params[0], 2, "r");
            at_least(d, d.params[1], 2, "s");
            break;
        case FamilyTag::Paw:
        case FamilyTag::Bull:
        case FamilyTag::Banner:
        case FamilyTag::BannerComplement:
        case FamilyTag::Butterfly:
        case FamilyTag::Corner:
        case FamilyTag::Fig6D: want_params(d, 0); break;
        case FamilyTag::Fig8A:
        case FamilyTag::Fig8B: want_params(d, 1); at_least(d, d.params[0], 2, "r"); break;
        case FamilyTag::Fig8C: want_params(d, 1); at_least(d, d.params[0], 1, "r"); break;
        case FamilyTag::Fig8D:
            if (d.corners != 0) reject(d, "corner copies only apply to Fig6E");
            if (d.params.size() < 2) reject(d, "t must be >= 2");
            for (int r : d.params) at_least(d, r, 2, "every r_i");
            break;
        case FamilyTag::Fig6E:
            at_least(d, d.corners, 0, "t'");
            if (d.params.size() + static_cast<std::size_t>(d.corners) < 2) reject(d, "t + t' must be >= 2");
            for (int r : d.params) at_least(d, r, 2, "every r_i");
            break;
    }
    const int n = family_order(d);
    if (n > vertex_limit()) reject(d, "order " + std::to_string(n) + " exceeds the vertex limit");
}

int family_order(const FamilyDescriptor& d) {
    switch (d.tag) {
        case FamilyTag::Path:
        case FamilyTag::Cycle:
        case FamilyTag::Wheel:
        case FamilyTag::Complete:
        case FamilyTag::Star: return d.params.at(0);
        case FamilyTag::CompleteBipartite: return d.params.at(0) + d.params.at(1);
        case FamilyTag::BiStar: return d.params.at(0) + d.params.at(1) + 2;
        case FamilyTag::Paw: return 4;
        case FamilyTag::Bull:
        case FamilyTag::Banner:
        case FamilyTag::BannerComplement:
        case FamilyTag::Butterfly: return 5;
        case FamilyTag::Corner: return 6;
        case FamilyTag::Fig8A: return d.params.at(0) + 2;
        case FamilyTag::Fig8B: return d.params.at(0) + 3;
        case FamilyTag::Fig8C: return d.params.at(0) + 1;
        case FamilyTag::Fig8D: return clique_total(d) + 1;
        case FamilyTag::Fig6D: return 8;
        case FamilyTag::Fig6E: return clique_total(d) + 5 * d.corners + 1;
    }
    return 0;
}

Graph build(const FamilyDescriptor& d) {
    validate(d);
    EdgeList e;
    e.n = family_order(d);
    const int n = e.n;
    switch (d.tag) {
        case FamilyTag::Path:
            for (Vertex v = 0; v + 1 < n; ++v) e.edges.emplace_back(v, v + 1);
            break;
        case FamilyTag::Cycle:
            for (Vertex v = 0; v < n; ++v) e.edges.emplace_back(v, (v + 1) % n);
            break;
        case FamilyTag::Wheel:
            for (Vertex v = 0; v < n - 1; ++v) {
                e.edges.emplace_back(v, (v + 1) % (n - 1));
                e.edges.emplace_back(v, n - 1);
            }
            break;
        case FamilyTag::Complete:
        case FamilyTag::Fig8C: e.clique(0, n); break;
        case FamilyTag::Star:
            for (Vertex v = 0; v < n - 1; ++v) e.edges.emplace_back(v, n - 1);
            break;
        case FamilyTag::CompleteBipartite: {
            const int r = d.params[0];
            for (Vertex a = 0; a < r; ++a)
                for (Vertex b = r; b < n; ++b) e.edges.emplace_back(a, b);
            break;
        }
        case FamilyTag::BiStar: {
            const int r = d.params[0];
            e.edges.emplace_back(0, 1);
            for (Vertex v = 2; v < r + 2; ++v) e.edges.emplace_back(0, v);
            for (Vertex v = r + 2; v < n; ++v) e.edges.emplace_back(1, v);
            break;
        }
        case FamilyTag::Paw: e.edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}}; break;
        case FamilyTag::Bull: e.edges = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}; break;
        case FamilyTag::Banner: e.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}; break;
        case FamilyTag::BannerComplement: e.edges = {{0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}; break;
        case FamilyTag::Butterfly: e.edges = {{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}; break;
        case FamilyTag::Corner: e.edges.assign(std::begin(kCornerEdges), std::end(kCornerEdges)); break;
        case FamilyTag::Fig8A: {
            const int r = d.params[0];
            e.clique(1, r);
            for (Vertex v = 0; v <= r; ++v) e.edges.emplace_back(v, n - 1);
            break;
        }
        case FamilyTag::Fig8B: {
            const int r = d.params[0];
            e.clique(0, r + 1);
            e.edges.emplace_back(r, r + 1);
            e.edges.emplace_back(r + 1, r + 2);
            break;
        }
        case FamilyTag::Fig6D:
            e.edges.assign(std::begin(kCornerEdges), std::end(kCornerEdges));
            e.edges.emplace_back(0, 6);
            e.edges.emplace_back(6, 7);
            break;
        case FamilyTag::Fig8D:
        case FamilyTag::Fig6E: {
            const Vertex apex = n - 1;
            Vertex next = 0;
            for (int r : d.params) {
                e.clique(next, r);
                for (Vertex v = next; v < next + r; ++v) e.edges.emplace_back(v, apex);
                next += r;
            }
            for (int c = 0; c < d.corners; ++c) {
                // Corner label k (1..5) lives at next + k - 1; label 0 is the apex.
                const auto at = [&](Vertex k) { return k == 0 ? apex : next + k - 1; };
                for (auto [a, b] : kCornerEdges) e.edges.emplace_back(at(a), at(b));
                next += 5;
            }
            break;
        }
    }
    return e.graph();
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

FormulaTriple triple(int a, int b, int c) { return {a, b, c}; }

[[noreturn]] void unsupported(const FamilyDescriptor& d, const std::string& why) {
    throw UnsupportedError(std::string("no closed formula for ") + std::string(to_string(d.tag)) + ": " + why);
}

}  // namespace

const std::vector<SmallOrderEntry>& small_order_table() {
    // Exact values for the orders below the general formulas.
    static const std::vector<SmallOrderEntry> table = {
        {family::path(1), 1, 1, 1},  {family::path(2), 1, 2, 2},  {family::path(3), 2, 2, 2},
        {family::path(4), 2, 2, 2},  {family::path(5), 2, 2, 3},  {family::path(6), 3, 3, 3},
        {family::cycle(4), 2, 2, 2}, {family::cycle(5), 2, 2, 3}, {family::cycle(6), 3, 3, 3},
        {family::wheel(5), 2, 3, 3}, {family::wheel(6), 3, 3, 3}, {family::wheel(7), 3, 4, 4},
    };
    return table;
}

FormulaTriple formula(const FamilyDescriptor& d) {
    validate(d);
    for (const SmallOrderEntry& e : small_order_table())
        if (e.family == d) return triple(e.lambda, e.lambda_complement, e.lambda_global);

    const int n = family_order(d);
    switch (d.tag) {
        case FamilyTag::Path:
        case FamilyTag::Cycle:
            if (n < 7) unsupported(d, "n must be >= 4 for cycles");
            return triple(ceil_div(2 * n, 5), ceil_div(2 * n - 2, 5), ceil_div(2 * n, 5));
        case FamilyTag::Wheel:
            if (n < 8) unsupported(d, "n must be >= 5");
            return triple(ceil_div(2 * n - 2, 5), ceil_div(2 * n + 1, 5), ceil_div(2 * n + 1, 5));
        case FamilyTag::Complete:
            if (n < 2) unsupported(d, "n must be >= 2");
            return triple(n - 1, n, n);
        case FamilyTag::Star:
            if (n < 4) unsupported(d, "n must be >= 4");
            return triple(n - 1, n - 1, n - 1);
        case FamilyTag::CompleteBipartite:
            if (std::min(d.params[0], d.params[1]) < 2) unsupported(d, "both sides must have >= 2 vertices");
            return triple(n - 2, n - 2, n - 2);
        case FamilyTag::BiStar: return triple(n - 2, n - 3, n - 2);
        default: unsupported(d, "not a tabulated family");
    }
}

std::tuple<int, int, int> lambda_complement_path_cycle_identity(int n) {
    if (n < 7) throw UnsupportedError("the complement identity needs n >= 7");
    return {*formula(family::path(n)).lambda_complement, *formula(family::cycle(n)).lambda_complement,
            *formula(family::path(n - 1)).lambda};
}

}  // namespace locdom
