#include "locdom/blockcactus.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "locdom/errors.hpp"

namespace locdom {

std::string_view to_string(BlockShape s) {
    switch (s) {
        case BlockShape::Vertex: return "K1";
        case BlockShape::Edge: return "K2";
        case BlockShape::Triangle: return "C3";
        case BlockShape::Clique: return "clique";
        case BlockShape::Cycle: return "cycle";
        case BlockShape::Other: return "other";
    }
    return "?";
}

BlockShape block_shape(const Graph& g, VertexSet block) {
    const int k = block.size();
    if (k == 1) return BlockShape::Vertex;
    if (k == 2) return BlockShape::Edge;
    const int m = g.edges_within(block);
    if (k == 3 && m == 3) return BlockShape::Triangle;
    if (m == k * (k - 1) / 2) return BlockShape::Clique;
    if (m == k) {
        bool two_regular = true;
        for (Vertex v : block) two_regular = two_regular && (g.neighbors(v) & block).size() == 2;
        if (two_regular) return BlockShape::Cycle;
    }
    return BlockShape::Other;
}

namespace {

bool clique_like(BlockShape s) {
    return s == BlockShape::Vertex || s == BlockShape::Edge || s == BlockShape::Triangle || s == BlockShape::Clique;
}
bool cycle_like(BlockShape s) { return s == BlockShape::Triangle || s == BlockShape::Cycle; }

bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (!(s.without(v)).is_subset_of(g.neighbors(v))) return false;
    return true;
}

// Components of the subgraph induced by `within`, in the labels of g.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = VertexSet::singleton(left.front());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v) & within;
            frontier = next - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

void require_block_cactus(const Graph& g) {
    if (!is_block_cactus(g)) throw PreconditionError("graph is not a block-cactus");
}

class Matcher {
public:
    explicit Matcher(const Graph& g) : g_(g) {}

    void attempt(const FamilyDescriptor& d) {
        try {
            validate(d);
        } catch (const PreconditionError&) {
            return;
        }
        if (family_order(d) != g_.order()) return;
        if (std::find(result_.all_matches.begin(), result_.all_matches.end(), d) != result_.all_matches.end()) return;
        auto map = find_isomorphism(build(d), g_);
        if (!map) return;
        if (!result_.matched) {
            result_.matched = true;
            result_.templ = d;
            result_.role_map = std::move(*map);
        }
        result_.all_matches.push_back(d);
    }

    FamilyMatch take() { return std::move(result_); }

private:
    const Graph& g_;
    FamilyMatch result_;
};

// Fig6E pieces hanging off a centre u: cliques joined to u, or corners that
// meet u in one of their degree-2 vertices.
std::optional<FamilyDescriptor> pieces_around(const Graph& g, Vertex u, bool allow_corners) {
    static const Graph corner = build(family::corner());
    std::vector<int> cliques;
    int corners = 0;
    for (VertexSet comp : components_within(g, g.vertices().without(u))) {
        if (comp.size() >= 2 && comp.is_subset_of(g.neighbors(u)) && is_clique(g, comp)) {
            cliques.push_back(comp.size());
        } else if (allow_corners && comp.size() == 5 && (g.neighbors(u) & comp).size() == 2 &&
                   is_isomorphic(induced_subgraph(g, comp.with(u)), corner)) {
            ++corners;
        } else {
            return std::nullopt;
        }
    }
    std::sort(cliques.begin(), cliques.end());
    if (allow_corners) return family::fig6e(std::move(cliques), corners);
    return family::fig8d(std::move(cliques));
}

}  // namespace

HierarchyTags hierarchy(const Graph& g) {
    HierarchyTags tags;
    const BlockDecomposition bd = blocks(g);
    for (VertexSet b : bd.blocks) tags.block_shapes.push_back(block_shape(g, b));
    if (!is_connected(g)) return tags;

    const auto all = [&](auto pred) { return std::all_of(tags.block_shapes.begin(), tags.block_shapes.end(), pred); };
    tags.is_block_cactus = all([](BlockShape s) { return clique_like(s) || cycle_like(s); });
    tags.is_cactus = all([](BlockShape s) {
        return cycle_like(s) || s == BlockShape::Vertex || s == BlockShape::Edge;
    });
    tags.is_block_graph = all(clique_like);
    tags.is_unicyclic = g.size() == g.order();
    tags.is_tree = g.size() == g.order() - 1;
    return tags;
}

bool is_block_cactus(const Graph& g) { return hierarchy(g).is_block_cactus; }

StructureReport validate_nonglobal_structure(const Graph& g, VertexSet s) {
    require_block_cactus(g);
    const std::optional<Vertex> dom = dominating_vertex(g, s);
    if (!dom) throw PreconditionError("LD-set " + s.to_string() + " is global");

    StructureReport rep;
    const Vertex u = *dom;
    rep.dominating_vertex = u;
    const VertexSet nu = g.neighbors(u);
    const VertexSet w_set = g.vertices() - g.closed_neighbors(u);
    const auto violate = [&](std::string check, std::string detail) {
        rep.violations.push_back({std::move(check), std::move(detail)});
    };

    for (VertexSet h : components_within(g, nu)) {
        if (is_clique(g, h)) rep.clique_components_of_nu.push_back(h);
        else violate("nu-cliques", "component " + h.to_string() + " of G[N(u)] is not a clique");

        const int r = h.size();
        const int want = std::max(1, r - 1);
        const int got = (h & s).size();
        if (got != want)
            violate("nu-component-s-count", "component " + h.to_string() + " of order " + std::to_string(r) +
                                                " meets S in " + std::to_string(got) + ", expected " +
                                                std::to_string(want));
    }

    std::map<Vertex, Vertex> singleton_owner;
    std::vector<Vertex> doubleton_ws;
    for (Vertex w : w_set) {
        const VertexSet inter = nu & g.neighbors(w);
        const std::string wname = "w=" + std::to_string(w);
        if (inter.size() < 1 || inter.size() > 2) {
            violate("w-intersection-size", wname + " has |N(u) & N(w)| = " + std::to_string(inter.size()));
            continue;
        }
        if (inter.size() == 1) {
            const Vertex x = inter.front();
            if (!s.contains(x))
                violate("w-singleton-in-s", wname + " meets N(u) only in " + std::to_string(x) + ", not in S");
            auto [it, fresh] = singleton_owner.emplace(x, w);
            if (!fresh)
                violate("w-singleton-unique", "w=" + std::to_string(it->second) + " and " + wname +
                                                  " share the anchor " + std::to_string(x));
        } else {
            const Vertex x = inter.front();
            const Vertex y = inter.back();
            if (g.adjacent(x, y))
                violate("w-doubleton-nonadjacent", wname + " meets N(u) in adjacent " + inter.to_string());
            doubleton_ws.push_back(w);
        }
    }
    for (std::size_t i = 0; i < doubleton_ws.size(); ++i)
        for (std::size_t j = i + 1; j < doubleton_ws.size(); ++j) {
            const Vertex a = doubleton_ws[i];
            const Vertex b = doubleton_ws[j];
            if (g.closed_neighbors(a).intersects(g.closed_neighbors(b)))
                violate("w-doubleton-disjoint",
                        "closed neighbourhoods of " + std::to_string(a) + " and " + std::to_string(b) + " meet");
        }

    const BlockDecomposition bd = blocks(g);
    for (VertexSet comp : components_within(g, w_set)) {
        rep.w_components.push_back(comp);
        if (comp.size() > 2) {
            violate("w-components", "component " + comp.to_string() + " of G[W] has order " +
                                        std::to_string(comp.size()));
            continue;
        }
        if (comp.size() != 2) continue;
        const Vertex a = comp.front();
        const Vertex b = comp.back();
        bool in_c5 = false;
        for (VertexSet blk : bd.blocks)
            if (blk.contains(a) && blk.contains(b))
                in_c5 = blk.size() == 5 && blk.contains(u) && block_shape(g, blk) == BlockShape::Cycle;
        if (!in_c5) violate("w-edge-in-c5", "edge " + comp.to_string() + " is not in a C5 block through u");
    }
    return rep;
}

FamilyMatch recognize_nonglobal_templates(const Graph& g) {
    Matcher m(g);
    const int n = g.order();
    if (n - 2 >= 3) m.attempt(family::fig8a(n - 2));
    if (n - 3 >= 3) m.attempt(family::fig8b(n - 3));
    if (n - 1 >= 3) m.attempt(family::fig8c(n - 1));
    if (n == 8) m.attempt(family::fig6d());
    for (Vertex u = 0; u < n; ++u)
        if (auto d = pieces_around(g, u, true)) m.attempt(*d);
    return m.take();
}

FamilyMatch match_nonglobal_families(const Graph& g, std::optional<int> lambda_value) {
    require_block_cactus(g);
    const int lam = lambda_value ? *lambda_value : lambda(g).value;
    if (lam < 3) throw PreconditionError("lambda must be >= 3, got " + std::to_string(lam));
    return recognize_nonglobal_templates(g);
}

FamilyMatch recognize_complement_plus_one_templates(const Graph& g) {
    Matcher m(g);
    const int n = g.order();
    if (n - 2 >= 2) m.attempt(family::fig8a(n - 2));
    if (n - 3 >= 2) m.attempt(family::fig8b(n - 3));
    if (n - 1 >= 1) m.attempt(family::fig8c(n - 1));
    for (Vertex u = 0; u < n; ++u)
        if (g.degree(u) == n - 1)
            if (auto d = pieces_around(g, u, false)) m.attempt(*d);
    return m.take();
}

ComplementRelation classify_lambda2_blockcactus(const Graph& g) {
    require_block_cactus(g);
    const int lam = lambda(g).value;
    if (lam != 2) throw PreconditionError("lambda must be 2, got " + std::to_string(lam));
    static const std::vector<Graph> plus_one = {build(family::complete(3)), build(family::paw()),
                                                build(family::butterfly()), build(family::banner_complement())};
    for (const Graph& t : plus_one)
        if (is_isomorphic(g, t)) return ComplementRelation::PlusOne;
    const int lam_c = lambda(complement(g)).value;
    if (lam_c != 2)
        throw InvariantError("lambda = 2 block-cactus outside the plus-one list has lambda(complement) = " +
                             std::to_string(lam_c));
    return ComplementRelation::Equal;
}

bool predict_complement_plus_one(const Graph& g) {
    require_block_cactus(g);
    if (g.order() < 2) throw PreconditionError("order must be >= 2");
    return recognize_complement_plus_one_templates(g).matched;
}

bool is_small_nonglobal_exception(const Graph& g) {
    static const std::vector<Graph> exceptions = {
        build(family::path(2)),  build(family::path(5)), build(family::complete(3)),
        build(family::cycle(5)), build(family::banner_complement()), build(family::paw()),
        build(family::bull()),   build(family::butterfly()),
    };
    return std::any_of(exceptions.begin(), exceptions.end(), [&](const Graph& t) { return is_isomorphic(g, t); });
}

int predict_lambda_g(const Graph& g, std::optional<int> lambda_value) {
    require_block_cactus(g);
    const int lam = lambda_value ? *lambda_value : lambda(g).value;
    const bool plus_one = is_small_nonglobal_exception(g) || recognize_nonglobal_templates(g).matched;
    return plus_one ? lam + 1 : lam;
}

}  // namespace locdom
