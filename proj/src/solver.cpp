#include "locdom/solver.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

#include "locdom/errors.hpp"

namespace locdom {

namespace {

template <typename Visit>
bool k_subsets(VertexSet universe, int k, Visit&& visit) {
    const std::vector<Vertex> elems = universe.to_vector();
    const int m = static_cast<int>(elems.size());
    if (k < 0 || k > m) return true;
    if (k == 0) return visit(VertexSet{});
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t bits = 0;
        for (int i : idx) bits |= std::uint64_t{1} << elems[i];
        if (!visit(VertexSet(bits))) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t pack(std::uint64_t bits, std::uint64_t mask) {
#if defined(__BMI2__)
    return _pext_u64(bits, mask);
#else
    std::uint64_t out = 0;
    int i = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1, ++i)
        if (bits & (m & -m)) out |= std::uint64_t{1} << i;
    return out;
#endif
}

std::uint64_t unpack(std::uint64_t packed, VertexSet into) {
    std::uint64_t out = 0;
    int i = 0;
    for (Vertex v : into) {
        if ((packed >> i) & 1U) out |= std::uint64_t{1} << v;
        ++i;
    }
    return out;
}

// Detects repeated traces. For |s| <= 16 traces index a stamped flat table
// (no clearing between uses); larger sets fall back to hashing.
class TraceTable {
public:
    explicit TraceTable(VertexSet s) : mask_(s.bits()), flat_(s.size() <= kFlatBits) {
        if (flat_) {
            if (++generation() == 0) {
                stamps().fill(0);
                generation() = 1;
            }
        }
    }

    /// False if the trace was already present.
    bool insert(VertexSet trace) {
        if (flat_) {
            auto& slot = stamps()[pack(trace.bits(), mask_)];
            if (slot == generation()) return false;
            slot = generation();
            return true;
        }
        return seen_.insert(trace.bits()).second;
    }

private:
    static constexpr int kFlatBits = 16;

    static std::array<std::uint32_t, 1U << kFlatBits>& stamps() {
        thread_local std::array<std::uint32_t, 1U << kFlatBits> table{};
        return table;
    }
    static std::uint32_t& generation() {
        thread_local std::uint32_t gen = 0;
        return gen;
    }

    std::uint64_t mask_;
    bool flat_;
    std::unordered_set<std::uint64_t> seen_;
};

std::optional<Vertex> find_dominating(const Graph& g, VertexSet s) {
    std::optional<Vertex> found;
    for (Vertex v : g.vertices() - s) {
        if (!s.is_subset_of(g.neighbors(v))) continue;
        if (found) throw InvariantError("two vertices dominate an LD-set: " + std::to_string(*found) + " and " +
                                        std::to_string(v));
        found = v;
    }
    return found;
}

bool is_global_unchecked(const Graph& g, VertexSet s) { return is_ld_set(g, s) && !find_dominating(g, s); }

// Smallest k >= from with some k-subset satisfying pred, scanning subsets in
// lex order. Every caller guarantees a hit by k = n.
template <typename Pred>
SolveResult min_subset(const Graph& g, int from, bool count, Pred&& pred) {
    SolveResult out;
    for (int k = std::max(from, 0); k <= g.order(); ++k) {
        std::uint64_t hits = 0;
        k_subsets(g.vertices(), k, [&](VertexSet s) {
            if (!pred(s)) return true;
            if (hits++ == 0) out.witness = s;
            return count;
        });
        if (hits > 0) {
            out.value = k;
            if (count) out.optima_count = hits;
            return out;
        }
    }
    throw InvariantError("subset search exhausted without a hit");
}

SolveResult lambda_whole(const Graph& g, bool count) {
    return min_subset(g, lower_bound(g.order()), count, [&](VertexSet s) { return is_ld_set(g, s); });
}

}  // namespace

bool for_each_k_subset(VertexSet universe, int k, const std::function<bool(VertexSet)>& visit) {
    return k_subsets(universe, k, visit);
}

bool is_dominating(const Graph& g, VertexSet s) {
    for (Vertex v : g.vertices() - s)
        if (!g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_ld_set(const Graph& g, VertexSet s) {
    TraceTable traces(s);
    for (Vertex v : g.vertices() - s) {
        const VertexSet trace = g.neighbors(v) & s;
        if (trace.empty() || !traces.insert(trace)) return false;
    }
    return true;
}

std::optional<Vertex> dominating_vertex(const Graph& g, VertexSet s) {
    if (!is_ld_set(g, s)) throw PreconditionError("not an LD-set: " + s.to_string());
    return find_dominating(g, s);
}

bool is_global_ld_set(const Graph& g, VertexSet s) { return is_global_unchecked(g, s); }

GlobalityReport globality(const Graph& g, VertexSet s) {
    GlobalityReport r;
    r.dominating_vertex = dominating_vertex(g, s);
    r.is_global = !r.dominating_vertex.has_value();
    return r;
}

int lower_bound(int n) {
    int k = 1;
    while (k < 62 && n > k + (1LL << k) - 1) ++k;
    return k;
}

int lower_bound(const Graph& g) { return lower_bound(g.order()); }

SolveResult lambda(const Graph& g, const SolveOptions& opts) {
    if (!opts.split_components) return lambda_whole(g, opts.count_optima);
    const std::vector<VertexSet> comps = connected_components(g);
    if (comps.size() == 1) return lambda_whole(g, opts.count_optima);

    SolveResult out;
    std::uint64_t count = 1;
    for (VertexSet comp : comps) {
        const SolveResult part = lambda_whole(induced_subgraph(g, comp), opts.count_optima);
        out.value += part.value;
        out.witness |= VertexSet(unpack(part.witness.bits(), comp));
        if (opts.count_optima) count *= *part.optima_count;
    }
    if (opts.count_optima) out.optima_count = count;
    return out;
}

SolveResult gamma(const Graph& g, const SolveOptions& opts) {
    const int from = (g.order() + g.max_degree()) / (g.max_degree() + 1);
    return min_subset(g, from, opts.count_optima, [&](VertexSet s) { return is_dominating(g, s); });
}

SolveResult lambda_g(const Graph& g, const SolveOptions& opts) {
    const int lam = lambda(g).value;
    SolveResult out;
    std::uint64_t hits = 0;
    const auto scan = [&](int k) {
        k_subsets(g.vertices(), k, [&](VertexSet s) {
            if (!is_global_unchecked(g, s)) return true;
            if (hits++ == 0) out.witness = s;
            return opts.count_optima;
        });
        if (hits == 0) return false;
        out.value = k;
        if (opts.count_optima) out.optima_count = hits;
        return true;
    };
    if (scan(lam)) return out;
    // Any LD-code plus its dominating vertex is global, so size lam + 1 always hits.
    if (scan(lam + 1)) return out;
    throw InvariantError("no global LD-set of size lambda + 1");
}

bool has_global_ld_code(const Graph& g) { return has_global_ld_code(g, lambda(g).value); }

bool has_global_ld_code(const Graph& g, int lambda_value) {
    return !k_subsets(g.vertices(), lambda_value, [&](VertexSet s) { return !is_global_unchecked(g, s); });
}

void for_each_ld_code(const Graph& g, const std::function<bool(VertexSet)>& visit) {
    for_each_ld_code(g, lambda(g).value, visit);
}

void for_each_ld_code(const Graph& g, int lambda_value, const std::function<bool(VertexSet)>& visit) {
    k_subsets(g.vertices(), lambda_value, [&](VertexSet s) { return !is_ld_set(g, s) || visit(s); });
}

std::vector<VertexSet> enumerate_ld_codes(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_ld_code(g, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::string_view to_string(ComplementRelation r) {
    switch (r) {
        case ComplementRelation::MinusOne: return "MinusOne";
        case ComplementRelation::Equal: return "Equal";
        case ComplementRelation::PlusOne: return "PlusOne";
    }
    return "?";
}

ComplementRelation relation_from(int lambda_value, int lambda_complement_value) {
    switch (lambda_complement_value - lambda_value) {
        case -1: return ComplementRelation::MinusOne;
        case 0: return ComplementRelation::Equal;
        case 1: return ComplementRelation::PlusOne;
        default:
            throw InvariantError("lambda = " + std::to_string(lambda_value) + " and lambda(complement) = " +
                                 std::to_string(lambda_complement_value) + " differ by more than one");
    }
}

ComplementRelation complement_relation(const Graph& g) {
    return relation_from(lambda(g).value, lambda(complement(g)).value);
}

NonGlobalConditions nonglobal_witness_conditions(const Graph& g, VertexSet s) {
    const std::optional<Vertex> u = dominating_vertex(g, s);
    if (!u) throw PreconditionError("LD-set " + s.to_string() + " is global");

    NonGlobalConditions c;
    c.dominating_vertex = *u;
    c.set_size = s.size();
    c.max_degree = g.max_degree();
    const DistanceMatrix dist(g);
    if (dist.connected()) {
        c.eccentricity = dist.eccentricity(*u);
        c.radius = dist.radius();
        c.diameter = dist.diameter();
    }
    c.eccentricity_ok = c.eccentricity && *c.eccentricity <= 2;
    c.radius_ok = c.radius && *c.radius <= 2;
    c.diameter_ok = c.diameter && *c.diameter <= 4;
    c.degree_ok = c.max_degree >= c.set_size;
    return c;
}

}  // namespace locdom
