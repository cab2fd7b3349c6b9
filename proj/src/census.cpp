#include "locdom/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "locdom/blockcactus.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/graph6.hpp"
#include "locdom/solver.hpp"

namespace locdom {

namespace {

// Per-graph values, computed on first use.
class Facts {
public:
    explicit Facts(const CorpusEntry& e) : entry(e), g(e.graph) {}

    const CorpusEntry& entry;
    const Graph& g;

    const std::string& g6() { return get(g6_, [&] { return entry.source.empty() ? emit_graph6(g) : entry.source; }); }
    const Graph& comp() { return get(comp_, [&] { return complement(g); }); }
    int lam() { return get(lam_, [&] { return lambda(g).value; }); }
    int lam_c() { return get(lam_c_, [&] { return lambda(comp()).value; }); }
    int lam_g() { return get(lam_g_, [&] { return lambda_g(g).value; }); }
    int lam_g_c() { return get(lam_g_c_, [&] { return lambda_g(comp()).value; }); }
    bool connected() { return get(connected_, [&] { return is_connected(g); }); }
    const HierarchyTags& tags() { return get(tags_, [&] { return hierarchy(g); }); }
    const DistanceMatrix& dist() { return get(dist_, [&] { return DistanceMatrix(g); }); }
    const std::vector<VertexSet>& codes() {
        return get(codes_, [&] {
            std::vector<VertexSet> out;
            for_each_ld_code(g, lam(), [&](VertexSet s) {
                out.push_back(s);
                return true;
            });
            return out;
        });
    }
    /// LD-codes with a dominating vertex.
    const std::vector<VertexSet>& nonglobal_codes() {
        return get(nonglobal_, [&] {
            std::vector<VertexSet> out;
            for (VertexSet s : codes())
                if (!is_ld_set(comp(), s)) out.push_back(s);
            return out;
        });
    }
    /// Decided with the two-sided definition, not the dominating-vertex shortcut.
    bool has_global() { return nonglobal_codes().size() < codes().size(); }

    std::string values() {
        return "lambda=" + std::to_string(lam()) + " lambda_c=" + std::to_string(lam_c()) +
               " lambda_g=" + std::to_string(lam_g());
    }

private:
    template <typename T, typename F>
    const T& get(std::optional<T>& slot, F&& make) {
        if (!slot) slot.emplace(make());
        return *slot;
    }

    std::optional<std::string> g6_;
    std::optional<Graph> comp_;
    std::optional<int> lam_, lam_c_, lam_g_, lam_g_c_;
    std::optional<bool> connected_;
    std::optional<HierarchyTags> tags_;
    std::optional<DistanceMatrix> dist_;
    std::optional<std::vector<VertexSet>> codes_, nonglobal_;
};

struct Verdict {
    enum Kind { Skip, Pass, Fail } kind = Skip;
    std::string detail;

    static Verdict skip() { return {}; }
    static Verdict pass() { return {Pass, {}}; }
    static Verdict fail(std::string d) { return {Fail, std::move(d)}; }
    static Verdict check(bool ok, std::string d) { return ok ? pass() : fail(std::move(d)); }
};

struct Registered {
    CensusCheck meta;
    std::function<Verdict(Facts&)> run;
};

bool iso_to_any(const Graph& g, const std::vector<FamilyDescriptor>& fs) {
    return std::any_of(fs.begin(), fs.end(), [&](const FamilyDescriptor& d) { return is_isomorphic(g, build(d)); });
}

const std::vector<Registered>& registry() {
    static const std::vector<Registered> checks = {
        {{"complement-diff", "all graphs", "|lambda(G) - lambda(complement G)| <= 1"},
         [](Facts& f) { return Verdict::check(std::abs(f.lam() - f.lam_c()) <= 1, f.values()); }},
        {{"global-bounds", "all graphs", "max(lambda, lambda_c) <= lambda_g <= min(lambda, lambda_c) + 1"},
         [](Facts& f) {
             const int lo = std::max(f.lam(), f.lam_c());
             const int hi = std::min(f.lam(), f.lam_c()) + 1;
             return Verdict::check(lo <= f.lam_g() && f.lam_g() <= hi, f.values());
         }},
        {{"global-symmetry", "all graphs", "lambda_g(G) = lambda_g(complement G)"},
         [](Facts& f) {
             return Verdict::check(f.lam_g() == f.lam_g_c(), f.values() + " lambda_g(c)=" + std::to_string(f.lam_g_c()));
         }},
        {{"global-plus-one-iff-no-global-code", "all graphs",
          "lambda_g = lambda + 1 iff every LD-code is non-global"},
         [](Facts& f) {
             const bool plus_one = f.lam_g() == f.lam() + 1;
             return Verdict::check(plus_one == !f.has_global(),
                                   f.values() + " has_global_code=" + std::to_string(f.has_global()));
         }},
        {{"diam5-global", "connected graphs with diameter >= 5", "lambda_g = lambda"},
         [](Facts& f) {
             if (!f.connected() || f.dist().diameter() < 5) return Verdict::skip();
             return Verdict::check(f.lam_g() == f.lam(), f.values());
         }},
        {{"plus-one-necessary", "graphs with lambda_c = lambda + 1",
          "connected, radius <= 2, diameter <= 4, max degree >= lambda"},
         [](Facts& f) {
             if (f.lam_c() != f.lam() + 1) return Verdict::skip();
             if (!f.connected()) return Verdict::fail(f.values() + " disconnected");
             const int rad = f.dist().radius();
             const int diam = f.dist().diameter();
             return Verdict::check(rad <= 2 && diam <= 4 && f.g.max_degree() >= f.lam(),
                                   f.values() + " rad=" + std::to_string(rad) + " diam=" + std::to_string(diam) +
                                       " maxdeg=" + std::to_string(f.g.max_degree()));
         }},
        {{"nonglobal-conditions", "graphs with a non-global LD-code",
          "for every non-global LD-code S with dominating u: ecc(u) <= 2, rad <= 2, diam <= 4, max degree >= |S|"},
         [](Facts& f) {
             if (f.nonglobal_codes().empty()) return Verdict::skip();
             for (VertexSet s : f.nonglobal_codes()) {
                 const NonGlobalConditions c = nonglobal_witness_conditions(f.g, s);
                 if (!c.all())
                     return Verdict::fail(f.values() + " S=" + s.to_string() + " u=" + std::to_string(c.dominating_vertex));
             }
             return Verdict::pass();
         }},
        {{"gamma-le-lambda", "all graphs", "gamma <= lambda"},
         [](Facts& f) {
             const int gam = gamma(f.g).value;
             return Verdict::check(gam <= f.lam(), f.values() + " gamma=" + std::to_string(gam));
         }},
        {{"lambda-additivity", "disconnected graphs", "lambda is the sum over connected components"},
         [](Facts& f) {
             if (f.connected()) return Verdict::skip();
             const int whole = lambda(f.g, {.count_optima = false, .split_components = false}).value;
             return Verdict::check(whole == f.lam(), f.values() + " whole_search=" + std::to_string(whole));
         }},
        {{"blockcactus-plus-one", "block-cactus of order >= 2",
          "lambda_c = lambda + 1 iff G matches a complement-plus-one template"},
         [](Facts& f) {
             if (!f.tags().is_block_cactus || f.g.order() < 2) return Verdict::skip();
             const bool predicted = predict_complement_plus_one(f.g);
             const bool exact = f.lam_c() == f.lam() + 1;
             return Verdict::check(predicted == exact, f.values() + " predicted=" + std::to_string(predicted));
         }},
        {{"blockcactus-lambda-g", "block-cactus",
          "lambda_g = lambda + 1 iff G matches a no-global-code template or a listed small exception"},
         [](Facts& f) {
             if (!f.tags().is_block_cactus) return Verdict::skip();
             const int predicted = predict_lambda_g(f.g, f.lam());
             return Verdict::check(predicted == f.lam_g(), f.values() + " predicted=" + std::to_string(predicted));
         }},
        {{"blockcactus-lambda2", "block-cactus with lambda = 2",
          "lambda_c >= lambda, with equality except for C3, paw, butterfly, banner complement"},
         [](Facts& f) {
             if (!f.tags().is_block_cactus || f.lam() != 2) return Verdict::skip();
             if (f.lam_c() < f.lam()) return Verdict::fail(f.values());
             try {
                 const ComplementRelation r = classify_lambda2_blockcactus(f.g);
                 return Verdict::check(r == relation_from(f.lam(), f.lam_c()),
                                       f.values() + " classified=" + std::string(to_string(r)));
             } catch (const InvariantError& e) {
                 return Verdict::fail(f.values() + " " + e.what());
             }
         }},
        {{"blockcactus-no-global-code", "block-cactus with lambda >= 3",
          "every LD-code is non-global iff G matches a no-global-code template"},
         [](Facts& f) {
             if (!f.tags().is_block_cactus || f.lam() < 3) return Verdict::skip();
             const bool matched = match_nonglobal_families(f.g, f.lam()).matched;
             return Verdict::check(matched == !f.has_global(), f.values() + " matched=" + std::to_string(matched));
         }},
        {{"nonglobal-structure", "block-cactus with a non-global LD-code",
          "structure around the dominating vertex holds for every non-global LD-code"},
         [](Facts& f) {
             if (!f.tags().is_block_cactus || f.nonglobal_codes().empty()) return Verdict::skip();
             for (VertexSet s : f.nonglobal_codes()) {
                 const StructureReport rep = validate_nonglobal_structure(f.g, s);
                 if (!rep.ok())
                     return Verdict::fail("S=" + s.to_string() + " u=" + std::to_string(rep.dominating_vertex) + " " +
                                          rep.violations.front().check + ": " + rep.violations.front().detail);
             }
             return Verdict::pass();
         }},
        {{"tree-corollary", "trees", "lambda_g = lambda unless P2 or P5; lambda_c <= lambda unless P2"},
         [](Facts& f) {
             if (!f.tags().is_tree) return Verdict::skip();
             const bool p2 = is_isomorphic(f.g, build(family::path(2)));
             const bool p5 = f.g.order() == 5 && is_isomorphic(f.g, build(family::path(5)));
             const bool ok = (p2 || p5 || f.lam_g() == f.lam()) && (p2 || f.lam_c() <= f.lam());
             return Verdict::check(ok, f.values());
         }},
        {{"unicyclic-corollary", "unicyclic graphs",
          "lambda_g = lambda outside {Fig6D, C3, C5, banner complement, paw, bull}; "
          "lambda_c <= lambda outside {C3, banner complement, paw}"},
         [](Facts& f) {
             if (!f.tags().is_unicyclic) return Verdict::skip();
             static const std::vector<FamilyDescriptor> global_exceptions = {
                 family::fig6d(), family::complete(3), family::cycle(5),
                 family::banner_complement(), family::paw(), family::bull()};
             static const std::vector<FamilyDescriptor> plus_one_exceptions = {
                 family::complete(3), family::banner_complement(), family::paw()};
             const bool ok = (iso_to_any(f.g, global_exceptions) || f.lam_g() == f.lam()) &&
                             (iso_to_any(f.g, plus_one_exceptions) || f.lam_c() <= f.lam());
             return Verdict::check(ok, f.values());
         }},
        {{"graph6-roundtrip", "all graphs", "parse(emit(G)) = G, and emit reproduces the corpus line"},
         [](Facts& f) {
             const std::string text = emit_graph6(f.g);
             const bool same_graph = parse_graph6(text) == f.g;
             const bool same_text = f.entry.source.empty() || text == f.entry.source;
             return Verdict::check(same_graph && same_text, "emitted " + text);
         }},
    };
    return checks;
}

void add_counterexample(CheckTally& t, Counterexample c, std::size_t cap) {
    auto pos = std::lower_bound(t.counterexamples.begin(), t.counterexamples.end(), c);
    t.counterexamples.insert(pos, std::move(c));
    if (t.counterexamples.size() > cap) t.counterexamples.resize(cap);
}

template <typename Map>
void add_counts(Map& into, const Map& from) {
    for (const auto& [k, v] : from) into[k] += v;
}

}  // namespace

const std::vector<CensusCheck>& census_checks() {
    static const std::vector<CensusCheck> metas = [] {
        std::vector<CensusCheck> out;
        for (const Registered& r : registry()) out.push_back(r.meta);
        return out;
    }();
    return metas;
}

const CensusCheck* find_census_check(std::string_view id) {
    for (const CensusCheck& c : census_checks())
        if (c.id == id) return &c;
    return nullptr;
}

std::uint64_t CensusReport::total_failures() const {
    std::uint64_t n = 0;
    for (const auto& [id, t] : checks) n += t.failed;
    return n;
}

void CensusReport::merge(const CensusReport& other) {
    for (const auto& [id, t] : other.checks) {
        CheckTally& mine = checks[id];
        mine.tested += t.tested;
        mine.passed += t.passed;
        mine.failed += t.failed;
        for (const Counterexample& c : t.counterexamples) add_counterexample(mine, c, max_counterexamples);
    }
    stats.graphs += other.stats.graphs;
    add_counts(stats.by_order, other.stats.by_order);
    add_counts(stats.by_lambda, other.stats.by_lambda);
    add_counts(stats.relations, other.stats.relations);
    stats.block_cactus += other.stats.block_cactus;
    add_counts(stats.block_cactus_relations_lambda_ge3, other.stats.block_cactus_relations_lambda_ge3);
    seconds += other.seconds;
    if (!aborted) aborted = other.aborted;
}

bool CensusReport::same_results(const CensusReport& other) const {
    return checks == other.checks && stats == other.stats && aborted == other.aborted;
}

void census_one(const CorpusEntry& entry, const std::vector<const CensusCheck*>& checks, CensusReport& report) {
    Facts f(entry);
    CensusStats& st = report.stats;
    ++st.graphs;
    ++st.by_order[f.g.order()];
    ++st.by_lambda[f.lam()];
    const std::string rel(to_string(relation_from(f.lam(), f.lam_c())));
    ++st.relations[rel];
    if (f.tags().is_block_cactus) {
        ++st.block_cactus;
        if (f.lam() >= 3) ++st.block_cactus_relations_lambda_ge3[rel];
    }

    for (const CensusCheck* meta : checks) {
        const auto& reg = registry();
        const auto it = std::find_if(reg.begin(), reg.end(), [&](const Registered& r) { return r.meta.id == meta->id; });
        Verdict v;
        try {
            v = it->run(f);
        } catch (const std::exception& e) {
            v = Verdict::fail(std::string("exception: ") + e.what());
        }
        if (v.kind == Verdict::Skip) continue;
        CheckTally& t = report.checks[meta->id];
        ++t.tested;
        if (v.kind == Verdict::Pass) {
            ++t.passed;
        } else {
            ++t.failed;
            add_counterexample(t, {f.g6(), v.detail}, report.max_counterexamples);
        }
    }
}

CensusReport run_census(const std::vector<CorpusEntry>& corpus, const CensusOptions& opts) {
    std::vector<const CensusCheck*> selected;
    if (opts.checks.empty()) {
        for (const CensusCheck& c : census_checks()) selected.push_back(&c);
    } else {
        for (const std::string& id : opts.checks) {
            const CensusCheck* c = find_census_check(id);
            if (c == nullptr) throw PreconditionError("unknown census check '" + id + "'");
            selected.push_back(c);
        }
    }

    const auto start = std::chrono::steady_clock::now();
    const int jobs = std::max(1, opts.jobs);
    std::vector<CensusReport> partial(static_cast<std::size_t>(jobs));
    for (CensusReport& p : partial) {
        p.max_counterexamples = opts.max_counterexamples;
        // Every selected check appears in the report, even with nothing tested.
        for (const CensusCheck* c : selected) p.checks[c->id];
    }
    std::atomic<std::size_t> next{0};
    const auto work = [&](CensusReport& out) {
        for (std::size_t i = next++; i < corpus.size(); i = next++) census_one(corpus[i], selected, out);
    };
    if (jobs == 1) {
        work(partial[0]);
    } else {
        std::vector<std::jthread> pool;
        for (CensusReport& p : partial) pool.emplace_back([&work, &p] { work(p); });
    }

    CensusReport report = std::move(partial[0]);
    for (std::size_t i = 1; i < partial.size(); ++i) report.merge(partial[i]);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace locdom
