#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "locdom/blockcactus.hpp"
#include "locdom/census.hpp"
#include "locdom/errors.hpp"
#include "locdom/family_spec.hpp"
#include "locdom/graph6.hpp"
#include "locdom/report_json.hpp"
#include "locdom/tables.hpp"

namespace locdom::cli {

namespace {

using nlohmann::json;

struct Input {
    Graph graph;
    std::optional<FamilyDescriptor> family;
};

Input resolve_input(const std::string& text) {
    if (looks_like_family_spec(text)) {
        FamilyDescriptor d = parse_family_spec(text);
        return {build(d), d};
    }
    return {parse_graph6(text), std::nullopt};
}

std::string join_list(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

std::string describe_input(const Input& in) {
    return in.family ? format_family_spec(*in.family) : emit_graph6(in.graph);
}

void print_row(std::ostream& out, const std::string& label, const std::string& value) {
    out << std::left << std::setw(26) << label << value << '\n';
}

int cmd_solve(const std::string& text, bool as_json, bool count, std::ostream& out) {
    const Input in = resolve_input(text);
    const Graph& g = in.graph;
    const Graph c = complement(g);
    const SolveOptions opts{.count_optima = count};
    const SolveResult lam = lambda(g, opts);
    const SolveResult lam_c = lambda(c, opts);
    const SolveResult lam_g = lambda_g(g, opts);
    const SolveResult gam = gamma(g, opts);
    const GlobalityReport glob = globality(g, lam.witness);
    const ComplementRelation rel = relation_from(lam.value, lam_c.value);
    const bool global_code = lam_g.value == lam.value;

    if (as_json) {
        json j = {{"schema", kJsonSchema},
                  {"input", describe_input(in)},
                  {"graph6", emit_graph6(g)},
                  {"order", g.order()},
                  {"edges", g.size()},
                  {"lambda", to_json(lam)},
                  {"lambda_complement", to_json(lam_c)},
                  {"lambda_global", to_json(lam_g)},
                  {"gamma", to_json(gam)},
                  {"witness_globality",
                   {{"is_global", glob.is_global},
                    {"dominating_vertex", glob.dominating_vertex ? json(*glob.dominating_vertex) : json(nullptr)}}},
                  {"has_global_ld_code", global_code},
                  {"relation", std::string(to_string(rel))}};
        out << j.dump(2) << '\n';
        return kOk;
    }
    const auto with_count = [](const SolveResult& r) {
        std::string s = std::to_string(r.value) + "  witness " + r.witness.to_string();
        if (r.optima_count) s += "  (" + std::to_string(*r.optima_count) + " optimal sets)";
        return s;
    };
    print_row(out, "input", describe_input(in));
    print_row(out, "graph6", emit_graph6(g));
    print_row(out, "order / edges", std::to_string(g.order()) + " / " + std::to_string(g.size()));
    print_row(out, "lambda", with_count(lam));
    print_row(out, "lambda(complement)", with_count(lam_c));
    print_row(out, "lambda_g", with_count(lam_g));
    print_row(out, "gamma", with_count(gam));
    print_row(out, "witness dominated by",
              glob.dominating_vertex ? std::to_string(*glob.dominating_vertex) : std::string("none (global)"));
    print_row(out, "global LD-code", global_code ? "yes" : "no");
    print_row(out, "relation", std::string(to_string(rel)));
    return kOk;
}

int cmd_classify(const std::string& text, bool as_json, std::ostream& out) {
    const Input in = resolve_input(text);
    const Graph& g = in.graph;
    const HierarchyTags tags = hierarchy(g);
    json j = {{"schema", kJsonSchema},
              {"input", describe_input(in)},
              {"graph6", emit_graph6(g)},
              {"order", g.order()},
              {"hierarchy", to_json(tags)}};
    bool agrees = true;
    if (tags.is_block_cactus) {
        const int lam = lambda(g).value;
        const int lam_c = lambda(complement(g)).value;
        const int lam_g = lambda_g(g).value;
        const ComplementRelation rel = relation_from(lam, lam_c);
        j["exact"] = {{"lambda", lam},
                      {"lambda_complement", lam_c},
                      {"lambda_global", lam_g},
                      {"relation", std::string(to_string(rel))}};
        const int pred_g = predict_lambda_g(g, lam);
        json pred = {{"lambda_global", pred_g}};
        agrees = agrees && pred_g == lam_g;
        if (g.order() >= 2) {
            const FamilyMatch plus = recognize_complement_plus_one_templates(g);
            pred["complement_plus_one"] = plus.matched;
            j["complement_plus_one_match"] = to_json(plus);
            agrees = agrees && plus.matched == (rel == ComplementRelation::PlusOne);
        }
        if (lam >= 3) {
            const FamilyMatch ng = match_nonglobal_families(g, lam);
            pred["no_global_ld_code"] = ng.matched;
            j["no_global_code_match"] = to_json(ng);
            agrees = agrees && ng.matched == (lam_g == lam + 1);
        }
        if (lam == 2) {
            try {
                pred["lambda2_relation"] = std::string(to_string(classify_lambda2_blockcactus(g)));
            } catch (const InvariantError& e) {
                pred["lambda2_relation"] = std::string("falsified: ") + e.what();
                agrees = false;
            }
        }
        j["predicted"] = pred;
    }
    j["agrees"] = agrees;

    if (as_json) {
        out << j.dump(2) << '\n';
    } else {
        print_row(out, "input", describe_input(in));
        print_row(out, "graph6", emit_graph6(g));
        std::string shapes;
        for (BlockShape s : tags.block_shapes) shapes += (shapes.empty() ? "" : " ") + std::string(to_string(s));
        print_row(out, "blocks", shapes);
        std::string flags;
        const auto flag = [&](bool on, const char* name) {
            if (on) flags += (flags.empty() ? "" : " ") + std::string(name);
        };
        flag(tags.is_tree, "tree");
        flag(tags.is_unicyclic, "unicyclic");
        flag(tags.is_cactus, "cactus");
        flag(tags.is_block_graph, "block-graph");
        flag(tags.is_block_cactus, "block-cactus");
        print_row(out, "hierarchy", flags.empty() ? "-" : flags);
        if (j.contains("exact")) {
            const json& e = j["exact"];
            print_row(out, "exact", "lambda=" + e["lambda"].dump() + " lambda_c=" + e["lambda_complement"].dump() +
                                        " lambda_g=" + e["lambda_global"].dump() + " " +
                                        e["relation"].get<std::string>());
            for (const char* key : {"complement_plus_one_match", "no_global_code_match"}) {
                if (!j.contains(key)) continue;
                const json& m = j[key];
                print_row(out, key, m["matched"].get<bool>() ? m["template"]["spec"].get<std::string>() : "no match");
            }
            print_row(out, "predicted", j["predicted"].dump());
            print_row(out, "agrees", agrees ? "yes" : "NO");
        } else {
            print_row(out, "predictions", "none (not a block-cactus)");
        }
    }
    return agrees ? kOk : kCheckFailed;
}

struct CensusArgs {
    std::string input;
    std::string checks;
    int jobs = 1;
    std::size_t max_counterexamples = 10;
    int min_n = 1;
    int max_n = kMaxVertices;
};

void print_census_text(const CensusReport& r, std::ostream& out) {
    out << "graphs " << r.stats.graphs << "  failures " << r.total_failures() << "  seconds " << std::fixed
        << std::setprecision(2) << r.seconds << std::defaultfloat << '\n';
    out << std::left << std::setw(38) << "check" << std::right << std::setw(9) << "tested" << std::setw(9) << "passed"
        << std::setw(9) << "failed" << '\n';
    for (const CensusCheck& meta : census_checks()) {
        const auto it = r.checks.find(meta.id);
        if (it == r.checks.end()) continue;
        const CheckTally& t = it->second;
        out << std::left << std::setw(38) << meta.id << std::right << std::setw(9) << t.tested << std::setw(9)
            << t.passed << std::setw(9) << t.failed << '\n';
        for (const Counterexample& c : t.counterexamples) out << "    " << c.graph6 << "  " << c.detail << '\n';
    }
    out << "lambda histogram:";
    for (const auto& [k, v] : r.stats.by_lambda) out << ' ' << k << ':' << v;
    out << "\nrelations:";
    for (const auto& [k, v] : r.stats.relations) out << ' ' << k << ':' << v;
    out << "\nblock-cactus " << r.stats.block_cactus << ", lambda>=3 relations:";
    for (const auto& [k, v] : r.stats.block_cactus_relations_lambda_ge3) out << ' ' << k << ':' << v;
    out << '\n';
    if (r.aborted) out << "ABORTED: " << *r.aborted << '\n';
}

int cmd_census(const CensusArgs& a, bool as_json, std::ostream& out, std::ostream& err) {
    std::ifstream file(a.input);
    if (!file) {
        err << "cannot open corpus '" << a.input << "'\n";
        return kUsage;
    }
    CensusOptions opts;
    opts.jobs = a.jobs;
    opts.max_counterexamples = a.max_counterexamples;
    std::stringstream ids(a.checks);
    for (std::string id; std::getline(ids, id, ',');)
        if (!id.empty()) opts.checks.push_back(id);

    std::vector<CorpusEntry> corpus;
    std::optional<std::string> aborted;
    Graph6Reader reader(file);
    try {
        while (auto e = reader.next())
            if (e->graph.order() >= a.min_n && e->graph.order() <= a.max_n)
                corpus.push_back({std::move(e->graph), std::move(e->line)});
    } catch (const ParseError& e) {
        aborted = e.what();
    }

    CensusReport report = run_census(corpus, opts);
    report.aborted = aborted;
    if (as_json) out << to_json(report, true).dump(2) << '\n';
    else print_census_text(report, out);
    if (aborted) {
        err << "corpus read aborted: " << *aborted << '\n';
        return kUsage;
    }
    return report.total_failures() == 0 ? kOk : kCheckFailed;
}

int cmd_family(const std::string& spec, bool emit, bool as_json, std::ostream& out) {
    const FamilyDescriptor d = parse_family_spec(spec);
    const Graph g = build(d);
    std::optional<FormulaTriple> f;
    try {
        f = formula(d);
    } catch (const UnsupportedError&) {
    }
    if (as_json) {
        json edges = json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        json j = {{"schema", kJsonSchema}, {"family", to_json(d)}, {"order", g.order()}, {"edges", edges}};
        if (f) j["formula"] = to_json(*f);
        if (emit) j["graph6"] = emit_graph6(g);
        out << j.dump(2) << '\n';
        return kOk;
    }
    if (emit) {
        out << emit_graph6(g) << '\n';
        return kOk;
    }
    print_row(out, "family", std::string(to_string(d.tag)) + " " + format_family_spec(d));
    print_row(out, "order / edges", std::to_string(g.order()) + " / " + std::to_string(g.size()));
    std::string edges;
    for (auto [u, v] : g.edges()) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
    print_row(out, "edges", edges);
    if (f)
        print_row(out, "formula", "lambda=" + std::to_string(*f->lambda) + " lambda_c=" +
                                      std::to_string(*f->lambda_complement) + " lambda_g=" +
                                      std::to_string(*f->lambda_global));
    return kOk;
}

int cmd_tables(bool as_json, std::ostream& out) {
    const std::vector<TableRow> rows = reproduce_tables();
    bool all_agree = true;
    for (const TableRow& r : rows) all_agree = all_agree && r.agrees;
    if (as_json) {
        json arr = json::array();
        for (const TableRow& r : rows) arr.push_back(to_json(r));
        out << json{{"schema", kJsonSchema}, {"rows", arr}, {"disagreements", !all_agree}}.dump(2) << '\n';
    } else {
        out << std::left << std::setw(9) << "table" << std::setw(12) << "family" << std::right << std::setw(4) << "n"
            << std::setw(16) << "expected" << std::setw(16) << "exact" << std::setw(11) << "lg(compl)" << "  flag\n";
        for (const TableRow& r : rows) {
            const std::string expected =
                join_list({*r.expected.lambda, *r.expected.lambda_complement, *r.expected.lambda_global});
            const std::string exact = join_list({r.lambda, r.lambda_complement, r.lambda_global});
            out << std::left << std::setw(9) << r.table << std::setw(12) << format_family_spec(r.family) << std::right
                << std::setw(4) << r.order << std::setw(16) << expected << std::setw(16) << exact << std::setw(11)
                << r.lambda_global_of_complement << "  " << (r.agrees ? "ok" : "DISAGREE") << '\n';
        }
    }
    return all_agree ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Location-domination invariants of small graphs", "locdom"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string solve_input;
    bool solve_count = false;
    auto* solve = app.add_subcommand("solve", "lambda, lambda of the complement, lambda_g and witnesses");
    solve->add_option("graph", solve_input, "graph6 string or family spec (e.g. P:5, F8d:2,2)")->required();
    solve->add_flag("--count", solve_count, "Also count optimal sets");

    std::string classify_input;
    auto* classify = app.add_subcommand("classify", "block-cactus tags, template matches, predicted vs exact");
    classify->add_option("graph", classify_input, "graph6 string or family spec")->required();

    CensusArgs census_args;
    auto* census = app.add_subcommand("census", "check every property across a graph6 corpus");
    census->add_option("--input", census_args.input, "graph6 file, one graph per line")->required();
    census->add_option("--checks", census_args.checks, "Comma-separated check ids (default: all)");
    census->add_option("--jobs", census_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
    census->add_option("--max-counterexamples", census_args.max_counterexamples, "Counterexamples kept per check");
    census->add_option("--min-n", census_args.min_n, "Skip graphs of smaller order");
    census->add_option("--max-n", census_args.max_n, "Skip graphs of larger order");

    std::string family_spec;
    bool emit_g6 = false;
    auto* fam = app.add_subcommand("family", "build a named family instance");
    fam->add_option("--spec", family_spec, "Family spec")->required();
    fam->add_flag("--emit-g6", emit_g6, "Print the graph6 encoding");

    auto* tables = app.add_subcommand("tables", "recompute the family value tables and compare with the formulas");
    auto* checks = app.add_subcommand("checks", "list census check ids");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    const bool as_json = format == "json";
    try {
        configure_vertex_limit_from_env();
        if (solve->parsed()) return cmd_solve(solve_input, as_json, solve_count, out);
        if (classify->parsed()) return cmd_classify(classify_input, as_json, out);
        if (census->parsed()) return cmd_census(census_args, as_json, out, err);
        if (fam->parsed()) return cmd_family(family_spec, emit_g6, as_json, out);
        if (tables->parsed()) return cmd_tables(as_json, out);
        if (checks->parsed()) {
            for (const CensusCheck& c : census_checks())
                out << std::left << std::setw(38) << c.id << c.scope << ": " << c.claim << '\n';
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace locdom::cli
