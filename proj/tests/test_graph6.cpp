#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/graph6.hpp"
#include "oracle.hpp"

using namespace locdom;

TEST_CASE("reference encodings") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(build(family::complete(2))) == "A_");
    CHECK(emit_graph6(Graph(2)) == "A?");
    CHECK(emit_graph6(build(family::complete(3))) == "Bw");
    CHECK(emit_graph6(build(family::path(5))) == "DhC");
    CHECK(parse_graph6("Bw") == build(family::complete(3)));
}

TEST_CASE("malformed input") {
    auto offset_of = [](const char* s) {
        try {
            parse_graph6(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);     // n = 0
    CHECK_THROWS_AS(parse_graph6("Bw?"), ParseError);   // too long
    CHECK_THROWS_AS(parse_graph6("D"), ParseError);     // too short
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);    // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~?@?"), ParseError);
    CHECK(offset_of("D h") == 1);
    CHECK_THROWS_AS(emit_graph6(Graph(63)), UnsupportedError);
}

TEST_CASE("reader skips blanks and the header, and reports line numbers") {
    std::istringstream in(">>graph6<<Bw\n\nA_\nDhx\n");
    Graph6Reader r(in);
    auto a = r.next();
    REQUIRE(a);
    CHECK(a->line == "Bw");
    CHECK(a->line_number == 1);
    auto b = r.next();
    REQUIRE(b);
    CHECK(b->line_number == 3);
    try {
        r.next();
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("random round trip") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const std::string s = emit_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(emit_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("committed corpora round trip") {
    for (const char* name : {"graphs_n1-7.g6", "connected_n1-7.g6"}) {
        std::ifstream file(std::string(LOCDOM_CORPUS_DIR) + "/" + name);
        REQUIRE(file);
        Graph6Reader r(file);
        std::size_t count = 0;
        while (auto e = r.next()) {
            ++count;
            CHECK(emit_graph6(e->graph) == e->line);
        }
        CHECK(count == (std::string(name).starts_with("graphs") ? 1252u : 996u));
    }
}
