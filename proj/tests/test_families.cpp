#include <doctest.h>

#include "locdom/blockcactus.hpp"
#include "locdom/errors.hpp"
#include "locdom/families.hpp"
#include "locdom/solver.hpp"
#include "oracle.hpp"

using namespace locdom;

namespace {

std::vector<Edge> edges_of(const FamilyDescriptor& d) { return build(d).edges(); }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

TEST_CASE("vertex numbering of the named graphs") {
    CHECK(edges_of(family::path(3)) == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(edges_of(family::cycle(4)) == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(build(family::wheel(5)).degree(4) == 4);
    CHECK(build(family::star(5)).degree(4) == 4);
    CHECK(edges_of(family::paw()) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(edges_of(family::bull()) == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}});
    CHECK(edges_of(family::banner()) == std::vector<Edge>{{0, 1}, {0, 3}, {0, 4}, {1, 2}, {2, 3}});
    CHECK(edges_of(family::banner_complement()) == std::vector<Edge>{{0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(edges_of(family::butterfly()) == std::vector<Edge>{{0, 1}, {0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(edges_of(family::corner()) == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {3, 5}});
}

TEST_CASE("constructions match their definitions up to isomorphism") {
    CHECK(is_isomorphic(build(family::banner_complement()), complement(build(family::banner()))));
    CHECK(is_isomorphic(build(family::wheel(7)), join(Graph(1), build(family::cycle(6)))));
    CHECK(is_isomorphic(build(family::complete_bipartite(2, 3)), join(Graph(2), Graph(3))));
    CHECK(is_isomorphic(build(family::fig8a(3)), join(Graph(1), disjoint_union(Graph(1), build(family::complete(3))))));
    CHECK(is_isomorphic(build(family::fig8d({2, 3})),
                        join(Graph(1), disjoint_union(build(family::complete(2)), build(family::complete(3))))));
    CHECK(is_isomorphic(build(family::fig8c(4)), build(family::complete(5))));
    // Small members coincide with the named graphs.
    CHECK(is_isomorphic(build(family::fig8a(2)), build(family::paw())));
    CHECK(is_isomorphic(build(family::fig8b(2)), build(family::banner_complement())));
    CHECK(is_isomorphic(build(family::fig8d({2, 2})), build(family::butterfly())));
    CHECK(build(family::bi_star(2, 3)).degree_sequence() == std::vector<int>{1, 1, 1, 1, 1, 3, 4});
}

TEST_CASE("corner and the graphs built from it") {
    const Graph l = build(family::corner());
    CHECK(l.degree_sequence() == std::vector<int>{1, 1, 2, 2, 3, 3});
    CHECK(is_block_cactus(l));
    const Graph d = build(family::fig6d());
    CHECK(d.order() == 8);
    CHECK(is_block_cactus(d));
    // The unique LD-code of Fig6D is N(u) where u is the corner vertex carrying the path.
    const auto codes = enumerate_ld_codes(d);
    REQUIRE(codes.size() == 1);
    CHECK(lambda(d).value == 3);
    CHECK(lambda(complement(d)).value == 3);
    CHECK(dominating_vertex(d, codes[0]).has_value());

    const Graph e = build(family::fig6e({2}, 1));
    CHECK(e.order() == 8);
    CHECK(is_block_cactus(e));
    CHECK(family_order(family::fig6e({2, 3}, 2)) == 1 + 5 + 10);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(family::bi_star(1, 2)), PreconditionError);
    CHECK_THROWS_AS(validate(family::fig8a(1)), PreconditionError);
    CHECK_THROWS_AS(validate(family::fig8c(0)), PreconditionError);
    CHECK_THROWS_AS(validate(family::fig8d({2})), PreconditionError);
    CHECK_THROWS_AS(validate(family::fig8d({2, 1})), PreconditionError);
    CHECK_THROWS_AS(validate(family::fig6e({2}, 0)), PreconditionError);
    CHECK_THROWS_AS(validate(family::cycle(2)), PreconditionError);
    CHECK_THROWS_AS(validate(family::wheel(3)), PreconditionError);
    CHECK_THROWS_AS(build(family::path(0)), PreconditionError);
    CHECK_NOTHROW(validate(family::fig6e({}, 2)));
}

TEST_CASE("small-order table entries are exact") {
    for (const SmallOrderEntry& e : small_order_table()) {
        const Graph g = build(e.family);
        const auto m = oracle::matrix(g);
        CHECK(oracle::lambda(m).value == e.lambda);
        CHECK(oracle::lambda(oracle::complement(m)).value == e.lambda_complement);
        CHECK(oracle::lambda_g(m).value == e.lambda_global);
    }
}

TEST_CASE("formulas") {
    const FormulaTriple p = formula(family::path(10));
    CHECK(p.lambda == ceil_div(20, 5));
    CHECK(p.lambda_complement == ceil_div(18, 5));
    CHECK(p.lambda_global == ceil_div(20, 5));
    const FormulaTriple w = formula(family::wheel(9));
    CHECK(w.lambda == ceil_div(16, 5));
    CHECK(w.lambda_complement == ceil_div(19, 5));
    CHECK(formula(family::complete(5)) == FormulaTriple{4, 5, 5});
    CHECK(formula(family::star(6)) == FormulaTriple{5, 5, 5});
    CHECK(formula(family::complete_bipartite(3, 4)) == FormulaTriple{5, 5, 5});
    CHECK(formula(family::bi_star(2, 3)) == FormulaTriple{5, 4, 5});
    CHECK(formula(family::path(5)) == FormulaTriple{2, 2, 3});
    CHECK_THROWS_AS(formula(family::paw()), UnsupportedError);
}

TEST_CASE("complement of a path or cycle against a shorter path") {
    for (int n = 7; n <= 11; ++n) {
        const auto [p, c, q] = lambda_complement_path_cycle_identity(n);
        CHECK(p == q);
        CHECK(c == q);
    }
    CHECK_THROWS_AS(lambda_complement_path_cycle_identity(6), UnsupportedError);
}
