#include <doctest.h>

#include <algorithm>
#include <random>

#include "locdom/vertex_set.hpp"

using locdom::VertexSet;

TEST_CASE("basic set operations") {
    VertexSet a{0, 2, 5};
    VertexSet b{2, 3};
    CHECK(a.size() == 3);
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(1));
    CHECK((a & b) == VertexSet{2});
    CHECK((a | b) == VertexSet{0, 2, 3, 5});
    CHECK((a - b) == VertexSet{0, 5});
    CHECK((a ^ b) == VertexSet{0, 3, 5});
    CHECK(VertexSet{2}.is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK(a.front() == 0);
    CHECK(a.back() == 5);
    CHECK(a.with(1).without(0) == VertexSet{1, 2, 5});
    CHECK(a.to_string() == "{0,2,5}");
    CHECK(VertexSet{}.to_string() == "{}");
    CHECK(VertexSet::prefix(4) == VertexSet{0, 1, 2, 3});
    CHECK(VertexSet::prefix(64).size() == 64);
    CHECK(VertexSet::singleton(63).contains(63));
}

TEST_CASE("iteration yields ascending vertices") {
    VertexSet s{7, 1, 40, 63};
    CHECK(s.to_vector() == std::vector<int>{1, 7, 40, 63});
    std::vector<int> seen;
    for (int v : s) seen.push_back(v);
    CHECK(seen == s.to_vector());
}

TEST_CASE("lex order compares sorted sequences") {
    CHECK(locdom::lex_less(VertexSet{0, 3}, VertexSet{1, 2}));
    CHECK(locdom::lex_less(VertexSet{0}, VertexSet{0, 1}));
    CHECK_FALSE(locdom::lex_less(VertexSet{1, 2}, VertexSet{0, 3}));
    CHECK_FALSE(locdom::lex_less(VertexSet{0, 3}, VertexSet{0, 3}));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        VertexSet a(rng() & 0xffff), b(rng() & 0xffff);
        CHECK(locdom::lex_less(a, b) == (a.to_vector() < b.to_vector()));
    }
}
