#include <doctest.h>

#include "locdom/errors.hpp"
#include "locdom/family_spec.hpp"

using namespace locdom;

TEST_CASE("parsing") {
    CHECK(parse_family_spec("P:5") == family::path(5));
    CHECK(parse_family_spec("C:6") == family::cycle(6));
    CHECK(parse_family_spec("Kb:2,3") == family::complete_bipartite(2, 3));
    CHECK(parse_family_spec("B2:2,4") == family::bi_star(2, 4));
    CHECK(parse_family_spec("F8a:4") == family::fig8a(4));
    CHECK_THROWS_AS(parse_family_spec("F8a:r=3"), ParseError);
    CHECK(parse_family_spec("paw") == family::paw());
    CHECK(parse_family_spec("F8d:2,2") == family::fig8d({2, 2}));
    CHECK(parse_family_spec("F6e:t=2,r=2,3;tp=1") == family::fig6e({2, 3}, 1));
    CHECK(parse_family_spec("F6d") == family::fig6d());
}

TEST_CASE("format is the inverse of parse") {
    for (const char* s : {"P:5", "C:7", "W:6", "K:4", "S:5", "Kb:2,3", "B2:2,4", "paw", "bull", "banner", "cobanner",
                          "butterfly", "corner", "F8a:3", "F8b:2", "F8c:1", "F8d:2,3", "F6d", "F6e:t=2,r=2,3;tp=1",
                          "F6e:t=0;tp=2"}) {
        CAPTURE(s);
        const FamilyDescriptor d = parse_family_spec(s);
        CHECK(parse_family_spec(format_family_spec(d)) == d);
    }
}

TEST_CASE("errors name the offending token") {
    auto offset_of = [](const char* s) {
        try {
            parse_family_spec(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1L;
    };
    CHECK(offset_of("Q:3") == 0);
    CHECK(offset_of("P:x") == 2);
    CHECK(offset_of("P:5,z=1") == 4);
    CHECK_THROWS_AS(parse_family_spec(""), ParseError);
    CHECK_THROWS_AS(parse_family_spec("F8d:2"), PreconditionError);
}

TEST_CASE("graph6 strings are not mistaken for specs") {
    CHECK(looks_like_family_spec("P:5"));
    CHECK(looks_like_family_spec("butterfly"));
    CHECK_FALSE(looks_like_family_spec("D`{"));
    CHECK_FALSE(looks_like_family_spec("F~_Q?"));
}
