#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "akh/braid.hpp"

using namespace akh;

TEST_CASE("inline syntax round-trips") {
    BraidWord b = parse_braid("3:-1,2,-1,2");
    CHECK(b.strands == 3);
    CHECK(b.letters == std::vector<int>{-1, 2, -1, 2});
    CHECK(to_text(b) == "3:-1,2,-1,2");
    CHECK(parse_braid(to_text(b)) == b);

    BraidWord unknot = parse_braid("1:");
    CHECK(unknot.strands == 1);
    CHECK(unknot.letters.empty());
    CHECK(to_text(unknot) == "1:");
    CHECK(parse_braid("2:") == BraidWord{2, {}});
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_braid("2:9"), ParseError);     // letter out of range
    CHECK_THROWS_AS(parse_braid("2:0"), ParseError);     // zero letter
    CHECK_THROWS_AS(parse_braid("1:1"), ParseError);     // no room on one strand
    CHECK_THROWS_AS(parse_braid("0:"), ParseError);      // no strands
    CHECK_THROWS_AS(parse_braid("-2:1"), ParseError);
    CHECK_THROWS_AS(parse_braid("2:1,,1"), ParseError);
    CHECK_THROWS_AS(parse_braid("2:1,"), ParseError);
    CHECK_THROWS_AS(parse_braid("not_a_knot"), ParseError);
    CHECK_THROWS_AS(parse_braid(""), ParseError);
    CHECK_THROWS_AS(parse_braid("3_1 "), ParseError);
    CHECK_THROWS_AS(parse_braid("2:1 ,1"), ParseError);
}

TEST_CASE("named table") {
    CHECK(parse_braid("3_1") == parse_braid("2:-1,-1,-1"));
    CHECK(parse_braid("4_1") == parse_braid("3:-1,2,-1,2"));
    CHECK(parse_braid("8_12a") == parse_braid("5:-1,2,-1,-3,2,4,-3,4"));
    CHECK(parse_braid("8_12b") == parse_braid("5:-1,2,-3,4,-3,4,-2,-1,3,2"));
    CHECK(named_braids().size() == 4);
}

TEST_CASE("stabilization appends one letter per sign") {
    BraidWord t = parse_braid("2:-1,-1,-1");
    BraidWord s = stabilize(t, {-1, 1});
    CHECK(s.strands == 4);
    CHECK(s.letters == std::vector<int>{-1, -1, -1, -2, 3});

    BraidWord unknot = parse_braid("1:");
    BraidWord u = stabilize(unknot, {-1, -1, 1, -1});
    CHECK(u.strands == 5);
    CHECK(u.letters == std::vector<int>{-1, -2, 3, -4});

    CHECK(stabilize(t, {}) == t);
    CHECK_THROWS_AS(stabilize(t, {2}), ParseError);
    CHECK_THROWS_AS(stabilize(t, {0}), ParseError);
}

TEST_CASE("crossing counts and writhe") {
    CrossingCounts c = crossing_counts(parse_braid("5:-1,2,-1,-3,2,4,-3,4"));
    CHECK(c.positive == 4);
    CHECK(c.negative == 4);
    CHECK(c.total() == 8);
    CHECK(c.writhe() == 0);
    CHECK(crossing_counts(parse_braid("3_1")).negative == 3);
}

TEST_CASE("closure components") {
    CHECK(closure_components(parse_braid("3_1")) == 1);       // trefoil is a knot
    CHECK(closure_components(parse_braid("4_1")) == 1);
    CHECK(closure_components(parse_braid("2:")) == 2);        // 2-strand identity: unlink
    CHECK(closure_components(parse_braid("1:")) == 1);
    CHECK(closure_components(parse_braid("2:-1,-1")) == 2);   // Hopf link
    CHECK(closure_components(parse_braid("8_12a")) == 1);
    CHECK(closure_components(parse_braid("8_12b")) == 1);
}

TEST_CASE("mirror negates letters") {
    BraidWord m = mirror(parse_braid("3:-1,2,-1,2"));
    CHECK(m == parse_braid("3:1,-2,1,-2"));
    CHECK(mirror(m) == parse_braid("4_1"));
}

TEST_CASE("validate") {
    CHECK_NOTHROW(validate(BraidWord{2, {1, -1}}));
    CHECK_THROWS_AS(validate(BraidWord{2, {2}}), ParseError);
    CHECK_THROWS_AS(validate(BraidWord{0, {}}), ParseError);
}
