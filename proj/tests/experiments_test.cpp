#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <set>
#include <string>

#include "akh/experiments.hpp"

using namespace akh;

TEST_CASE("det_uniform is deterministic and in range") {
    std::mt19937_64 a(42), b(42);
    for (int x = 0; x < 1000; ++x) CHECK(det_uniform(a, 3, 17) == det_uniform(b, 3, 17));

    std::mt19937_64 rng(7);
    std::set<std::uint64_t> seen;
    for (int x = 0; x < 2000; ++x) {
        std::uint64_t v = det_uniform(rng, 5, 7);
        CHECK(v >= 5);
        CHECK(v <= 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 3);  // all values hit
    CHECK(det_uniform(rng, 9, 9) == 9);
    CHECK_NOTHROW(det_uniform(rng, 0, std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("random_braid stays in bounds") {
    std::mt19937_64 rng(123);
    std::set<int> strand_counts;
    for (int x = 0; x < 500; ++x) {
        BraidWord b = random_braid(rng, 2, 4, 6);
        CHECK_NOTHROW(validate(b));
        CHECK(b.strands >= 2);
        CHECK(b.strands <= 4);
        CHECK(b.letters.size() >= 1);
        CHECK(b.letters.size() <= 6);
        strand_counts.insert(b.strands);
    }
    CHECK(strand_counts.size() == 3);

    std::mt19937_64 c(9), d(9);
    for (int x = 0; x < 50; ++x) CHECK(random_braid(c, 2, 4, 6) == random_braid(d, 2, 4, 6));
}

TEST_CASE("conjecture1 enumerates all short sign sequences") {
    ExperimentReport r = conjecture1_scan(2, 1);
    REQUIRE(r.cases.size() == 7);
    CHECK(r.summary == "7/7 cases consistent with W0 = z^(-sum) (q z + 1/(q z))");
    // binary enumeration order: length, then sign mask (bit x = eps_(x+1), set = +1)
    CHECK(r.cases[0].input == "1:");
    CHECK(r.cases[1].input == "2:-1");
    CHECK(r.cases[2].input == "2:1");
    CHECK(r.cases[3].input == "3:-2,-1");
    CHECK(r.cases[4].input == "3:-2,1");
    CHECK(r.cases[5].input == "3:2,-1");
    CHECK(r.cases[6].input == "3:2,1");
    for (const ExperimentCase& c : r.cases) {
        CHECK(c.verdict == "consistent");
        CHECK(c.computed == c.expected);
        CHECK(!c.expected.empty());
    }
    CHECK(r.cases[0].expected == "1/(q z)+q z");

    ExperimentReport r3 = conjecture1_scan(3, 1);
    CHECK(r3.cases.size() == 15);
    CHECK(render_report(r3) == render_report(conjecture1_scan(3, 1)));
}

TEST_CASE("conjecture1 samples 256 distinct sequences when the count overflows") {
    ExperimentReport r = conjecture1_scan(8, 2026);
    REQUIRE(r.cases.size() == 256);
    std::set<std::string> inputs;
    for (const ExperimentCase& c : r.cases) {
        inputs.insert(c.input);
        CHECK(c.verdict == "consistent");
    }
    CHECK(inputs.size() == 256);
    CHECK(r.summary == "256/256 cases consistent with W0 = z^(-sum) (q z + 1/(q z))");
}

TEST_CASE("conjecture1 respects the crossing limit") {
    CHECK_THROWS_AS(conjecture1_scan(25, 1), LimitError);
    CHECK_THROWS_AS(conjecture1_scan(10, 1, 8), LimitError);
}

TEST_CASE("conjecture2 scan is deterministic") {
    ExperimentReport a = conjecture2_scan(8, 4, 6, 3);
    ExperimentReport b = conjecture2_scan(8, 4, 6, 3);
    REQUIRE(a.cases.size() == 8);
    CHECK(a.seed == 3);
    CHECK(render_report(a) == render_report(b));
    for (const ExperimentCase& c : a.cases) {
        CHECK((c.verdict == "consistent" || c.verdict == "counterexample"));
        CHECK(c.expected == "W_k = 0 for k >= 2");
    }
    ExperimentReport other = conjecture2_scan(8, 4, 6, 4);
    CHECK(render_report(a) != render_report(other));  // seed matters
}

TEST_CASE("separation of a braid from itself is trivial") {
    BraidWord b = parse_braid("4_1");
    SeparationReport r = separate_pair(b, b);
    CHECK(r.e_equal);
    CHECK(r.a_only == 0);
    CHECK(r.b_only == 0);
    CHECK(r.z_shift_only);
    CHECK(r.z1_equal);
    CHECK(r.diff.is_zero());
    std::string text = render_separation(r);
    CHECK(text.find("E-polynomials: identical\n") != std::string::npos);
    CHECK(text.find("equal at z=1: yes") != std::string::npos);
}

TEST_CASE("separation detects chirality") {
    BraidWord b = parse_braid("3_1");
    SeparationReport r = separate_pair(b, mirror(b));
    CHECK(!r.e_equal);
    CHECK(!r.z1_equal);  // Khovanov homology distinguishes the trefoil from its mirror
}

TEST_CASE("the 8_12 pair differs only by an annular regrading") {
    SeparationReport r = separate_pair(parse_braid("8_12a"), parse_braid("8_12b"));
    CHECK(!r.e_equal);
    CHECK(r.a_only == 4);
    CHECK(r.b_only == 4);
    CHECK(r.z_shift_only);
    CHECK(r.z1_equal);
    CHECK(r.diff.term_count() == 8);
    // the slots where the two differ: (t,q) = +-(3,5) and +-(4,9)
    std::set<std::pair<int, int>> slots;
    for (const auto& [e, c] : r.diff.terms()) slots.insert({e.t, e.q});
    CHECK(slots == std::set<std::pair<int, int>>{{-4, -9}, {-3, -5}, {3, 5}, {4, 9}});
    std::string text = render_separation(r);
    CHECK(text.find("E-polynomials: differ (4 monomials only in first, 4 only in second)\n") !=
          std::string::npos);
    CHECK(text.find("z-regrading only: yes\n") != std::string::npos);
    CHECK(text.find("equal at z=1: yes\n") != std::string::npos);
}

TEST_CASE("report rendering shape") {
    ExperimentReport r = conjecture1_scan(1, 9);
    std::string text = render_report(r);
    CHECK(text.find("experiment conjecture1 (seed 9)\n") == 0);
    CHECK(text.find("  case 1: 1:\n") != std::string::npos);
    CHECK(text.find("    verdict:  consistent") != std::string::npos);
    CHECK(text.ends_with("summary: 3/3 cases consistent with W0 = z^(-sum) (q z + 1/(q z))\n"));
}
