#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "akh/cube.hpp"

using namespace akh;

namespace {

std::vector<int> nodes_of_cycle(const SmoothedDiagram& d, int cycle) {
    std::vector<int> out;
    for (std::size_t n = 0; n < d.cycle_of_node.size(); ++n)
        if (d.cycle_of_node[n] == cycle) out.push_back(static_cast<int>(n));
    return out;
}

}  // namespace

TEST_CASE("vertex bits are MSB-first") {
    Vertex v{0b110, 3};
    CHECK(v.bit(0) == 1);
    CHECK(v.bit(1) == 1);
    CHECK(v.bit(2) == 0);
    CHECK(v.weight() == 2);
    CHECK(Vertex{0, 4}.weight() == 0);
}

TEST_CASE("closure of the trivial braid") {
    BraidWord unknot = parse_braid("1:");
    SmoothedDiagram d = resolve_vertex(unknot, Vertex{0, 0});
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.cycles[0].nontrivial);
    CHECK(d.cycles[0].depth == 1);
    CHECK(d.cycles[0].closure_positions == std::vector<int>{1});

    SmoothedDiagram two = resolve_vertex(parse_braid("2:"), Vertex{0, 0});
    REQUIRE(two.cycles.size() == 2);
    CHECK(two.cycles[0].depth == 1);
    CHECK(two.cycles[1].depth == 2);
    CHECK(two.nontrivial_count() == 2);
}

TEST_CASE("positive and negative letters smooth oppositely at bit 0") {
    // bit 0 is the oriented resolution: identity for either sign.
    BraidWord pos = parse_braid("2:1"), neg = parse_braid("2:-1");
    CHECK(resolve_vertex(pos, Vertex{0, 1}).cycles.size() == 2);  // identity
    CHECK(resolve_vertex(pos, Vertex{1, 1}).cycles.size() == 1);  // cup-cap
    CHECK(resolve_vertex(neg, Vertex{0, 1}).cycles.size() == 1);  // cup-cap
    CHECK(resolve_vertex(neg, Vertex{1, 1}).cycles.size() == 2);  // identity
}

TEST_CASE("nontriviality is odd closure count") {
    // one cup-cap on 2 strands: a single circle through both positions
    SmoothedDiagram d = resolve_vertex(parse_braid("2:-1"), Vertex{0, 1});
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.cycles[0].closure_positions == std::vector<int>{1, 2});
    CHECK(!d.cycles[0].nontrivial);
    CHECK(d.cycles[0].depth == 0);
}

TEST_CASE("trefoil cube structure") {
    CubeData cube = build_cube(parse_braid("3_1"));
    REQUIRE(cube.diagrams.size() == 8);
    REQUIRE(cube.edges.size() == 3 * 4);

    // all-identity vertex (bits 111 for negative letters): two vertical
    // circles, nested depths by closure position
    const SmoothedDiagram& id = cube.diagrams[7];
    REQUIRE(id.cycles.size() == 2);
    CHECK(nodes_of_cycle(id, 0) == std::vector<int>{0, 2, 4, 6});
    CHECK(nodes_of_cycle(id, 1) == std::vector<int>{1, 3, 5, 7});
    CHECK(id.cycles[0].nontrivial);
    CHECK(id.cycles[1].nontrivial);
    CHECK(id.cycles[0].depth == 1);
    CHECK(id.cycles[1].depth == 2);

    // all-cup-cap vertex: three circles, all trivial
    const SmoothedDiagram& cc = cube.diagrams[0];
    REQUIRE(cc.cycles.size() == 3);
    CHECK(cc.nontrivial_count() == 0);

    // cycle ids follow the smallest node on each cycle
    for (const SmoothedDiagram& d : cube.diagrams) {
        int prev = -1;
        for (int c = 0; c < static_cast<int>(d.cycles.size()); ++c) {
            int first = d.first_node[c];
            CHECK(first > prev);
            CHECK(d.cycle_of_node[first] == c);
            prev = first;
        }
    }
}

TEST_CASE("edge surgery data") {
    BraidWord pos = parse_braid("2:1");
    CubeData cube = build_cube(pos);
    REQUIRE(cube.edges.size() == 1);
    const EdgeData& e = cube.edges[0];
    CHECK(e.from.bits == 0);
    CHECK(e.to.bits == 1);
    CHECK(e.sign == 1);
    CHECK(e.is_merge);  // 2 circles fuse into 1
    CHECK(e.merge_a == 0);
    CHECK(e.merge_b == 1);
    CHECK(e.merge_out == 0);

    BraidWord neg = parse_braid("2:-1");
    const EdgeData& s = build_cube(neg).edges[0];
    CHECK(!s.is_merge);  // 1 circle splits into 2
    CHECK(s.split_in == 0);
    CHECK(s.split_out_a == 0);
    CHECK(s.split_out_b == 1);
    CHECK(s.cycle_map == std::vector<std::uint8_t>{kNoCycle});
}

TEST_CASE("edge signs count earlier 1-bits") {
    CubeData cube = build_cube(parse_braid("3_1"));
    for (const EdgeData& e : cube.edges) {
        int ones = 0;
        for (int cf = 0; cf < e.flipped_crossing; ++cf) ones += e.from.bit(cf);
        CHECK(e.sign == (ones % 2 == 0 ? 1 : -1));
        CHECK(e.to.bits == (e.from.bits | (1u << (e.from.count - 1 - e.flipped_crossing))));
    }
}

TEST_CASE("every edge is exactly one surgery") {
    CubeData cube = build_cube(parse_braid("4_1"));
    CHECK(cube.diagrams.size() == 16);
    CHECK(cube.edges.size() == 4 * 8);
    for (const EdgeData& e : cube.edges) {
        const SmoothedDiagram& from = cube.diagrams[e.from.bits];
        const SmoothedDiagram& to = cube.diagrams[e.to.bits];
        int df = static_cast<int>(from.cycles.size());
        int dt = static_cast<int>(to.cycles.size());
        REQUIRE(e.cycle_map.size() == from.cycles.size());
        if (e.is_merge) {
            CHECK(dt == df - 1);
            CHECK(e.cycle_map[e.merge_a] == e.merge_out);
            CHECK(e.cycle_map[e.merge_b] == e.merge_out);
        } else {
            CHECK(dt == df + 1);
            CHECK(e.cycle_map[e.split_in] == kNoCycle);
            CHECK(e.split_out_a < e.split_out_b);
        }
        // untouched cycles map to real cycles, injectively
        std::set<int> images;
        for (std::size_t c = 0; c < e.cycle_map.size(); ++c) {
            if (e.is_merge ? (static_cast<int>(c) == e.merge_a || static_cast<int>(c) == e.merge_b)
                           : static_cast<int>(c) == e.split_in)
                continue;
            REQUIRE(e.cycle_map[c] < static_cast<int>(to.cycles.size()));
            CHECK(images.insert(e.cycle_map[c]).second);
            // surgery preserves nontriviality away from the site
            CHECK(from.cycles[c].nontrivial == to.cycles[e.cycle_map[c]].nontrivial);
        }
    }
}

TEST_CASE("size limit") {
    BraidWord big;
    big.strands = 2;
    big.letters.assign(21, 1);
    CHECK_THROWS_AS(build_cube(big), LimitError);
    CHECK_THROWS_AS(build_cube(parse_braid("3_1"), 2), LimitError);
    CHECK_NOTHROW(build_cube(parse_braid("3_1"), 3));
}
