#pragma once

// The cube of resolutions of a braid closure in the annulus.
//
// Geometry.  A braid on s strands with c crossings occupies a disk; its
// closure lives in the annulus, the braid axis through the puncture.  Each
// crossing is smoothed two ways, selected by one bit per crossing:
//
//   positive letter: bit 0 -> identity smoothing, bit 1 -> cup-cap
//   negative letter: bit 0 -> cup-cap,            bit 1 -> identity
//
// so bit 0 always picks the oriented smoothing.  A fully smoothed diagram is
// a disjoint union of circles.  A circle is nontrivial when it winds around
// the puncture, which happens exactly when it meets an odd number of the s
// closure arcs.
//
// Combinatorics.  Nodes sit on horizontal levels y = 0..c at strand positions
// 1..s (node id = y*s + pos-1).  Crossing cf occupies the slab between levels
// cf and cf+1 and touches positions |letter|, |letter|+1; all other positions
// run vertically through the slab.  Closure arcs join (c, pos) to (0, pos).
// Circles are the connected components of this graph.
//
// Vertex bit layout: crossing cf holds bit (count-1-cf) of `bits`, so reading
// bits MSB-first spells the resolution word left to right and integer order
// on `bits` is the canonical vertex order.

#include <cstdint>
#include <memory>
#include <vector>

#include "akh/braid.hpp"

namespace akh {

inline constexpr int kDefaultMaxCrossings = 20;

struct Vertex {
    std::uint32_t bits = 0;
    int count = 0;

    int bit(int crossing) const { return (bits >> (count - 1 - crossing)) & 1; }
    int weight() const;  // number of 1 bits

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Cycle {
    std::vector<int> closure_positions;  // ascending, possibly empty
    bool nontrivial = false;             // closure_positions.size() odd
    int depth = 0;                       // 1..m over nontrivial cycles by min position, else 0
};

struct SmoothedDiagram {
    Vertex vertex;
    std::vector<Cycle> cycles;              // indexed by cycle id
    std::vector<std::uint8_t> cycle_of_node;  // node id -> cycle id
    std::vector<int> first_node;            // cycle id -> smallest node id on it

    int nontrivial_count() const;
};

// Identifies a cycle not incident to the surgery site on a split edge's
// target side; never a valid image.
inline constexpr std::uint8_t kNoCycle = 0xff;

struct EdgeData {
    Vertex from, to;       // to = from with one bit raised
    int flipped_crossing = 0;
    int sign = 1;          // (-1)^(number of 1 bits before the flipped one)
    bool is_merge = false;

    // Merge: cycles a, b of `from` fuse into `out` of `to`.
    int merge_a = -1, merge_b = -1, merge_out = -1;
    // Split: cycle `in` of `from` splits into out_a < out_b of `to`.
    int split_in = -1, split_out_a = -1, split_out_b = -1;

    // from-cycle id -> to-cycle id for cycles untouched by the surgery;
    // merged cycles both map to merge_out, the split cycle maps to kNoCycle.
    std::vector<std::uint8_t> cycle_map;
};

struct CubeData {
    BraidWord braid;
    std::vector<SmoothedDiagram> diagrams;  // canonical vertex order, size 2^c
    std::vector<EdgeData> edges;            // by from-vertex, then flipped crossing
};

// Smooths every crossing per the vertex bits and collects the cycles of the
// closure.  Cycle ids follow the smallest node id on each cycle.
SmoothedDiagram resolve_vertex(const BraidWord& braid, Vertex vertex);

// The surgery data for one cube edge.  Exactly one of merge/split applies;
// anything else (|cycle count change| != 1) is an InternalError.
EdgeData edge_map(const BraidWord& braid, const SmoothedDiagram& from,
                  const SmoothedDiagram& to, int flipped_crossing);

// All 2^c diagrams and c*2^(c-1) edges.  Throws LimitError when the braid has
// more than max_crossings crossings.
CubeData build_cube(const BraidWord& braid, int max_crossings = kDefaultMaxCrossings);

}  // namespace akh
