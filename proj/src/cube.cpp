#include "akh/cube.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace akh {

namespace {

// Union-find over node ids, path halving, union by size.
struct DisjointSets {
    std::vector<int> parent, size;

    explicit DisjointSets(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

bool is_cupcap(int letter, int bit) { return letter > 0 ? bit == 1 : bit == 0; }

}  // namespace

int Vertex::weight() const { return std::popcount(bits); }

int SmoothedDiagram::nontrivial_count() const {
    int n = 0;
    for (const Cycle& cy : cycles) n += cy.nontrivial ? 1 : 0;
    return n;
}

SmoothedDiagram resolve_vertex(const BraidWord& braid, Vertex vertex) {
    const int s = braid.strands;
    const int c = static_cast<int>(braid.letters.size());
    require(vertex.count == c, "resolve_vertex: bit count mismatch");
    auto node = [s](int y, int pos) { return y * s + pos - 1; };

    DisjointSets sets((c + 1) * s);
    for (int cf = 0; cf < c; ++cf) {
        int letter = braid.letters[cf];
        int p = letter < 0 ? -letter : letter;
        if (is_cupcap(letter, vertex.bit(cf))) {
            sets.unite(node(cf, p), node(cf, p + 1));
            sets.unite(node(cf + 1, p), node(cf + 1, p + 1));
        } else {
            sets.unite(node(cf, p), node(cf + 1, p));
            sets.unite(node(cf, p + 1), node(cf + 1, p + 1));
        }
        for (int pos = 1; pos <= s; ++pos)
            if (pos != p && pos != p + 1) sets.unite(node(cf, pos), node(cf + 1, pos));
    }
    for (int pos = 1; pos <= s; ++pos) sets.unite(node(c, pos), node(0, pos));

    SmoothedDiagram diagram;
    diagram.vertex = vertex;
    diagram.cycle_of_node.resize((c + 1) * s);
    std::vector<int> id_of_root((c + 1) * s, -1);
    for (int n = 0; n < (c + 1) * s; ++n) {
        int root = sets.find(n);
        if (id_of_root[root] < 0) {
            id_of_root[root] = static_cast<int>(diagram.cycles.size());
            diagram.cycles.emplace_back();
            diagram.first_node.push_back(n);
        }
        diagram.cycle_of_node[n] = static_cast<std::uint8_t>(id_of_root[root]);
    }
    for (int pos = 1; pos <= s; ++pos)
        diagram.cycles[diagram.cycle_of_node[node(0, pos)]].closure_positions.push_back(pos);

    int depth = 0;
    for (Cycle& cy : diagram.cycles) {
        cy.nontrivial = cy.closure_positions.size() % 2 == 1;
        if (cy.nontrivial) cy.depth = ++depth;
    }
    // Cycle ids ascend with first_node, and a nontrivial cycle's first node is
    // its minimal closure position on level 0, so depths follow min position.
    return diagram;
}

EdgeData edge_map(const BraidWord& braid, const SmoothedDiagram& from,
                  const SmoothedDiagram& to, int flipped_crossing) {
    const int s = braid.strands;
    const int cf = flipped_crossing;
    require(from.vertex.bit(cf) == 0 && to.vertex.bits == (from.vertex.bits | (1u << (from.vertex.count - 1 - cf))),
            "edge_map: vertices do not differ by raising the flipped bit");

    EdgeData edge;
    edge.from = from.vertex;
    edge.to = to.vertex;
    edge.flipped_crossing = cf;
    int earlier = cf == 0 ? 0 : std::popcount(from.vertex.bits >> (from.vertex.count - cf));
    edge.sign = earlier % 2 == 0 ? 1 : -1;

    int p = braid.letters[cf] < 0 ? -braid.letters[cf] : braid.letters[cf];
    const std::array<int, 4> ports = {cf * s + p - 1, cf * s + p, (cf + 1) * s + p - 1,
                                      (cf + 1) * s + p};

    int from_count = static_cast<int>(from.cycles.size());
    int to_count = static_cast<int>(to.cycles.size());
    require(from_count - to_count == 1 || to_count - from_count == 1,
            "edge_map: surgery must change the cycle count by one");
    edge.is_merge = to_count < from_count;

    edge.cycle_map.assign(from_count, kNoCycle);
    if (edge.is_merge) {
        edge.merge_a = from.cycle_of_node[ports[0]];
        edge.merge_b = from.cycle_of_node[ports[1]];
        if (edge.merge_a == edge.merge_b) {
            edge.merge_b = from.cycle_of_node[ports[2]];
            if (edge.merge_a == edge.merge_b) edge.merge_b = from.cycle_of_node[ports[3]];
        }
        require(edge.merge_a != edge.merge_b, "edge_map: merge needs two distinct cycles");
        if (edge.merge_a > edge.merge_b) std::swap(edge.merge_a, edge.merge_b);
        edge.merge_out = to.cycle_of_node[ports[0]];
        for (int n : ports)
            require(to.cycle_of_node[n] == edge.merge_out, "edge_map: merge target not a single cycle");
    } else {
        edge.split_in = from.cycle_of_node[ports[0]];
        for (int n : ports)
            require(from.cycle_of_node[n] == edge.split_in, "edge_map: split source not a single cycle");
        edge.split_out_a = to.cycle_of_node[ports[0]];
        edge.split_out_b = edge.split_out_a;
        for (int n : ports)
            if (to.cycle_of_node[n] != edge.split_out_a) edge.split_out_b = to.cycle_of_node[n];
        require(edge.split_out_a != edge.split_out_b, "edge_map: split target needs two cycles");
        if (edge.split_out_a > edge.split_out_b) std::swap(edge.split_out_a, edge.split_out_b);
    }

    for (int fc = 0; fc < from_count; ++fc) {
        if (fc == edge.split_in) continue;
        if (fc == edge.merge_a || fc == edge.merge_b) {
            edge.cycle_map[fc] = static_cast<std::uint8_t>(edge.merge_out);
            continue;
        }
        edge.cycle_map[fc] = to.cycle_of_node[from.first_node[fc]];
    }
    return edge;
}

CubeData build_cube(const BraidWord& braid, int max_crossings) {
    validate(braid);
    const int c = static_cast<int>(braid.letters.size());
    if (c > max_crossings)
        throw LimitError("braid has " + std::to_string(c) + " crossings, limit is " +
                         std::to_string(max_crossings));

    CubeData cube;
    cube.braid = braid;
    cube.diagrams.reserve(std::size_t{1} << c);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << c); ++bits)
        cube.diagrams.push_back(resolve_vertex(braid, Vertex{bits, c}));

    cube.edges.reserve(c == 0 ? 0 : (std::size_t{c} << (c - 1)));
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << c); ++bits)
        for (int cf = 0; cf < c; ++cf) {
            if ((bits >> (c - 1 - cf)) & 1) continue;
            std::uint32_t raised = bits | (std::uint32_t{1} << (c - 1 - cf));
            cube.edges.push_back(edge_map(braid, cube.diagrams[bits], cube.diagrams[raised], cf));
        }
    return cube;
}

}  // namespace akh
