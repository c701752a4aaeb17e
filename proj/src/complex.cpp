#include "akh/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace akh {

const FrobeniusSpec& FrobeniusSpec::khovanov() {
    static const FrobeniusSpec spec = [] {
        FrobeniusSpec s;
        s.name = "khovanov";
        s.merge[kPlus][kPlus] = {{kPlus, 1}};
        s.merge[kPlus][kMinus] = {{kMinus, 1}};
        s.merge[kMinus][kPlus] = {{kMinus, 1}};
        s.merge[kMinus][kMinus] = {};
        s.split[kPlus] = {{{kPlus, kMinus}, 1}, {{kMinus, kPlus}, 1}};
        s.split[kMinus] = {{{kMinus, kMinus}, 1}};
        return s;
    }();
    return spec;
}

const FrobeniusSpec& FrobeniusSpec::lee() {
    static const FrobeniusSpec spec = [] {
        FrobeniusSpec s = khovanov();
        s.name = "lee";
        s.merge[kMinus][kMinus] = {{kPlus, 1}};
        s.split[kMinus].push_back({{kPlus, kPlus}, 1});
        return s;
    }();
    return spec;
}

namespace {

Trigrading grade_generator(const SmoothedDiagram& diagram, std::uint32_t labels,
                           const CrossingCounts& counts) {
    int weight = diagram.vertex.weight();
    int cycles = static_cast<int>(diagram.cycles.size());
    int minus = std::popcount(labels);
    int plus = cycles - minus;
    int k = 0;
    for (int c = 0; c < cycles; ++c)
        if (diagram.cycles[c].nontrivial) k += (labels >> c) & 1 ? -1 : 1;
    return Trigrading{weight - counts.negative,
                      (plus - minus) + weight + counts.positive - 2 * counts.negative, k};
}

void check_d_squared(const ChainComplex& c) {
    // Each beta-exponent is endpoint-determined, so compositions g -> f all
    // carry the same beta power and the scalar sums must vanish on their own.
    std::vector<std::vector<std::pair<int, const Rational*>>> rows(c.generators.size());
    for (const DifferentialEntry& e : c.entries) rows[e.src].push_back({e.tgt, &e.coeff});
    std::map<int, Rational> acc;
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        acc.clear();
        for (const auto& [mid, c1] : rows[g])
            for (const auto& [end, c2] : rows[mid]) acc[end] += *c1 * *c2;
        for (const auto& [end, sum] : acc)
            require(sum.is_zero(), "build_complex: d^2 != 0 (" + c.frobenius + ")");
    }
}

}  // namespace

ChainComplex build_complex(const BraidWord& braid, const FrobeniusSpec& frob, int max_crossings) {
    ChainComplex c;
    c.cube = std::make_shared<const CubeData>(build_cube(braid, max_crossings));
    c.frobenius = frob.name;
    c.counts = crossing_counts(braid);

    c.vertex_offset.reserve(c.cube->diagrams.size() + 1);
    c.vertex_offset.push_back(0);
    for (const SmoothedDiagram& diagram : c.cube->diagrams) {
        int cycles = static_cast<int>(diagram.cycles.size());
        for (std::uint32_t labels = 0; labels < (std::uint32_t{1} << cycles); ++labels)
            c.generators.push_back(Generator{static_cast<int>(diagram.vertex.bits), labels,
                                             grade_generator(diagram, labels, c.counts)});
        c.vertex_offset.push_back(c.generators.size());
    }

    const bool khovanov = frob.name == "khovanov";
    for (const EdgeData& edge : c.cube->edges) {
        const SmoothedDiagram& from = c.cube->diagrams[edge.from.bits];
        const SmoothedDiagram& to = c.cube->diagrams[edge.to.bits];
        std::size_t from_base = c.vertex_offset[edge.from.bits];
        std::size_t to_base = c.vertex_offset[edge.to.bits];

        // to-cycle id -> from-cycle id for cycles the surgery does not touch.
        std::vector<int> source_of(to.cycles.size(), -1);
        for (std::size_t fc = 0; fc < from.cycles.size(); ++fc)
            if (edge.cycle_map[fc] != kNoCycle &&
                static_cast<int>(fc) != edge.merge_a && static_cast<int>(fc) != edge.merge_b)
                source_of[edge.cycle_map[fc]] = static_cast<int>(fc);

        std::uint32_t from_count = static_cast<std::uint32_t>(from.cycles.size());
        for (std::uint32_t labels = 0; labels < (std::uint32_t{1} << from_count); ++labels) {
            std::uint32_t base = 0;
            for (std::size_t tc = 0; tc < to.cycles.size(); ++tc)
                if (source_of[tc] >= 0) base |= ((labels >> source_of[tc]) & 1) << tc;

            int src = static_cast<int>(from_base + labels);
            if (edge.is_merge) {
                int la = (labels >> edge.merge_a) & 1;
                int lb = (labels >> edge.merge_b) & 1;
                for (const auto& [out, coeff] : frob.merge[la][lb]) {
                    std::uint32_t tgt_labels =
                        base | (static_cast<std::uint32_t>(out) << edge.merge_out);
                    c.entries.push_back({src, static_cast<int>(to_base + tgt_labels),
                                         coeff * Rational(edge.sign)});
                }
            } else {
                int lin = (labels >> edge.split_in) & 1;
                for (const auto& [outs, coeff] : frob.split[lin]) {
                    std::uint32_t tgt_labels =
                        base | (static_cast<std::uint32_t>(outs.first) << edge.split_out_a) |
                        (static_cast<std::uint32_t>(outs.second) << edge.split_out_b);
                    c.entries.push_back({src, static_cast<int>(to_base + tgt_labels),
                                         coeff * Rational(edge.sign)});
                }
            }
        }
    }
    std::sort(c.entries.begin(), c.entries.end(), [](const auto& a, const auto& b) {
        return std::pair(a.src, a.tgt) < std::pair(b.src, b.tgt);
    });

    for (const DifferentialEntry& e : c.entries) {
        const Trigrading& s = c.generators[e.src].g;
        const Trigrading& t = c.generators[e.tgt].g;
        require(t.i == s.i + 1, "build_complex: entry does not raise i by one");
        if (khovanov) {
            require(t.j == s.j, "build_complex: entry changes j");
            require(s.k - t.k == 0 || s.k - t.k == 2, "build_complex: k-drop outside {0,2}");
        }
    }
    check_d_squared(c);
    return c;
}

FieldComplex specialize(const ChainComplex& c, SpecializeMode mode, int n) {
    require(c.frobenius == "khovanov", "specialize: requires a khovanov complex");
    FieldComplex out;
    switch (mode) {
        case SpecializeMode::beta_one: {
            out.shape = GradingShape::ij;
            out.gens.reserve(c.generators.size());
            for (std::size_t g = 0; g < c.generators.size(); ++g)
                out.gens.push_back(
                    {Trigrading{c.generators[g].g.i, c.generators[g].g.j, 0}, static_cast<int>(g), 0});
            out.entries = c.entries;
            return out;
        }
        case SpecializeMode::beta_zero: {
            out.shape = GradingShape::ijk;
            out.gens.reserve(c.generators.size());
            for (std::size_t g = 0; g < c.generators.size(); ++g)
                out.gens.push_back({c.generators[g].g, static_cast<int>(g), 0});
            for (const DifferentialEntry& e : c.entries)
                if (c.beta_exponent(e) == 0) out.entries.push_back(e);
            return out;
        }
        case SpecializeMode::mod_beta_n: {
            if (n < 1) throw ParseError("mod_beta_n needs n >= 1, got " + std::to_string(n));
            out.shape = GradingShape::ij;
            out.gens.reserve(c.generators.size() * n);
            for (std::size_t g = 0; g < c.generators.size(); ++g)
                for (int p = 0; p < n; ++p)
                    out.gens.push_back({Trigrading{c.generators[g].g.i, c.generators[g].g.j, 0},
                                        static_cast<int>(g), p});
            for (const DifferentialEntry& e : c.entries) {
                int exp = c.beta_exponent(e);
                for (int p = 0; p + exp < n; ++p)
                    out.entries.push_back({e.src * n + p, e.tgt * n + p + exp, e.coeff});
            }
            return out;
        }
    }
    throw InternalError("specialize: unreachable mode");
}

FieldComplex lee_field_complex(const ChainComplex& c) {
    require(c.frobenius == "lee", "lee_field_complex: requires a lee complex");
    FieldComplex out;
    out.shape = GradingShape::i_only;
    out.gens.reserve(c.generators.size());
    for (std::size_t g = 0; g < c.generators.size(); ++g)
        out.gens.push_back({Trigrading{c.generators[g].g.i, 0, 0}, static_cast<int>(g), 0});
    out.entries = c.entries;
    return out;
}

}  // namespace akh
