#include "akh/invariants.hpp"

#include <algorithm>

namespace akh {

LaurentPoly3 dims_to_poly(const GradedDims& dims) {
    LaurentPoly3 p;
    for (const auto& [g, d] : dims) p.add_term(Exponents{g.j, g.i, g.k}, d);
    return p;
}

LaurentPoly3 dims_to_poly(const BigradedDims& dims) {
    LaurentPoly3 p;
    for (const auto& [g, d] : dims) p.add_term(Exponents{g.j, g.i, 0}, d);
    return p;
}

LaurentPoly3 kh_poincare(const BraidWord& braid, const FrobeniusSpec& frob, DifferentialMode mode,
                         bool keep_z, int max_crossings) {
    ChainComplex c = build_complex(braid, frob, max_crossings);
    if (frob.name == "lee") {
        LaurentPoly3 p = dims_to_poly(homology_over_field(lee_field_complex(c)).dims);
        return p;
    }
    if (mode == DifferentialMode::full)
        return dims_to_poly(homology_over_field(specialize(c, SpecializeMode::beta_one)).dims);
    LaurentPoly3 p = dims_to_poly(homology_over_field(specialize(c, SpecializeMode::beta_zero)).dims);
    return keep_z ? p : p.forget_variable('z');
}

Decomposition annular_decomposition(const BraidWord& braid, int max_crossings) {
    return staircase_decompose(build_complex(braid, FrobeniusSpec::khovanov(), max_crossings));
}

GradedDims sakh_dims(const Decomposition& d) {
    GradedDims out = d.w0;
    for (const auto& [key, mult] : d.staircases) {
        out[key.second] += mult;
        out[staircase_target(key.first, key.second)] += mult;
    }
    return out;
}

std::vector<Sl2Summand> sl2_decompose_dims(const GradedDims& sakh) {
    // (i, j-k) -> weight k -> dim
    std::map<std::pair<int, int>, std::map<int, int>> groups;
    for (const auto& [g, d] : sakh) groups[{g.i, g.j - g.k}][g.k] += d;

    std::vector<Sl2Summand> out;
    for (const auto& [key, weights] : groups) {
        auto dim_at = [&](int k) {
            auto it = weights.find(k);
            return it == weights.end() ? 0 : it->second;
        };
        int top = 0;
        for (const auto& [k, d] : weights) top = std::max({top, k, -k});
        int total = 0;
        for (int n = top; n >= 0; n -= 2) {
            require(dim_at(n) == dim_at(-n), "sl2_decompose: weight dims not symmetric");
            int mult = dim_at(n) - dim_at(n + 2);
            require(mult >= 0, "sl2_decompose: negative multiplicity");
            if (mult > 0) out.push_back({n, key.first, key.second, mult});
            total += mult * (n + 1);
            if (n == 1) break;  // odd weights stop at 1
        }
        int group_total = 0;
        for (const auto& [k, d] : weights) group_total += d;
        require(total == group_total, "sl2_decompose: multiplicities do not exhaust the group");
    }
    std::sort(out.begin(), out.end(), [](const Sl2Summand& a, const Sl2Summand& b) {
        return std::tuple(a.i, a.jk, a.highest_weight) < std::tuple(b.i, b.jk, b.highest_weight);
    });
    return out;
}

std::vector<Sl2Summand> sl2_decompose(const BraidWord& braid, int max_crossings) {
    return sl2_decompose_dims(sakh_dims(annular_decomposition(braid, max_crossings)));
}

std::string render_sl2(const std::vector<Sl2Summand>& summands) {
    if (summands.empty()) return "0";
    std::vector<std::string> parts;
    for (const Sl2Summand& s : summands) {
        std::string head =
            (s.mult == 1 ? "" : std::to_string(s.mult) + " ") + "V[" +
            std::to_string(s.highest_weight) + "]";
        std::string tail = format_term(1, Exponents{s.jk, s.i, 0}, PolyStyle::display);
        if (tail == "1")
            parts.push_back(head);
        else if (tail.rfind("1/", 0) == 0)
            parts.push_back(head + tail.substr(1));
        else
            parts.push_back(head + " " + tail);
    }
    return join_terms(parts, "+", "-");
}

SpectralOutput spectral_from_decomposition(const Decomposition& d) {
    SpectralOutput s;
    s.e_poly = dims_to_poly(d.w0);
    for (const auto& [key, mult] : d.staircases) {
        const Trigrading& g = key.second;
        s.c_polys[key.first].add_term(Exponents{g.j, g.i, g.k}, mult);
    }
    return s;
}

SpectralOutput spectral_annular_kh(const BraidWord& braid, int max_crossings) {
    return spectral_from_decomposition(annular_decomposition(braid, max_crossings));
}

std::string render_spectral(const SpectralOutput& s) {
    auto group = [](const LaurentPoly3& p) {
        return "(" + join_terms(p.term_strings(PolyStyle::display, false), " + ", " - ") + ")";
    };
    std::string out = (s.e_poly.is_zero() ? "(0)" : group(s.e_poly)) + " E";
    for (const auto& [k, p] : s.c_polys)
        out += " + " + group(p) + " C[" + std::to_string(k) + "]";
    return out;
}

GradedDims spectral_page(const Decomposition& d, int j) {
    if (j < 0) throw ParseError("spectral_page: page index must be nonnegative");
    GradedDims out = d.w0;
    for (const auto& [key, mult] : d.staircases) {
        if (2 * key.first <= j) continue;
        out[key.second] += mult;
        out[staircase_target(key.first, key.second)] += mult;
    }
    return out;
}

RepsResult representatives_in_grading(const ChainComplex& c, int i, int j,
                                      DifferentialMode mode) {
    FieldComplex fc = specialize(
        c, mode == DifferentialMode::full ? SpecializeMode::beta_one : SpecializeMode::beta_zero);
    FieldHomology h = homology_with_basis_at(fc, Bigrading{i, j});
    RepsResult out;
    auto it = h.bases.find(Bigrading{i, j});
    if (it == h.bases.end()) return out;  // empty grading
    out.basis = it->second.gens;
    out.reps = it->second.reps;
    return out;
}

LaurentPoly3 graded_euler(const BraidWord& braid, int max_crossings) {
    CubeData cube = build_cube(braid, max_crossings);
    CrossingCounts counts = crossing_counts(braid);
    LaurentPoly3 circle = LaurentPoly3::monomial(1, 1, 0, 0) + LaurentPoly3::monomial(1, -1, 0, 0);
    LaurentPoly3 out;
    for (const SmoothedDiagram& diagram : cube.diagrams) {
        int w = diagram.vertex.weight();
        int sign = (w - counts.negative) % 2 == 0 ? 1 : -1;
        LaurentPoly3 term =
            LaurentPoly3::monomial(sign, w + counts.positive - 2 * counts.negative, 0, 0);
        for (std::size_t n = 0; n < diagram.cycles.size(); ++n) term = term * circle;
        out += term;
    }
    return out;
}

}  // namespace akh
