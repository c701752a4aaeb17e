#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "akh/reduce.hpp"

using namespace akh;

namespace {

const ChainComplex& trefoil() {
    static const ChainComplex c = build_complex(parse_braid("3_1"), FrobeniusSpec::khovanov());
    return c;
}

GradedDims trefoil_sakh() {
    return GradedDims{
        {{-3, -9, 0}, 1}, {{-2, -5, 0}, 1}, {{-1, -5, 0}, 1},
        {{0, -5, -2}, 1}, {{0, -3, 0}, 1},  {{0, -1, 2}, 1},
    };
}

}  // namespace

TEST_CASE("beta one homology of the trefoil closure") {
    FieldHomology h = homology_over_field(specialize(trefoil(), SpecializeMode::beta_one));
    GradedDims expected{{{-3, -9, 0}, 1}, {{-2, -5, 0}, 1}, {{0, -3, 0}, 1}, {{0, -1, 0}, 1}};
    CHECK(h.dims == expected);
    CHECK(h.bases.empty());
}

TEST_CASE("beta zero homology is trigraded") {
    FieldHomology h = homology_over_field(specialize(trefoil(), SpecializeMode::beta_zero));
    CHECK(h.dims == trefoil_sakh());
}

TEST_CASE("unknot and trivial closures") {
    ChainComplex u = build_complex(parse_braid("1:"), FrobeniusSpec::khovanov());
    CHECK(u.generators.size() == 2);
    CHECK(u.entries.empty());
    Decomposition d = staircase_decompose(u);
    CHECK(d.w0 == GradedDims{{{0, 1, 1}, 1}, {{0, -1, -1}, 1}});
    CHECK(d.staircases.empty());

    Decomposition two = staircase_decompose(build_complex(parse_braid("2:"), FrobeniusSpec::khovanov()));
    CHECK(two.w0 == GradedDims{{{0, 2, 2}, 1}, {{0, 0, 0}, 2}, {{0, -2, -2}, 1}});
    CHECK(two.staircases.empty());
}

TEST_CASE("staircase decomposition of the trefoil closure") {
    Decomposition d = staircase_decompose(trefoil());
    GradedDims w0{{{-3, -9, 0}, 1}, {{-2, -5, 0}, 1}, {{0, -3, 0}, 1}, {{0, -1, 2}, 1}};
    CHECK(d.w0 == w0);
    REQUIRE(d.staircases.size() == 1);
    auto it = d.staircases.begin();
    CHECK(it->first == std::pair<int, Trigrading>{1, {-1, -5, 0}});
    CHECK(it->second == 1);
    CHECK(staircase_target(1, {-1, -5, 0}) == Trigrading{0, -5, -2});
}

TEST_CASE("one positive crossing has a k=1 staircase") {
    Decomposition d = staircase_decompose(build_complex(parse_braid("2:1"), FrobeniusSpec::khovanov()));
    CHECK(d.w0 == GradedDims{{{0, 1, 0}, 1}, {{0, -1, -2}, 1}});
    REQUIRE(d.staircases.size() == 1);
    CHECK(d.staircases.begin()->first == std::pair<int, Trigrading>{1, {0, 3, 2}});
}

TEST_CASE("decomposition is pivot-order independent") {
    Decomposition base = staircase_decompose(trefoil());
    for (std::uint64_t seed : {1ull, 7ull, 1234567ull}) {
        Decomposition d = staircase_decompose(trefoil(), seed);
        CHECK(d.w0 == base.w0);
        CHECK(d.staircases == base.staircases);
    }
    ChainComplex c812 = build_complex(parse_braid("8_12a"), FrobeniusSpec::khovanov());
    Decomposition base812 = staircase_decompose(c812);
    for (std::uint64_t seed : {3ull, 99ull}) {
        Decomposition d = staircase_decompose(c812, seed);
        CHECK(d.w0 == base812.w0);
        CHECK(d.staircases == base812.staircases);
    }
}

TEST_CASE("beta one dims equal the decomposition's w0") {
    // staircases are beta-torsion: only w0 survives at beta = 1
    for (const char* name : {"3_1", "4_1", "2:1", "3:1,-2"}) {
        ChainComplex c = build_complex(parse_braid(name), FrobeniusSpec::khovanov());
        Decomposition d = staircase_decompose(c);
        FieldHomology h1 = homology_over_field(specialize(c, SpecializeMode::beta_one));
        BigradedDims w0_ij = forget_k(d.w0);
        BigradedDims h1_ij;
        for (const auto& [g, dim] : h1.dims) h1_ij[{g.i, g.j}] += dim;
        CHECK(w0_ij == h1_ij);
    }
}

TEST_CASE("oracle recomputes the staircase dimensions") {
    std::vector<BigradedDims> wk = wk_from_oracle(trefoil(), 2);
    REQUIRE(wk.size() == 3);
    CHECK(wk[0] == BigradedDims{{{-3, -9}, 1}, {{-2, -5}, 1}, {{0, -3}, 1}, {{0, -1}, 1}});
    CHECK(wk[1] == BigradedDims{{{-1, -5}, 1}});
    CHECK(wk[2].empty());

    ChainComplex pos = build_complex(parse_braid("2:1"), FrobeniusSpec::khovanov());
    std::vector<BigradedDims> wp = wk_from_oracle(pos, 1);
    REQUIRE(wp.size() == 2);
    CHECK(wp[0] == BigradedDims{{{0, 1}, 1}, {{0, -1}, 1}});
    CHECK(wp[1] == BigradedDims{{{0, 3}, 1}});
}

TEST_CASE("oracle agrees with elimination") {
    for (const char* name : {"4_1", "3:1,2", "3:-1,2,-1,2,2"}) {
        ChainComplex c = build_complex(parse_braid(name), FrobeniusSpec::khovanov());
        Decomposition d = staircase_decompose(c);
        int kmax = 1;
        for (const auto& [key, count] : d.staircases) kmax = std::max(kmax, key.first);
        std::vector<BigradedDims> wk = wk_from_oracle(c, kmax);
        CHECK(forget_k(d.w0) == wk[0]);
        for (int n = 1; n <= kmax; ++n) {
            BigradedDims from_dec;
            for (const auto& [key, count] : d.staircases)
                if (key.first == n) from_dec[{key.second.i, key.second.j}] += count;
            CHECK(from_dec == wk[n]);
        }
    }
}

TEST_CASE("homology with basis at a block") {
    FieldComplex f = specialize(trefoil(), SpecializeMode::beta_zero);
    FieldHomology h = homology_with_basis_at(f, {-1, -5});
    CHECK(h.dims == trefoil_sakh());
    REQUIRE(h.bases.count(Bigrading{-1, -5}) == 1);
    const BlockBasis& b = h.bases.at({-1, -5});
    CHECK(b.gens == std::vector<int>{17, 23, 25});
    REQUIRE(b.reps.size() == 1);
    REQUIRE(b.reps[0].size() == 3);
    CHECK(b.reps[0][0] == Rational(0));
    CHECK(b.reps[0][1] == Rational(0));
    CHECK(b.reps[0][2] == Rational(1));
}

TEST_CASE("with_basis dims agree with plain elimination") {
    for (const char* name : {"3_1", "4_1"}) {
        ChainComplex c = build_complex(parse_braid(name), FrobeniusSpec::khovanov());
        for (SpecializeMode m : {SpecializeMode::beta_one, SpecializeMode::beta_zero}) {
            FieldComplex f = specialize(c, m);
            FieldHomology plain = homology_over_field(f);
            FieldHomology with = homology_over_field(f, true);
            CHECK(plain.dims == with.dims);
            // every nonempty block carries as many reps as its total dimension
            std::map<Bigrading, int> block_dims;
            for (const auto& [g, dim] : plain.dims) block_dims[{g.i, g.j}] += dim;
            for (const auto& [bg, basis] : with.bases) {
                int expect = block_dims.count(bg) ? block_dims[bg] : 0;
                CHECK(static_cast<int>(basis.reps.size()) == expect);
                for (const auto& rep : basis.reps) CHECK(rep.size() == basis.gens.size());
            }
        }
    }
}

TEST_CASE("lee homology ranks") {
    ChainComplex c = build_complex(parse_braid("3_1"), FrobeniusSpec::lee());
    FieldHomology h = homology_over_field(lee_field_complex(c));
    CHECK(h.dims == GradedDims{{{0, 0, 0}, 2}});

    ChainComplex hopf = build_complex(parse_braid("2:1,1"), FrobeniusSpec::lee());
    FieldHomology hh = homology_over_field(lee_field_complex(hopf));
    int total = 0;
    for (const auto& [g, dim] : hh.dims) total += dim;
    CHECK(total == 4);
}

TEST_CASE("forget_k sums over k") {
    GradedDims d{{{0, 1, 1}, 1}, {{0, 1, -1}, 2}, {{1, 3, 0}, 1}};
    CHECK(forget_k(d) == BigradedDims{{{0, 1}, 3}, {{1, 3}, 1}});
    CHECK(forget_k(GradedDims{}).empty());
}
