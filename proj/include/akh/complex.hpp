#pragma once

// The trigraded chain complex over Q[beta] attached to a braid closure, and
// its field-coefficient specializations.
//
// Gradings of a generator (vertex v, labeling of cycles by plus/minus):
//   i = |v| - n-
//   j = (#plus - #minus) + |v| + n+ - 2 n-
//   k = sum over nontrivial cycles of +1 (plus) / -1 (minus)
//
// beta is never stored.  It carries annular degree +2, the differential is
// k-homogeneous of degree 0, so an entry's beta-exponent is forced to be
// (source.k - target.k)/2.  Entries hold only the rational scalar; the
// khovanov build asserts the exponent is 0 or 1 ("monomiality").

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "akh/cube.hpp"
#include "akh/rational.hpp"

namespace akh {

struct Trigrading {
    int i = 0;
    int j = 0;
    int k = 0;

    auto operator<=>(const Trigrading&) const = default;
};

// Cycle labels: 0 = plus, 1 = minus.  Matches generator label masks, where
// bit c set means cycle c carries minus.
inline constexpr int kPlus = 0;
inline constexpr int kMinus = 1;

struct FrobeniusSpec {
    std::string name;
    // merge[a][b]: formal sum of output labels, as (label, coefficient).
    std::array<std::array<std::vector<std::pair<int, Rational>>, 2>, 2> merge;
    // split[a]: formal sum of output label pairs, as ((first, second), coefficient).
    std::array<std::vector<std::pair<std::pair<int, int>, Rational>>, 2> split;

    static const FrobeniusSpec& khovanov();
    static const FrobeniusSpec& lee();
};

struct Generator {
    int vertex = 0;            // index into cube.diagrams
    std::uint32_t labels = 0;  // bit per cycle id, 1 = minus
    Trigrading g;
};

struct DifferentialEntry {
    int src = 0;
    int tgt = 0;
    Rational coeff;
};

struct ChainComplex {
    std::shared_ptr<const CubeData> cube;
    std::string frobenius;
    CrossingCounts counts;
    std::vector<Generator> generators;       // vertex order, then labels ascending
    std::vector<std::size_t> vertex_offset;  // vertex index -> first generator id; size 2^c + 1
    std::vector<DifferentialEntry> entries;  // sorted by (src, tgt)

    int beta_exponent(const DifferentialEntry& e) const {
        return (generators[e.src].g.k - generators[e.tgt].g.k) / 2;
    }
};

// Builds generators and differential, checks d^2 = 0 (any Frobenius) plus the
// grading constraints: target.i = source.i + 1 always; for khovanov also
// j preserved and k-drop in {0, 2}.
ChainComplex build_complex(const BraidWord& braid, const FrobeniusSpec& frob,
                           int max_crossings = kDefaultMaxCrossings);

// How a specialized complex is graded for homology purposes.
enum class GradingShape {
    i_only,  // lee: only homological degree survives
    ij,      // beta = 1 and mod beta^n: bigraded (k zeroed)
    ijk,     // beta = 0: honestly trigraded
};

struct FieldGen {
    Trigrading g;   // unused coordinates zeroed per shape
    int orig = 0;   // generator id in the parent ChainComplex
    int power = 0;  // beta-power copy index (mod_beta_n), else 0
};

struct FieldComplex {
    GradingShape shape = GradingShape::ij;
    std::vector<FieldGen> gens;
    std::vector<DifferentialEntry> entries;
};

enum class SpecializeMode { beta_one, beta_zero, mod_beta_n };

// beta_one: all entries kept, bigraded.  beta_zero: exponent-0 entries only,
// trigraded.  mod_beta_n(n >= 1): n copies of each generator indexed by
// beta-power p (gen id = orig * n + p); an exponent-e entry maps copy p to
// copy p + e when p + e < n.  Requires a khovanov-built complex.
FieldComplex specialize(const ChainComplex& c, SpecializeMode mode, int n = 0);

// The lee complex as-is, graded by i alone.
FieldComplex lee_field_complex(const ChainComplex& c);

}  // namespace akh
