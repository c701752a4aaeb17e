#pragma once

// Exact elimination: homology of field-coefficient complexes, homology
// representatives, the staircase decomposition over Q[beta], and the
// mod-beta^n oracle that recomputes W_k independently.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "akh/complex.hpp"

namespace akh {

struct Bigrading {
    int i = 0;
    int j = 0;

    auto operator<=>(const Bigrading&) const = default;
};

using GradedDims = std::map<Trigrading, int>;      // unused coordinates zeroed per shape
using BigradedDims = std::map<Bigrading, int>;

struct BlockBasis {
    std::vector<int> gens;                     // gen ids at one (i,j), ascending
    std::vector<std::vector<Rational>> reps;   // homology representatives over `gens`
};

struct FieldHomology {
    GradedDims dims;
    std::map<Bigrading, BlockBasis> bases;  // populated when with_basis
};

// Graded homology dimensions by Gaussian elimination.  When with_basis is
// set, also computes, per bigrading (i,j), the chain basis and one
// representative vector per class (reduced against boundaries, first nonzero
// coefficient 1) via an independent dense kernel/quotient computation; the
// two routes' dimensions are cross-checked.
FieldHomology homology_over_field(const FieldComplex& c, bool with_basis = false);

// Same, with the basis computation restricted to one (i,j) block.
FieldHomology homology_with_basis_at(const FieldComplex& c, const Bigrading& block);

struct Decomposition {
    GradedDims w0;
    std::map<std::pair<int, Trigrading>, int> staircases;  // (k >= 1, source grading) -> count
};

// Target grading of a staircase summand: source --beta^k--> target.
inline Trigrading staircase_target(int k, const Trigrading& source) {
    return Trigrading{source.i + 1, source.j, source.k - 2 * k};
}

// Decomposes the Q[beta] complex into W0 (surviving generators) and staircase
// summands (k = pivot beta-exponent, recorded at the pivot's source grading).
// Pivots are chosen at globally minimal beta-exponent, lowest homological
// degree first, ties by minimal fill-in then lowest (src, tgt); when
// shuffle_seed is given, ties among minimal-exponent entries are instead
// broken uniformly at random (the decomposition is pivot-order independent).
Decomposition staircase_decompose(const ChainComplex& c,
                                  std::optional<std::uint64_t> shuffle_seed = std::nullopt);

// W_k dimensions recomputed without elimination over Q[beta]: W0 is the
// beta=1 homology; for n >= 1 the second difference
//   -H(mod beta^(n+1)) + 2 H(mod beta^n) - H(mod beta^(n-1))
// of bigraded mod-beta^n homology equals (1+t) * W_n placed at staircase
// sources, and the (1+t) factor is divided out from the t-minimal end.
// Index n of the result is W_n.  Valid when no staircase exceeds k_max.
std::vector<BigradedDims> wk_from_oracle(const ChainComplex& c, int k_max);

BigradedDims forget_k(const GradedDims& dims);

}  // namespace akh
