#pragma once

// User-facing invariants of a braid closure: Poincaré polynomials, the sl2
// decomposition of sutured annular Khovanov homology, the spectral invariant
// (W0 and the staircases), page dimensions, homology representatives, and the
// state-sum Euler characteristic.

#include <map>
#include <string>
#include <vector>

#include "akh/poly.hpp"
#include "akh/reduce.hpp"

namespace akh {

enum class DifferentialMode { full, annular };

// Monomial sum q^j t^i z^k weighted by dimension.
LaurentPoly3 dims_to_poly(const GradedDims& dims);
LaurentPoly3 dims_to_poly(const BigradedDims& dims);

// Poincaré polynomial of the chosen specialization: full = beta=1 (bigraded),
// annular = beta=0 (z forgotten unless keep_z).  The lee Frobenius bypasses
// beta entirely and reports ranks by homological degree only, in t.
LaurentPoly3 kh_poincare(const BraidWord& braid, const FrobeniusSpec& frob, DifferentialMode mode,
                         bool keep_z = false, int max_crossings = kDefaultMaxCrossings);

// build_complex + staircase_decompose with the khovanov Frobenius.
Decomposition annular_decomposition(const BraidWord& braid,
                                    int max_crossings = kDefaultMaxCrossings);

// Trigraded beta=0 homology implied by a decomposition: W0 plus, per
// staircase, its source and target gradings.
GradedDims sakh_dims(const Decomposition& d);

struct Sl2Summand {
    int highest_weight = 0;
    int i = 0;
    int jk = 0;  // j - k, constant on each irreducible
    int mult = 0;

    friend bool operator==(const Sl2Summand&, const Sl2Summand&) = default;
};

// Decomposes SAKH into irreducibles V[n]: classes grouped by (i, j-k); within
// a group the weight-k dims w_k must be symmetric, and V[n] has multiplicity
// w_n - w_(n+2) taken from the top weight down.
std::vector<Sl2Summand> sl2_decompose_dims(const GradedDims& sakh);
std::vector<Sl2Summand> sl2_decompose(const BraidWord& braid,
                                      int max_crossings = kDefaultMaxCrossings);

// "V[0]/(q^9 t^3)+V[0]/(q^5 t^2)+V[0]/(q^5 t)+V[2]/q^3" — ascending (i, jk).
std::string render_sl2(const std::vector<Sl2Summand>& summands);

struct SpectralOutput {
    LaurentPoly3 e_poly;                  // W0 trigradings as monomials
    std::map<int, LaurentPoly3> c_polys;  // k -> staircase source gradings

    friend bool operator==(const SpectralOutput&, const SpectralOutput&) = default;
};

SpectralOutput spectral_from_decomposition(const Decomposition& d);
SpectralOutput spectral_annular_kh(const BraidWord& braid,
                                   int max_crossings = kDefaultMaxCrossings);

// "(q z + 1/(q z)) E" with " + (...) C[k]" per staircase exponent; terms
// inside each group descend in (t, q, z).
std::string render_spectral(const SpectralOutput& s);

// Dimensions of the page E_j = W0 + (1+t) (sum over k > j/2 of W_k); the
// t-shifted copy sits at the staircase target trigrading.
GradedDims spectral_page(const Decomposition& d, int j);

struct RepsResult {
    std::vector<int> basis;  // generator ids at (i,j), ascending
    std::vector<std::vector<Rational>> reps;

    friend bool operator==(const RepsResult&, const RepsResult&) = default;
};

// Chain basis at bigrading (i,j) and one representative per homology class of
// the chosen specialization (full = beta=1, annular = beta=0).
RepsResult representatives_in_grading(const ChainComplex& c, int i, int j, DifferentialMode mode);

// State sum straight off the cube, bypassing generators: over vertices v,
// (-1)^(|v| - n-) q^(|v| + n+ - 2 n-) (q + q^-1)^(#cycles).  Equals
// kh_poincare(b, khovanov, full) at t = -1.
LaurentPoly3 graded_euler(const BraidWord& braid, int max_crossings = kDefaultMaxCrossings);

}  // namespace akh
