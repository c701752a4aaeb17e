#pragma once

// Conjecture harnesses and the braid-pair separation experiment.  Verdicts
// never hard-fail anything: conjectures are hypotheses, and a counterexample
// is a finding to report, not an error.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "akh/invariants.hpp"

namespace akh {

struct ExperimentCase {
    std::string input;     // braid text
    std::string computed;
    std::string expected;  // empty when there is no reference value to compare
    std::string verdict;   // consistent | counterexample | unexpected
    std::string note;
};

struct ExperimentReport {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<ExperimentCase> cases;
    std::string summary;
};

// Deterministic uniform integer in [lo, hi] by rejection; unlike
// std::uniform_int_distribution this is stable across standard libraries.
std::uint64_t det_uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

// Random braid: strands uniform in [min_strands, max_strands], length uniform
// in [1, max_length], letters uniform over +-{1..strands-1}.
BraidWord random_braid(std::mt19937_64& rng, int min_strands, int max_strands, int max_length);

// The stabilized unknot sigma_n^(eps_n) ... sigma_1^(eps_1) for every sign
// sequence of length 0..max_length (a seeded sample of 256 when there are
// more); W0 is compared against z^(-sum eps) (q z + q^-1 z^-1).  Forgetting z
// must always give q + q^-1 regardless of the conjecture ("unexpected" if not).
ExperimentReport conjecture1_scan(int max_length, std::uint64_t seed,
                                  int max_crossings = kDefaultMaxCrossings);

// Random braids; counterexample iff some staircase has k >= 2.
ExperimentReport conjecture2_scan(int samples, int max_strands, int max_length,
                                  std::uint64_t seed, int max_crossings = kDefaultMaxCrossings);

struct SeparationReport {
    SpectralOutput a, b;
    bool e_equal = false;
    int a_only = 0, b_only = 0;   // monomials of one e_poly absent from the other (with multiplicity)
    bool z_shift_only = false;    // per (t,q) slot, z-multisets agree up to a uniform shift
    bool z1_equal = false;        // e_polys agree after forgetting z
    LaurentPoly3 diff;            // e_a - e_b
};

SeparationReport separate_pair(const BraidWord& a, const BraidWord& b,
                               int max_crossings = kDefaultMaxCrossings);

std::string render_report(const ExperimentReport& r);
std::string render_separation(const SeparationReport& r);

}  // namespace akh
