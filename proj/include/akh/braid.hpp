#pragma once

// Braid words and their closures.  A word on `strands` strands is a sequence
// of nonzero letters g with |g| < strands; positive g crosses strand g over
// strand g+1, negative g crosses under.  Letters act left to right, bottom to
// top of the diagram.

#include <map>
#include <string>
#include <vector>

#include "akh/errors.hpp"

namespace akh {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct CrossingCounts {
    int positive = 0;
    int negative = 0;

    int total() const { return positive + negative; }
    int writhe() const { return positive - negative; }
};

// Throws ParseError unless 1 <= strands and every letter g satisfies
// 0 < |g| < strands.
void validate(const BraidWord& braid);

// Accepts "S:g1,g2,...,gk" (e.g. "3:-1,2,-1,2", letters optional after the
// colon) or a name from named_braids().  Throws ParseError on anything else.
BraidWord parse_braid(const std::string& text);

// Small table of named closures used throughout: 3_1, 4_1, 8_12a, 8_12b.
const std::map<std::string, BraidWord>& named_braids();

// "S:g1,...,gk"; parse_braid(to_text(b)) == b.
std::string to_text(const BraidWord& braid);

// Positive Markov stabilizations: each sign s in turn adds one strand and
// appends the letter s * (current strands).  Signs must be +1 or -1.
BraidWord stabilize(const BraidWord& braid, const std::vector<int>& signs);

CrossingCounts crossing_counts(const BraidWord& braid);

// Components of the closure: cycle count of the underlying permutation.
int closure_components(const BraidWord& braid);

// Mirror image: every letter negated.  Closure is the mirror link.
BraidWord mirror(const BraidWord& braid);

}  // namespace akh
