#include "akh/experiments.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace akh {

std::uint64_t det_uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    require(lo <= hi, "det_uniform: empty range");
    std::uint64_t span = hi - lo + 1;
    if (span == 0) return rng();  // full 64-bit range
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
        (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
    std::uint64_t r = rng();
    while (r > limit && limit != std::numeric_limits<std::uint64_t>::max()) r = rng();
    return lo + r % span;
}

BraidWord random_braid(std::mt19937_64& rng, int min_strands, int max_strands, int max_length) {
    BraidWord b;
    b.strands = static_cast<int>(det_uniform(rng, min_strands, max_strands));
    int length = static_cast<int>(det_uniform(rng, 1, max_length));
    for (int x = 0; x < length; ++x) {
        int g = static_cast<int>(det_uniform(rng, 1, b.strands - 1));
        b.letters.push_back(det_uniform(rng, 0, 1) ? g : -g);
    }
    return b;
}

namespace {

// sigma_n^(eps_n) ... sigma_1^(eps_1); signs[x] is eps_(x+1).
BraidWord conjecture1_braid(const std::vector<int>& signs) {
    BraidWord b;
    int n = static_cast<int>(signs.size());
    b.strands = n + 1;
    for (int x = n; x >= 1; --x) b.letters.push_back(signs[x - 1] * x);
    return b;
}

std::string signs_text(const std::vector<int>& signs) {
    std::string out = "(";
    for (std::size_t x = 0; x < signs.size(); ++x)
        out += (x ? "," : "") + std::string(signs[x] > 0 ? "+1" : "-1");
    return out + ")";
}

}  // namespace

ExperimentReport conjecture1_scan(int max_length, std::uint64_t seed, int max_crossings) {
    if (max_length > max_crossings)
        throw LimitError("conjecture1_scan: max_length exceeds the crossing limit");
    ExperimentReport report;
    report.name = "conjecture1";
    report.seed = seed;

    std::vector<std::vector<int>> sequences;
    std::uint64_t count = 0;
    for (int len = 0; len <= max_length; ++len) count += std::uint64_t{1} << len;
    if (count <= 256) {
        for (int len = 0; len <= max_length; ++len)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
                std::vector<int> signs(len);
                for (int x = 0; x < len; ++x) signs[x] = (mask >> x) & 1 ? 1 : -1;
                sequences.push_back(std::move(signs));
            }
    } else {
        std::mt19937_64 rng(seed);
        std::set<std::vector<int>> seen;
        while (seen.size() < 256) {
            int len = static_cast<int>(det_uniform(rng, 0, max_length));
            std::vector<int> signs(len);
            for (int x = 0; x < len; ++x) signs[x] = det_uniform(rng, 0, 1) ? 1 : -1;
            seen.insert(std::move(signs));
        }
        sequences.assign(seen.begin(), seen.end());
    }

    int consistent = 0;
    for (const std::vector<int>& signs : sequences) {
        BraidWord b = conjecture1_braid(signs);
        LaurentPoly3 w0 = dims_to_poly(annular_decomposition(b, max_crossings).w0);

        int sum = 0;
        for (int s : signs) sum += s;
        LaurentPoly3 expected = LaurentPoly3::monomial(1, 0, 0, -sum) *
                                (LaurentPoly3::monomial(1, 1, 0, 1) +
                                 LaurentPoly3::monomial(1, -1, 0, -1));

        ExperimentCase item;
        item.input = to_text(b);
        item.note = "signs " + signs_text(signs);
        item.computed = w0.format();
        item.expected = expected.format();
        LaurentPoly3 unknot_kh =
            LaurentPoly3::monomial(1, 1, 0, 0) + LaurentPoly3::monomial(1, -1, 0, 0);
        if (!(w0.forget_variable('z') == unknot_kh)) {
            item.verdict = "unexpected";
            item.note += "; z-forgotten W0 is not the unknot Kh polynomial";
        } else if (w0 == expected) {
            item.verdict = "consistent";
            ++consistent;
        } else {
            item.verdict = "counterexample";
        }
        report.cases.push_back(std::move(item));
    }
    report.summary = std::to_string(consistent) + "/" + std::to_string(report.cases.size()) +
                     " cases consistent with W0 = z^(-sum) (q z + 1/(q z))";
    return report;
}

ExperimentReport conjecture2_scan(int samples, int max_strands, int max_length,
                                  std::uint64_t seed, int max_crossings) {
    if (max_length > max_crossings)
        throw LimitError("conjecture2_scan: max_length exceeds the crossing limit");
    if (max_strands < 2) throw ParseError("conjecture2_scan: need at least 2 strands");
    ExperimentReport report;
    report.name = "conjecture2";
    report.seed = seed;

    std::mt19937_64 rng(seed);
    int consistent = 0;
    for (int s = 0; s < samples; ++s) {
        BraidWord b = random_braid(rng, 2, max_strands, max_length);
        Decomposition d = annular_decomposition(b, max_crossings);

        int high = 0;
        std::string found;
        for (const auto& [key, mult] : d.staircases)
            if (key.first >= 2) {
                high += mult;
                found += (found.empty() ? "" : ", ") + std::string("k=") +
                         std::to_string(key.first) + " at (i=" + std::to_string(key.second.i) +
                         ",j=" + std::to_string(key.second.j) + ")x" + std::to_string(mult);
            }

        ExperimentCase item;
        item.input = to_text(b);
        item.expected = "W_k = 0 for k >= 2";
        item.computed = high == 0 ? "all staircases have k <= 1" : found;
        item.verdict = high == 0 ? "consistent" : "counterexample";
        if (high == 0) ++consistent;
        report.cases.push_back(std::move(item));
    }
    report.summary = std::to_string(consistent) + "/" + std::to_string(report.cases.size()) +
                     " cases consistent with W_k = 0 for k >= 2";
    return report;
}

SeparationReport separate_pair(const BraidWord& a, const BraidWord& b, int max_crossings) {
    SeparationReport r;
    r.a = spectral_annular_kh(a, max_crossings);
    r.b = spectral_annular_kh(b, max_crossings);
    r.e_equal = r.a.e_poly == r.b.e_poly;
    r.diff = r.a.e_poly - r.b.e_poly;
    for (const auto& [e, c] : r.diff.terms()) {
        long v = c.to_long();
        (v > 0 ? r.a_only : r.b_only) += static_cast<int>(v > 0 ? v : -v);
    }
    r.z1_equal = r.a.e_poly.forget_variable('z') == r.b.e_poly.forget_variable('z');

    // Per (t,q) slot: sorted z-lists (with multiplicity) equal up to one shift.
    auto slots = [](const LaurentPoly3& p) {
        std::map<std::pair<int, int>, std::vector<int>> out;
        for (const auto& [e, c] : p.terms())
            for (long x = 0; x < c.to_long(); ++x) out[{e.t, e.q}].push_back(e.z);
        return out;
    };
    auto sa = slots(r.a.e_poly);
    auto sb = slots(r.b.e_poly);
    r.z_shift_only = sa.size() == sb.size();
    if (r.z_shift_only)
        for (auto ita = sa.begin(), itb = sb.begin(); ita != sa.end(); ++ita, ++itb) {
            if (ita->first != itb->first || ita->second.size() != itb->second.size()) {
                r.z_shift_only = false;
                break;
            }
            int shift = itb->second.front() - ita->second.front();
            for (std::size_t x = 0; x < ita->second.size(); ++x)
                if (itb->second[x] - ita->second[x] != shift) {
                    r.z_shift_only = false;
                    break;
                }
            if (!r.z_shift_only) break;
        }
    return r;
}

std::string render_report(const ExperimentReport& r) {
    std::string out = "experiment " + r.name + " (seed " + std::to_string(r.seed) + ")\n";
    for (std::size_t x = 0; x < r.cases.size(); ++x) {
        const ExperimentCase& c = r.cases[x];
        out += "  case " + std::to_string(x + 1) + ": " + c.input + "\n";
        out += "    computed: " + c.computed + "\n";
        if (!c.expected.empty()) out += "    expected: " + c.expected + "\n";
        out += "    verdict:  " + c.verdict + (c.note.empty() ? "" : "  [" + c.note + "]") + "\n";
    }
    out += "summary: " + r.summary + "\n";
    return out;
}

std::string render_separation(const SeparationReport& r) {
    std::string out;
    out += "first:  " + render_spectral(r.a) + "\n";
    out += "second: " + render_spectral(r.b) + "\n";
    if (r.e_equal) {
        out += "E-polynomials: identical\n";
    } else {
        out += "E-polynomials: differ (" + std::to_string(r.a_only) + " monomials only in first, " +
               std::to_string(r.b_only) + " only in second)\n";
        out += "difference (first - second): " + r.diff.format() + "\n";
    }
    out += std::string("z-regrading only: ") + (r.z_shift_only ? "yes" : "no") + "\n";
    out += std::string("equal at z=1: ") + (r.z1_equal ? "yes" : "no") + "\n";
    return out;
}

}  // namespace akh
