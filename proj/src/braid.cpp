#include "akh/braid.hpp"

#include <charconv>
#include <numeric>

namespace akh {

namespace {

int parse_int(const std::string& text, const std::string& what) {
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ParseError("bad " + what + ": '" + text + "'");
    return value;
}

}  // namespace

void validate(const BraidWord& braid) {
    if (braid.strands < 1)
        throw ParseError("braid needs at least one strand, got " + std::to_string(braid.strands));
    for (int g : braid.letters) {
        if (g == 0) throw ParseError("braid letter 0 is not a generator");
        int a = g < 0 ? -g : g;
        if (a >= braid.strands)
            throw ParseError("letter " + std::to_string(g) + " out of range on " +
                             std::to_string(braid.strands) + " strands");
    }
}

BraidWord parse_braid(const std::string& text) {
    const auto& table = named_braids();
    if (auto it = table.find(text); it != table.end()) return it->second;

    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("expected 'strands:letters' or a known name, got '" + text + "'");

    BraidWord braid;
    braid.strands = parse_int(text.substr(0, colon), "strand count");
    std::string rest = text.substr(colon + 1);
    if (!rest.empty()) {
        std::size_t pos = 0;
        while (true) {
            auto comma = rest.find(',', pos);
            std::string item =
                comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
            braid.letters.push_back(parse_int(item, "braid letter"));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    validate(braid);
    return braid;
}

const std::map<std::string, BraidWord>& named_braids() {
    static const std::map<std::string, BraidWord> table = {
        {"3_1", {2, {-1, -1, -1}}},
        {"4_1", {3, {-1, 2, -1, 2}}},
        {"8_12a", {5, {-1, 2, -1, -3, 2, 4, -3, 4}}},
        {"8_12b", {5, {-1, 2, -3, 4, -3, 4, -2, -1, 3, 2}}},
    };
    return table;
}

std::string to_text(const BraidWord& braid) {
    std::string out = std::to_string(braid.strands) + ":";
    for (std::size_t i = 0; i < braid.letters.size(); ++i)
        out += (i ? "," : "") + std::to_string(braid.letters[i]);
    return out;
}

BraidWord stabilize(const BraidWord& braid, const std::vector<int>& signs) {
    BraidWord out = braid;
    for (int s : signs) {
        if (s != 1 && s != -1)
            throw ParseError("stabilization sign must be +1 or -1, got " + std::to_string(s));
        out.letters.push_back(s * out.strands);
        out.strands += 1;
    }
    return out;
}

CrossingCounts crossing_counts(const BraidWord& braid) {
    CrossingCounts counts;
    for (int g : braid.letters) (g > 0 ? counts.positive : counts.negative) += 1;
    return counts;
}

int closure_components(const BraidWord& braid) {
    std::vector<int> perm(braid.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int g : braid.letters) {
        int p = (g < 0 ? -g : g) - 1;
        std::swap(perm[p], perm[p + 1]);
    }
    std::vector<bool> seen(braid.strands, false);
    int cycles = 0;
    for (int s = 0; s < braid.strands; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int u = s; !seen[u]; u = perm[u]) seen[u] = true;
    }
    return cycles;
}

BraidWord mirror(const BraidWord& braid) {
    BraidWord out = braid;
    for (int& g : out.letters) g = -g;
    return out;
}

}  // namespace akh
