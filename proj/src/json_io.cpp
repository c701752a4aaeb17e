#include "akh/json_io.hpp"

#include <algorithm>

namespace akh {

namespace {

Json grading_entry(const Trigrading& g, int dim) {
    Json e;
    e["t"] = g.i;
    e["q"] = g.j;
    e["z"] = g.k;
    e["dim"] = dim;
    return e;
}

// (t, q, z) descending over a GradedDims map (which is ascending).
std::vector<std::pair<Trigrading, int>> descending(const GradedDims& dims) {
    std::vector<std::pair<Trigrading, int>> v(dims.begin(), dims.end());
    std::reverse(v.begin(), v.end());
    return v;
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("json: missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::string string_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw ParseError(std::string("json: missing string field \"") + key + "\"");
    return j[key].get<std::string>();
}

const Json& array_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("json: missing array field \"") + key + "\"");
    return j[key];
}

}  // namespace

Json to_json(const LaurentPoly3& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["q"] = e.q;
        term["t"] = e.t;
        term["z"] = e.z;
        term["coeff"] = c.to_string();
        arr.push_back(std::move(term));
    }
    return arr;
}

LaurentPoly3 poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("json: polynomial must be an array");
    LaurentPoly3 p;
    for (const Json& term : j)
        p.add_term(Exponents{int_field(term, "q"), int_field(term, "t"), int_field(term, "z")},
                   Rational::from_string(string_field(term, "coeff")));
    return p;
}

Json to_json(const Decomposition& d) {
    Json out;
    out["W0"] = Json::array();
    for (const auto& [g, dim] : descending(d.w0)) out["W0"].push_back(grading_entry(g, dim));

    // Ascending k; within one k the map order on Trigrading is ascending, so
    // collect per k and reverse.
    out["staircases"] = Json::array();
    std::map<int, std::vector<std::pair<Trigrading, int>>> by_k;
    for (const auto& [key, count] : d.staircases) by_k[key.first].push_back({key.second, count});
    for (auto& [k, v] : by_k) {
        std::reverse(v.begin(), v.end());
        for (const auto& [g, count] : v) {
            Json e;
            e["k"] = k;
            e["t"] = g.i;
            e["q"] = g.j;
            e["z"] = g.k;
            e["dim"] = count;
            out["staircases"].push_back(std::move(e));
        }
    }
    return out;
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    for (const Json& e : array_field(j, "W0"))
        d.w0[Trigrading{int_field(e, "t"), int_field(e, "q"), int_field(e, "z")}] +=
            int_field(e, "dim");
    for (const Json& e : array_field(j, "staircases"))
        d.staircases[{int_field(e, "k"),
                      Trigrading{int_field(e, "t"), int_field(e, "q"), int_field(e, "z")}}] +=
            int_field(e, "dim");
    return d;
}

Json to_json(const SpectralOutput& s) {
    Json out;
    out["E"] = to_json(s.e_poly);
    out["C"] = Json::array();
    for (const auto& [k, poly] : s.c_polys) {
        Json e;
        e["k"] = k;
        e["poly"] = to_json(poly);
        out["C"].push_back(std::move(e));
    }
    return out;
}

SpectralOutput spectral_from_json(const Json& j) {
    SpectralOutput s;
    if (!j.contains("E")) throw ParseError("json: spectral output needs \"E\"");
    s.e_poly = poly_from_json(j["E"]);
    for (const Json& e : array_field(j, "C")) {
        if (!e.contains("poly")) throw ParseError("json: staircase entry needs \"poly\"");
        s.c_polys[int_field(e, "k")] += poly_from_json(e["poly"]);
    }
    return s;
}

Json to_json(const std::vector<Sl2Summand>& summands) {
    Json arr = Json::array();
    for (const Sl2Summand& s : summands) {
        Json e;
        e["n"] = s.highest_weight;
        e["i"] = s.i;
        e["jk"] = s.jk;
        e["mult"] = s.mult;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::vector<Sl2Summand> sl2_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("json: sl2 decomposition must be an array");
    std::vector<Sl2Summand> out;
    for (const Json& e : j)
        out.push_back(Sl2Summand{int_field(e, "n"), int_field(e, "i"), int_field(e, "jk"),
                                 int_field(e, "mult")});
    return out;
}

Json to_json(const RepsResult& r, int i, int j) {
    Json out;
    out["i"] = i;
    out["j"] = j;
    out["basis"] = r.basis;
    out["classes"] = Json::array();
    for (const std::vector<Rational>& rep : r.reps) {
        Json v = Json::array();
        for (const Rational& c : rep) v.push_back(c.to_string());
        out["classes"].push_back(std::move(v));
    }
    return out;
}

RepsResult reps_from_json(const Json& j) {
    RepsResult r;
    for (const Json& e : array_field(j, "basis")) {
        if (!e.is_number_integer()) throw ParseError("json: basis entries must be integers");
        r.basis.push_back(e.get<int>());
    }
    for (const Json& cls : array_field(j, "classes")) {
        if (!cls.is_array()) throw ParseError("json: each class must be an array");
        std::vector<Rational> rep;
        for (const Json& c : cls) {
            if (!c.is_string()) throw ParseError("json: class coefficients must be strings");
            rep.push_back(Rational::from_string(c.get<std::string>()));
        }
        r.reps.push_back(std::move(rep));
    }
    return r;
}

Json to_json(const BraidWord& b) {
    Json out;
    out["strands"] = b.strands;
    out["letters"] = b.letters;
    return out;
}

BraidWord braid_from_json(const Json& j) {
    BraidWord b;
    b.strands = int_field(j, "strands");
    for (const Json& e : array_field(j, "letters")) {
        if (!e.is_number_integer()) throw ParseError("json: letters must be integers");
        b.letters.push_back(e.get<int>());
    }
    validate(b);
    return b;
}

Json to_json(const CubeData& cube) {
    Json out;
    out["braid"] = to_json(cube.braid);
    out["vertices"] = Json::array();
    int c = static_cast<int>(cube.braid.letters.size());
    for (const SmoothedDiagram& d : cube.diagrams) {
        Json v;
        std::string bits;
        for (int cf = 0; cf < c; ++cf) bits += d.vertex.bit(cf) ? '1' : '0';
        v["bits"] = bits;
        v["cycles"] = static_cast<int>(d.cycles.size());
        Json flags = Json::array(), depths = Json::array();
        for (const Cycle& cy : d.cycles) {
            flags.push_back(cy.nontrivial);
            depths.push_back(cy.depth);
        }
        v["nontrivial"] = std::move(flags);
        v["depths"] = std::move(depths);
        out["vertices"].push_back(std::move(v));
    }
    return out;
}

Json to_json(const ExperimentReport& r) {
    Json out;
    out["name"] = r.name;
    out["seed"] = r.seed;
    out["cases"] = Json::array();
    for (const ExperimentCase& c : r.cases) {
        Json e;
        e["input"] = c.input;
        e["computed"] = c.computed;
        e["expected"] = c.expected;
        e["verdict"] = c.verdict;
        e["note"] = c.note;
        out["cases"].push_back(std::move(e));
    }
    out["summary"] = r.summary;
    return out;
}

ExperimentReport report_from_json(const Json& j) {
    ExperimentReport r;
    r.name = string_field(j, "name");
    if (!j.contains("seed") || !j["seed"].is_number())
        throw ParseError("json: missing numeric field \"seed\"");
    r.seed = j["seed"].get<std::uint64_t>();
    for (const Json& e : array_field(j, "cases"))
        r.cases.push_back(ExperimentCase{string_field(e, "input"), string_field(e, "computed"),
                                         string_field(e, "expected"), string_field(e, "verdict"),
                                         string_field(e, "note")});
    r.summary = string_field(j, "summary");
    return r;
}

Json to_json(const SeparationReport& r) {
    Json out;
    out["first"] = to_json(r.a);
    out["second"] = to_json(r.b);
    out["e_equal"] = r.e_equal;
    out["only_in_first"] = r.a_only;
    out["only_in_second"] = r.b_only;
    out["z_shift_only"] = r.z_shift_only;
    out["z1_equal"] = r.z1_equal;
    out["diff"] = to_json(r.diff);
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace akh
