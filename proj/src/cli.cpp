#include "akh/cli.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <tuple>

#include "akh/json_io.hpp"

namespace akh {

namespace {

struct Context {
    bool json = false;
    bool verbose = false;
    std::optional<int> limit_flag;
    std::ostringstream out, err;

    int limit() const {
        if (limit_flag) return *limit_flag;
        if (const char* env = std::getenv("AKH_MAX_CROSSINGS")) {
            try {
                return std::stoi(env);
            } catch (const std::exception&) {
                throw ParseError("AKH_MAX_CROSSINGS is not an integer");
            }
        }
        return kDefaultMaxCrossings;
    }
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int x = 15; x >= 0; --x, h >>= 4) s[x] = digits[h & 15];
    return s;
}

// Result cache: plain JSON files under AKH_CACHE_DIR, keyed by verb +
// canonical braid text + flags.  The cached document is exactly the --json
// output; text output is re-rendered from the parsed document either way, so
// a cache hit and a fresh run share the rendering path.
class Cache {
public:
    Cache(const std::string& verb, const BraidWord& braid, const std::string& flags) {
        const char* dir = std::getenv("AKH_CACHE_DIR");
        if (!dir || !*dir) return;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        std::string key = verb + "\n" + to_text(braid) + "\n" + flags;
        path_ = std::string(dir) + "/" + verb + "-" + hex64(fnv1a(key)) + ".json";
    }

    std::optional<Json> load() const {
        if (path_.empty()) return std::nullopt;
        std::ifstream in(path_);
        if (!in) return std::nullopt;
        try {
            return Json::parse(in);
        } catch (const Json::exception&) {
            return std::nullopt;
        }
    }

    void store(const Json& j) const {
        if (path_.empty()) return;
        std::ofstream out(path_);
        if (out) out << dump_json(j);
    }

private:
    std::string path_;
};

// Computes (or loads) the JSON document, then renders text from the parsed
// document.  compute() runs only on a cache miss.
template <typename Compute, typename Render>
void emit(Context& ctx, const std::string& verb, const BraidWord& braid, const std::string& flags,
          Compute compute, Render render) {
    Cache cache(verb, braid, flags);
    Json doc;
    if (std::optional<Json> hit = cache.load()) {
        doc = std::move(*hit);
    } else {
        doc = compute();
        cache.store(doc);
    }
    if (ctx.json)
        ctx.out << dump_json(doc);
    else
        ctx.out << render(doc) << "\n";
}

void note_complex_size(Context& ctx, const ChainComplex& c) {
    if (!ctx.verbose) return;
    ctx.err << "complex: " << c.generators.size() << " generators, " << c.entries.size()
            << " entries\n";
}

std::string signed_join(const LaurentPoly3& p, bool ascending) {
    if (p.is_zero()) return "0";
    return join_terms(p.term_strings(PolyStyle::display, ascending), " + ", " - ");
}

std::string render_annular_text(const Decomposition& d) {
    SpectralOutput s = spectral_from_decomposition(d);
    std::string out = "W0: " + signed_join(s.e_poly, false);
    for (const auto& [k, poly] : s.c_polys)
        out += "\nC[" + std::to_string(k) + "]: " + signed_join(poly, false);
    return out;
}

std::string render_braid_text(const BraidWord& b) {
    std::string out = "BR[" + std::to_string(b.strands) + ",{";
    for (std::size_t x = 0; x < b.letters.size(); ++x)
        out += (x ? "," : "") + std::to_string(b.letters[x]);
    return out + "}]";
}

std::string render_cube_text(const Json& doc) {
    // doc follows the cube schema: vertices with bits / nontrivial / depths,
    // but node sets are not stored there; recompute them for display.
    BraidWord b = braid_from_json(doc["braid"]);
    CubeData cube = build_cube(b, static_cast<int>(b.letters.size()));
    std::string out;
    for (const SmoothedDiagram& d : cube.diagrams) {
        std::string bits;
        for (int cf = 0; cf < d.vertex.count; ++cf) bits += d.vertex.bit(cf) ? '1' : '0';
        out += bits.empty() ? "-" : bits;
        out += ":";
        std::vector<std::vector<int>> nodes(d.cycles.size());
        for (std::size_t node = 0; node < d.cycle_of_node.size(); ++node)
            nodes[d.cycle_of_node[node]].push_back(static_cast<int>(node));
        for (std::size_t cy = 0; cy < d.cycles.size(); ++cy) {
            out += " {";
            for (std::size_t x = 0; x < nodes[cy].size(); ++x)
                out += (x ? "," : "") + std::to_string(nodes[cy][x]);
            out += "}";
            if (d.cycles[cy].nontrivial) out += "*" + std::to_string(d.cycles[cy].depth);
        }
        out += "\n";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

std::string render_reps_text(const Json& doc) {
    RepsResult r = reps_from_json(doc);
    std::string out = "basis ids:";
    for (int id : r.basis) out += " " + std::to_string(id);
    if (r.basis.empty()) out += " (none)";
    for (std::size_t x = 0; x < r.reps.size(); ++x) {
        out += "\nclass " + std::to_string(x + 1) + ":";
        for (const Rational& c : r.reps[x]) out += " " + c.to_string();
    }
    if (r.reps.empty()) out += "\nclasses: (none)";
    return out;
}

struct KhFlags {
    std::string differential = "full";
    std::string frobenius = "khovanov";
    bool keep_z = false;
};

void run_kh(Context& ctx, const BraidWord& braid, const KhFlags& f) {
    if (f.differential != "full" && f.differential != "annular")
        throw ParseError("--differential must be full or annular");
    if (f.frobenius != "khovanov" && f.frobenius != "lee")
        throw ParseError("--frobenius must be khovanov or lee");
    if (f.frobenius == "lee" && f.differential != "full")
        throw ParseError("the lee frobenius supports only the full differential");
    if (f.keep_z && f.differential != "annular")
        throw ParseError("--keep-z requires --differential annular");

    std::string flags =
        "differential=" + f.differential + ";frobenius=" + f.frobenius +
        ";keep_z=" + (f.keep_z ? "1" : "0");
    emit(
        ctx, "kh", braid, flags,
        [&] {
            const FrobeniusSpec& frob =
                f.frobenius == "lee" ? FrobeniusSpec::lee() : FrobeniusSpec::khovanov();
            DifferentialMode mode = f.differential == "annular" ? DifferentialMode::annular
                                                                : DifferentialMode::full;
            LaurentPoly3 p = kh_poincare(braid, frob, mode, f.keep_z, ctx.limit());
            if (ctx.verbose)
                ctx.err << "total rank " << p.coeff_sum().to_string() << "\n";
            return to_json(p);
        },
        [](const Json& doc) { return poly_from_json(doc).format(); });
}

void add_braid_verbs(CLI::App& app, Context& ctx) {
    // Each handler parses its braid inside the callback so malformed braid
    // text surfaces as exit 1 like any other input error.
    auto* kh = app.add_subcommand("kh", "Poincare polynomial of Khovanov-type homology");
    auto braid_arg = std::make_shared<std::string>();
    auto kh_flags = std::make_shared<KhFlags>();
    kh->add_option("braid", *braid_arg, "braid: \"S:g1,g2,...\" or a table name")->required();
    kh->add_option("--differential", kh_flags->differential, "full | annular");
    kh->add_option("--frobenius", kh_flags->frobenius, "khovanov | lee");
    kh->add_flag("--keep-z", kh_flags->keep_z, "keep the annular grading (annular only)");
    kh->callback([&ctx, braid_arg, kh_flags] {
        run_kh(ctx, parse_braid(*braid_arg), *kh_flags);
    });

    auto* annular = app.add_subcommand("annular", "W0 and staircase decomposition");
    auto an_braid = std::make_shared<std::string>();
    annular->add_option("braid", *an_braid, "braid text or table name")->required();
    annular->callback([&ctx, an_braid] {
        BraidWord b = parse_braid(*an_braid);
        emit(
            ctx, "annular", b, "",
            [&] {
                ChainComplex c = build_complex(b, FrobeniusSpec::khovanov(), ctx.limit());
                note_complex_size(ctx, c);
                return to_json(staircase_decompose(c));
            },
            [](const Json& doc) { return render_annular_text(decomposition_from_json(doc)); });
    });

    auto* sl2 = app.add_subcommand("sl2", "sl2 decomposition of annular homology");
    auto sl2_braid = std::make_shared<std::string>();
    sl2->add_option("braid", *sl2_braid, "braid text or table name")->required();
    sl2->callback([&ctx, sl2_braid] {
        BraidWord b = parse_braid(*sl2_braid);
        emit(
            ctx, "sl2", b, "",
            [&] { return to_json(sl2_decompose(b, ctx.limit())); },
            [](const Json& doc) { return render_sl2(sl2_from_json(doc)); });
    });

    auto* spectral = app.add_subcommand("spectral", "triply graded invariant (E and C[k])");
    auto sp_braid = std::make_shared<std::string>();
    spectral->add_option("braid", *sp_braid, "braid text or table name")->required();
    spectral->callback([&ctx, sp_braid] {
        BraidWord b = parse_braid(*sp_braid);
        emit(
            ctx, "spectral", b, "",
            [&] { return to_json(spectral_annular_kh(b, ctx.limit())); },
            [](const Json& doc) { return render_spectral(spectral_from_json(doc)); });
    });

    auto* cube = app.add_subcommand("cube", "cube of resolutions, one line per vertex");
    auto cube_braid = std::make_shared<std::string>();
    cube->add_option("braid", *cube_braid, "braid text or table name")->required();
    cube->callback([&ctx, cube_braid] {
        BraidWord b = parse_braid(*cube_braid);
        emit(
            ctx, "cube", b, "",
            [&] { return to_json(build_cube(b, ctx.limit())); },
            [](const Json& doc) { return render_cube_text(doc); });
    });

    auto* reps = app.add_subcommand("reps", "homology representatives in one (i,j) grading");
    auto rp = std::make_shared<std::tuple<std::string, int, int, std::string>>();
    reps->add_option("braid", std::get<0>(*rp), "braid text or table name")->required();
    reps->add_option("--i", std::get<1>(*rp), "homological grading")->required();
    reps->add_option("--j", std::get<2>(*rp), "quantum grading")->required();
    std::get<3>(*rp) = "full";
    reps->add_option("--differential", std::get<3>(*rp), "full | annular");
    reps->callback([&ctx, rp] {
        const auto& [braid_text, i, j, differential] = *rp;
        if (differential != "full" && differential != "annular")
            throw ParseError("--differential must be full or annular");
        BraidWord b = parse_braid(braid_text);
        std::string flags =
            "i=" + std::to_string(i) + ";j=" + std::to_string(j) + ";differential=" + differential;
        emit(
            ctx, "reps", b, flags,
            [&, i = i, j = j, differential = differential] {
                ChainComplex c = build_complex(b, FrobeniusSpec::khovanov(), ctx.limit());
                note_complex_size(ctx, c);
                DifferentialMode mode = differential == "annular" ? DifferentialMode::annular
                                                                  : DifferentialMode::full;
                return to_json(representatives_in_grading(c, i, j, mode), i, j);
            },
            [](const Json& doc) { return render_reps_text(doc); });
    });

    auto* stab = app.add_subcommand("stabilize", "Markov stabilizations of a braid");
    auto st = std::make_shared<std::pair<std::string, std::string>>();
    stab->add_option("braid", st->first, "braid text or table name")->required();
    stab->add_option("--signs", st->second, "comma separated +1/-1 list, e.g. --signs=-1,1")
        ->required();
    stab->callback([&ctx, st] {
        BraidWord b = parse_braid(st->first);
        std::vector<int> signs;
        std::stringstream ss(st->second);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                signs.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("--signs: \"" + tok + "\" is not an integer");
            }
        }
        BraidWord out = stabilize(b, signs);
        if (ctx.json)
            ctx.out << dump_json(to_json(out));
        else
            ctx.out << render_braid_text(out) << "\n";
    });

    auto* euler = app.add_subcommand("euler", "graded Euler characteristic by state sum");
    auto eu_braid = std::make_shared<std::string>();
    euler->add_option("braid", *eu_braid, "braid text or table name")->required();
    euler->callback([&ctx, eu_braid] {
        BraidWord b = parse_braid(*eu_braid);
        emit(
            ctx, "euler", b, "",
            [&] { return to_json(graded_euler(b, ctx.limit())); },
            [](const Json& doc) { return poly_from_json(doc).format(); });
    });
}

void add_experiment_verb(CLI::App& app, Context& ctx) {
    auto* exp = app.add_subcommand("experiment", "conjecture scans and the separation report");
    struct ExpOpts {
        std::string name;
        std::string braid_a = "8_12a", braid_b = "8_12b";
        int max_length = 4;
        int samples = 16;
        int max_strands = 4;
        std::uint64_t seed = 0;
    };
    auto eo = std::make_shared<ExpOpts>();
    exp->add_option("name", eo->name, "conjecture1 | conjecture2 | separate")->required();
    exp->add_option("first", eo->braid_a, "first braid (separate)");
    exp->add_option("second", eo->braid_b, "second braid (separate)");
    exp->add_option("--max-length", eo->max_length, "max word length (default 4; 6 for conjecture2)");
    exp->add_option("--samples", eo->samples, "random samples for conjecture2 (default 16)");
    exp->add_option("--max-strands", eo->max_strands, "max strands for conjecture2 (default 4)");
    exp->add_option("--seed", eo->seed, "random seed (default 0)");
    exp->callback([&ctx, eo, exp] {
        bool length_given = exp->count("--max-length") > 0;
        if (eo->name == "conjecture1") {
            ExperimentReport r = conjecture1_scan(eo->max_length, eo->seed, ctx.limit());
            ctx.out << (ctx.json ? dump_json(to_json(r)) : render_report(r));
        } else if (eo->name == "conjecture2") {
            int len = length_given ? eo->max_length : 6;
            ExperimentReport r =
                conjecture2_scan(eo->samples, eo->max_strands, len, eo->seed, ctx.limit());
            ctx.out << (ctx.json ? dump_json(to_json(r)) : render_report(r));
        } else if (eo->name == "separate") {
            SeparationReport r =
                separate_pair(parse_braid(eo->braid_a), parse_braid(eo->braid_b), ctx.limit());
            ctx.out << (ctx.json ? dump_json(to_json(r)) : render_separation(r));
        } else {
            throw ParseError("unknown experiment \"" + eo->name +
                             "\" (conjecture1 | conjecture2 | separate)");
        }
    });
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult result;
    Context ctx;

    CLI::App app{"triply graded annular Khovanov invariant of braid closures"};
    app.require_subcommand(1);
    app.add_flag("--json", ctx.json, "emit the JSON document instead of text");
    app.add_flag("--verbose", ctx.verbose, "print sizes and ranks to stderr");
    app.add_option_function<int>(
        "--limit", [&ctx](int v) { ctx.limit_flag = v; },
        "max crossings (default AKH_MAX_CROSSINGS or 20)");
    app.fallthrough();  // global flags usable after the subcommand; set before verbs inherit it

    add_braid_verbs(app, ctx);
    add_experiment_verb(app, ctx);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        result.code = code == 0 ? 0 : 1;
        result.out = out.str();
        result.err = err.str();
        return result;
    } catch (const ParseError& e) {
        result.code = 1;
        result.err = std::string("error: ") + e.what() + "\n";
        result.out = ctx.out.str();
        return result;
    } catch (const LimitError& e) {
        result.code = 3;
        result.err = std::string("error: ") + e.what() + "\n";
        result.out = ctx.out.str();
        return result;
    } catch (const InternalError& e) {
        result.code = 2;
        result.err = std::string("internal error: ") + e.what() + "\n";
        result.out = ctx.out.str();
        return result;
    } catch (const std::exception& e) {
        result.code = 2;
        result.err = std::string("internal error: ") + e.what() + "\n";
        result.out = ctx.out.str();
        return result;
    }

    result.out = ctx.out.str();
    result.err = ctx.err.str();
    return result;
}

}  // namespace akh
