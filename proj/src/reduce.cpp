#include "akh/reduce.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace akh {

namespace {

// Sparse Gaussian elimination on a graded complex.  Entries sit in per-source
// ordered maps plus a column index; pivot candidates are bucketed by
// (beta-exponent, homological degree), and the front bucket is scanned for
// the tie-break.  Eliminating pivot a: s0 -> t0 updates its degree matrix by
// omega - kappa a^-1 gamma (exponents are endpoint-determined, so scalars are
// all that change), then drops s0's column in the degree below and t0's row
// in the degree above; both drops are exact in the split basis, not
// approximations.  A pivot of exponent n >= 1 splits off a staircase summand.
struct Engine {
    const std::vector<int>& deg;
    const std::vector<int>* ann;  // annular gradings; null = field mode (exponent 0)
    std::optional<std::mt19937_64> rng;

    std::vector<std::map<int, Rational>> row;  // src -> tgt -> coeff
    std::vector<std::set<int>> col;            // tgt -> srcs
    std::map<std::pair<int, int>, std::set<std::pair<int, int>>> buckets;
    std::vector<char> alive;
    std::vector<std::pair<int, int>> staircases;  // (exponent >= 1, src)

    Engine(const std::vector<int>& deg_, const std::vector<int>* ann_,
           std::optional<std::uint64_t> seed)
        : deg(deg_), ann(ann_) {
        if (seed) rng.emplace(*seed);
        row.resize(deg.size());
        col.resize(deg.size());
        alive.assign(deg.size(), 1);
    }

    int exponent(int s, int t) const {
        if (!ann) return 0;
        int d = (*ann)[s] - (*ann)[t];
        require(d >= 0 && d % 2 == 0, "elimination: negative or odd beta-exponent");
        return d / 2;
    }

    void add_to(int s, int t, const Rational& delta) {
        if (delta.is_zero()) return;
        auto it = row[s].find(t);
        if (it == row[s].end()) {
            row[s].emplace(t, delta);
            col[t].insert(s);
            buckets[{exponent(s, t), deg[s]}].insert({s, t});
        } else {
            it->second += delta;
            if (it->second.is_zero()) erase(s, t);
        }
    }

    void erase(int s, int t) {
        row[s].erase(t);
        col[t].erase(s);
        auto key = std::pair{exponent(s, t), deg[s]};
        auto b = buckets.find(key);
        b->second.erase({s, t});
        if (b->second.empty()) buckets.erase(b);
    }

    std::pair<int, int> choose_pivot() {
        const auto& bucket = buckets.begin()->second;
        if (rng) {
            std::uint64_t r = (*rng)() % bucket.size();
            auto it = bucket.begin();
            std::advance(it, static_cast<long>(r));
            return *it;
        }
        std::pair<int, int> best{-1, -1};
        long best_fill = -1;
        for (const auto& [s, t] : bucket) {
            long fill = static_cast<long>(row[s].size() - 1) * static_cast<long>(col[t].size() - 1);
            if (best_fill < 0 || fill < best_fill) {
                best_fill = fill;
                best = {s, t};
            }
        }
        return best;  // bucket iterates ascending (s,t): first minimal fill is lowest index
    }

    void run() {
        while (!buckets.empty()) {
            auto [s0, t0] = choose_pivot();
            int n = exponent(s0, t0);
            Rational a = row[s0].at(t0);

            std::vector<std::pair<int, Rational>> gamma;  // row mates (v, coeff)
            for (const auto& [v, cv] : row[s0])
                if (v != t0) {
                    require(exponent(s0, v) >= n, "elimination: pivot exponent not minimal in row");
                    gamma.push_back({v, cv});
                }
            std::vector<std::pair<int, Rational>> kappa;  // column mates (u, coeff)
            for (int u : col[t0])
                if (u != s0) {
                    require(exponent(u, t0) >= n,
                            "elimination: pivot exponent not minimal in column");
                    kappa.push_back({u, row[u].at(t0)});
                }

            for (const auto& [u, kc] : kappa) {
                Rational factor = kc / a;
                for (const auto& [v, gc] : gamma) add_to(u, v, -(factor * gc));
            }

            for (const auto& [v, gc] : gamma) erase(s0, v);
            for (const auto& [u, kc] : kappa) erase(u, t0);
            erase(s0, t0);
            // s0 stops being a target for the degree below, t0 a source for
            // the degree above; in the split basis those entries are zero.
            std::vector<int> into(col[s0].begin(), col[s0].end());
            for (int w : into) erase(w, s0);
            std::vector<int> out_of;
            out_of.reserve(row[t0].size());
            for (const auto& [r, cr] : row[t0]) out_of.push_back(r);
            for (int r : out_of) erase(t0, r);

            alive[s0] = alive[t0] = 0;
            if (n >= 1) staircases.push_back({n, s0});
        }
    }
};

// Reduced column span with unit pivots; insert() reduces a vector against the
// span, and when a remainder survives, normalizes its first nonzero entry to
// 1, adds it, and reports its pivot position (-1 when fully reduced away).
struct Span {
    std::map<std::size_t, std::vector<Rational>> rows;
    std::vector<Rational>* last_inserted = nullptr;

    int insert(std::vector<Rational> v) {
        for (std::size_t pos = 0; pos < v.size(); ++pos) {
            if (v[pos].is_zero()) continue;
            auto it = rows.find(pos);
            if (it == rows.end()) {
                Rational lead = v[pos];
                for (Rational& x : v) x /= lead;
                auto [ins, ok] = rows.emplace(pos, std::move(v));
                last_inserted = &ins->second;
                return static_cast<int>(pos);
            }
            Rational f = v[pos];
            const std::vector<Rational>& r = it->second;
            for (std::size_t q = pos; q < v.size(); ++q) v[q] -= f * r[q];
        }
        return -1;
    }
};

// Kernel basis of the r x n matrix M, one vector per free column, in
// ascending free-column order.
std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[rank], m[p]);
        Rational lead = m[rank][c];
        for (std::size_t q = c; q < n; ++q) m[rank][q] /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Rational f = m[r][c];
            for (std::size_t q = c; q < n; ++q) m[r][q] -= f * m[rank][q];
        }
        pivots.push_back({rank, c});
        ++rank;
    }
    std::vector<char> is_pivot(n, 0);
    for (const auto& [r, c] : pivots) is_pivot[c] = 1;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[f] = 1;
        for (const auto& [r, c] : pivots) v[c] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

void fill_bases(const FieldComplex& c, FieldHomology& out,
                const std::optional<Bigrading>& only_block) {
    std::map<Bigrading, std::vector<int>> blocks;
    for (std::size_t g = 0; g < c.gens.size(); ++g)
        blocks[{c.gens[g].g.i, c.gens[g].g.j}].push_back(static_cast<int>(g));

    std::vector<std::vector<std::pair<int, const Rational*>>> rows_of(c.gens.size());
    for (const DifferentialEntry& e : c.entries) rows_of[e.src].push_back({e.tgt, &e.coeff});

    BigradedDims engine_dims;
    for (const auto& [g, d] : out.dims) engine_dims[{g.i, g.j}] += d;

    for (const auto& [bg, cur] : blocks) {
        if (only_block && bg != *only_block) continue;
        std::map<int, std::size_t> local;
        for (std::size_t x = 0; x < cur.size(); ++x) local[cur[x]] = x;

        auto next_it = blocks.find({bg.i + 1, bg.j});
        std::map<int, std::size_t> next_local;
        if (next_it != blocks.end())
            for (std::size_t x = 0; x < next_it->second.size(); ++x)
                next_local[next_it->second[x]] = x;
        std::size_t next_n = next_local.size();

        // d out of this block, rows over next-block gens
        std::vector<std::vector<Rational>> out_m(next_n,
                                                 std::vector<Rational>(cur.size(), Rational(0)));
        for (std::size_t x = 0; x < cur.size(); ++x)
            for (const auto& [t, coeff] : rows_of[cur[x]]) {
                auto it = next_local.find(t);
                require(it != next_local.end(), "homology basis: entry leaves its (i,j) block");
                out_m[it->second][x] = *coeff;
            }

        Span span;
        auto prev_it = blocks.find({bg.i - 1, bg.j});
        if (prev_it != blocks.end())
            for (int p : prev_it->second) {
                std::vector<Rational> b(cur.size(), Rational(0));
                for (const auto& [t, coeff] : rows_of[p]) {
                    auto it = local.find(t);
                    require(it != local.end(), "homology basis: entry leaves its (i,j) block");
                    b[it->second] = *coeff;
                }
                span.insert(std::move(b));
            }

        BlockBasis basis;
        basis.gens = cur;
        for (std::vector<Rational>& v : kernel_basis(std::move(out_m), cur.size()))
            if (span.insert(std::move(v)) >= 0) basis.reps.push_back(*span.last_inserted);

        int expected = engine_dims.count(bg) ? engine_dims[bg] : 0;
        require(static_cast<int>(basis.reps.size()) == expected,
                "homology basis: dense and elimination ranks disagree");
        out.bases.emplace(bg, std::move(basis));
    }
}

FieldHomology homology_with_options(const FieldComplex& c, bool with_basis,
                                    const std::optional<Bigrading>& only_block) {
    std::vector<int> deg(c.gens.size());
    for (std::size_t g = 0; g < c.gens.size(); ++g) deg[g] = c.gens[g].g.i;
    Engine eng(deg, nullptr, std::nullopt);
    for (const DifferentialEntry& e : c.entries) eng.add_to(e.src, e.tgt, e.coeff);
    eng.run();
    require(eng.staircases.empty(), "field elimination produced staircases");

    FieldHomology out;
    for (std::size_t g = 0; g < c.gens.size(); ++g)
        if (eng.alive[g]) out.dims[c.gens[g].g] += 1;
    if (with_basis) fill_bases(c, out, only_block);
    return out;
}

}  // namespace

FieldHomology homology_over_field(const FieldComplex& c, bool with_basis) {
    return homology_with_options(c, with_basis, std::nullopt);
}

FieldHomology homology_with_basis_at(const FieldComplex& c, const Bigrading& block) {
    return homology_with_options(c, true, block);
}

Decomposition staircase_decompose(const ChainComplex& c,
                                  std::optional<std::uint64_t> shuffle_seed) {
    require(c.frobenius == "khovanov", "staircase_decompose: requires a khovanov complex");
    std::vector<int> deg(c.generators.size()), ann(c.generators.size());
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
        deg[g] = c.generators[g].g.i;
        ann[g] = c.generators[g].g.k;
    }
    Engine eng(deg, &ann, shuffle_seed);
    for (const DifferentialEntry& e : c.entries) eng.add_to(e.src, e.tgt, e.coeff);
    eng.run();

    Decomposition d;
    for (std::size_t g = 0; g < c.generators.size(); ++g)
        if (eng.alive[g]) d.w0[c.generators[g].g] += 1;
    for (const auto& [n, s] : eng.staircases) d.staircases[{n, c.generators[s].g}] += 1;
    return d;
}

BigradedDims forget_k(const GradedDims& dims) {
    BigradedDims out;
    for (const auto& [g, d] : dims) out[{g.i, g.j}] += d;
    return out;
}

std::vector<BigradedDims> wk_from_oracle(const ChainComplex& c, int k_max) {
    if (k_max < 1) throw ParseError("wk_from_oracle: k_max must be >= 1");

    std::vector<BigradedDims> h(k_max + 2);  // h[n] = H(c mod beta^n), h[0] = 0
    for (int n = 1; n <= k_max + 1; ++n)
        h[n] = forget_k(homology_over_field(specialize(c, SpecializeMode::mod_beta_n, n)).dims);

    std::vector<BigradedDims> w(k_max + 1);
    w[0] = forget_k(homology_over_field(specialize(c, SpecializeMode::beta_one)).dims);

    for (int n = 1; n <= k_max; ++n) {
        std::map<int, std::map<int, int>> byj;  // j -> i -> second difference
        auto accumulate = [&](const BigradedDims& dims, int scale) {
            for (const auto& [bg, d] : dims) byj[bg.j][bg.i] += scale * d;
        };
        accumulate(h[n + 1], -1);
        accumulate(h[n], 2);
        accumulate(h[n - 1], -1);

        for (auto& [j, column] : byj) {
            if (column.empty()) continue;
            int lo = column.begin()->first;
            int hi = column.rbegin()->first;
            int prev = 0;
            for (int i = lo; i <= hi + 1; ++i) {
                auto it = column.find(i);
                int val = (it == column.end() ? 0 : it->second) - prev;
                require(val >= 0, "wk_from_oracle: second difference is not (1+t)-divisible");
                if (val > 0) w[n][{i, j}] = val;
                prev = val;
            }
            require(prev == 0, "wk_from_oracle: (1+t)-division left a remainder");
        }
    }
    return w;
}

}  // namespace akh
