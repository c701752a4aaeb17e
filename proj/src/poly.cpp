#include "akh/poly.hpp"

#include <algorithm>
#include <array>

namespace akh {

namespace {

int exp_of(const Exponents& e, char var) {
    switch (var) {
        case 'q': return e.q;
        case 't': return e.t;
        case 'z': return e.z;
        default: throw ParseError(std::string("unknown variable '") + var + "'");
    }
}

Exponents with_var_zeroed(Exponents e, char var) {
    switch (var) {
        case 'q': e.q = 0; break;
        case 't': e.t = 0; break;
        case 'z': e.z = 0; break;
        default: throw ParseError(std::string("unknown variable '") + var + "'");
    }
    return e;
}

}  // namespace

LaurentPoly3 LaurentPoly3::monomial(const Rational& coeff, int q_exp, int t_exp, int z_exp) {
    LaurentPoly3 p;
    p.add_term(Exponents{q_exp, t_exp, z_exp}, coeff);
    return p;
}

Rational LaurentPoly3::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly3::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly3& LaurentPoly3::operator+=(const LaurentPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly3& LaurentPoly3::operator-=(const LaurentPoly3& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly3 LaurentPoly3::operator-() const {
    LaurentPoly3 out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b) {
    LaurentPoly3 out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(Exponents{ea.q + eb.q, ea.t + eb.t, ea.z + eb.z}, ca * cb);
    return out;
}

LaurentPoly3 LaurentPoly3::eval_at(char var, const Rational& value) const {
    LaurentPoly3 out;
    for (const auto& [e, c] : terms_) {
        int k = exp_of(e, var);
        out.add_term(with_var_zeroed(e, var), c * value.pow(k));
    }
    return out;
}

std::optional<int> LaurentPoly3::min_exp(char var) const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        int k = exp_of(e, var);
        if (!best || k < *best) best = k;
    }
    return best;
}

std::optional<int> LaurentPoly3::max_exp(char var) const {
    std::optional<int> best;
    for (const auto& [e, c] : terms_) {
        int k = exp_of(e, var);
        if (!best || k > *best) best = k;
    }
    return best;
}

Rational LaurentPoly3::coeff_sum() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string format_term(const Rational& coeff, const Exponents& e, PolyStyle style) {
    const std::array<std::pair<char, int>, 3> vars{{{'q', e.q}, {'t', e.t}, {'z', e.z}}};
    bool negative = coeff.sign() < 0;
    Rational mag = negative ? -coeff : coeff;

    std::string out;
    if (style == PolyStyle::text) {
        std::vector<std::string> factors;
        if (mag != Rational(1)) factors.push_back(mag.to_string());
        for (auto [name, k] : vars) {
            if (k == 0) continue;
            std::string f(1, name);
            if (k != 1) f += "^" + std::to_string(k);
            factors.push_back(f);
        }
        if (factors.empty()) factors.push_back("1");
        for (std::size_t i = 0; i < factors.size(); ++i)
            out += (i ? " " : "") + factors[i];
        return (negative ? "-" : "") + out;
    }

    std::vector<std::string> num, den;
    for (auto [name, k] : vars) {
        if (k == 0) continue;
        std::string f(1, name);
        if (k != 1 && k != -1) f += "^" + std::to_string(k > 0 ? k : -k);
        (k > 0 ? num : den).push_back(f);
    }
    if (mag != Rational(1)) {
        std::string c = mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
        num.insert(num.begin(), c);
    }
    if (num.empty()) num.push_back("1");
    for (std::size_t i = 0; i < num.size(); ++i) out += (i ? " " : "") + num[i];
    if (!den.empty()) {
        std::string d;
        for (std::size_t i = 0; i < den.size(); ++i) d += (i ? " " : "") + den[i];
        out += "/" + (den.size() > 1 ? "(" + d + ")" : d);
    }
    return (negative ? "-" : "") + out;
}

std::vector<std::string> LaurentPoly3::term_strings(PolyStyle style, bool ascending) const {
    std::vector<std::string> parts;
    parts.reserve(terms_.size());
    if (ascending) {
        for (const auto& [e, c] : terms_) parts.push_back(format_term(c, e, style));
    } else {
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            parts.push_back(format_term(it->second, it->first, style));
    }
    return parts;
}

std::string join_terms(const std::vector<std::string>& parts, const std::string& plus,
                       const std::string& minus) {
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (!parts[i].empty() && parts[i][0] == '-')
            out += minus + parts[i].substr(1);
        else
            out += plus + parts[i];
    }
    return out;
}

namespace {

// Display sum order: constants first, then fewer-variable monomials,
// then elementwise by variable (q before t before z) and ascending exponent.
// Reproduces displays like "1/q^3+1/q+1/(q^9 t^3)+1/(q^5 t^2)".
bool sum_order(const Exponents& a, const Exponents& b) {
    std::array<std::pair<int, int>, 3> fa, fb;
    int na = 0, nb = 0;
    const std::array<int, 3> ea{a.q, a.t, a.z}, eb{b.q, b.t, b.z};
    for (int v = 0; v < 3; ++v) {
        if (ea[v] != 0) fa[na++] = {v, ea[v]};
        if (eb[v] != 0) fb[nb++] = {v, eb[v]};
    }
    if (na != nb) return na < nb;
    for (int p = 0; p < na; ++p)
        if (fa[p] != fb[p])
            return fa[p].first != fb[p].first ? fa[p].first < fb[p].first
                                              : fa[p].second < fb[p].second;
    return false;
}

}  // namespace

std::string LaurentPoly3::format(PolyStyle style) const {
    if (terms_.empty()) return "0";
    if (style == PolyStyle::text) return join_terms(term_strings(style, true), " + ", " - ");
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& x, const auto& y) { return sum_order(x.first, y.first); });
    std::vector<std::string> parts;
    parts.reserve(ordered.size());
    for (const auto& [e, c] : ordered) parts.push_back(format_term(c, e, style));
    return join_terms(parts, "+", "-");
}

}  // namespace akh
