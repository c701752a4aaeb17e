#pragma once

// Laurent polynomials in q (quantum), t (homological) and z (annular) with
// exact rational coefficients.  Terms live in a map keyed by exponent triple
// under the canonical order: ascending t, then q, then z.  Zero coefficients
// are never stored, so map equality is polynomial equality.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "akh/rational.hpp"

namespace akh {

struct Exponents {
    int q = 0;
    int t = 0;
    int z = 0;

    friend bool operator==(const Exponents&, const Exponents&) = default;
};

// Canonical term order: (t, q, z) lexicographic, ascending.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        if (a.t != b.t) return a.t < b.t;
        if (a.q != b.q) return a.q < b.q;
        return a.z < b.z;
    }
};

enum class PolyStyle {
    display,  // reciprocal notation: "1/(q^9 t^3)+1/(q^5 t^2)+1/q^3+1/q"
    text,   // signed exponents:    "q^-9 t^-3 + ..." rendered "-" aware, machine friendly
};

class LaurentPoly3 {
public:
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    LaurentPoly3() = default;

    static LaurentPoly3 monomial(const Rational& coeff, int q_exp, int t_exp, int z_exp);
    static LaurentPoly3 one() { return monomial(1, 0, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly3& operator+=(const LaurentPoly3& o);
    LaurentPoly3& operator-=(const LaurentPoly3& o);
    friend LaurentPoly3 operator+(LaurentPoly3 a, const LaurentPoly3& b) { return a += b; }
    friend LaurentPoly3 operator-(LaurentPoly3 a, const LaurentPoly3& b) { return a -= b; }
    LaurentPoly3 operator-() const;
    friend LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b);

    friend bool operator==(const LaurentPoly3& a, const LaurentPoly3& b) {
        return a.terms_ == b.terms_;
    }

    // Substitute a numeric value for one variable ('q', 't' or 'z'); the
    // variable's exponent collapses into the coefficient.  value must be
    // nonzero when negative exponents occur.
    LaurentPoly3 eval_at(char var, const Rational& value) const;

    // Specialization at var = 1: forgets the grading carried by var.
    LaurentPoly3 forget_variable(char var) const { return eval_at(var, 1); }

    // Exponent range of one variable over the support; nullopt for zero.
    std::optional<int> min_exp(char var) const;
    std::optional<int> max_exp(char var) const;

    Rational coeff_sum() const;

    // Rendering; the zero polynomial is "0", "-" absorbs into coefficients.
    // display: reciprocal sum order — constants first, fewer-variable
    // monomials first, then elementwise by variable (q, t, z) ascending
    // exponent, joined by a tight "+" ("1/q^3+1/q+1/(q^9 t^3)+1/(q^5 t^2)").
    // text: ascending (t, q, z), spaced joins.
    std::string format(PolyStyle style = PolyStyle::display) const;

    // One rendered string per term, ascending or descending in (t, q, z).
    // Negative terms carry a leading "-"; callers do sign-aware joining.
    std::vector<std::string> term_strings(PolyStyle style, bool ascending) const;

private:
    TermMap terms_;
};

// Renders one monomial, e.g. "3 q z", "1/(q^9 t^3)", "-q t/z", "(3/2) q".
std::string format_term(const Rational& coeff, const Exponents& e, PolyStyle style);

// Sign-aware "+" join of term strings; separator handles surrounding spaces.
std::string join_terms(const std::vector<std::string>& parts, const std::string& plus,
                       const std::string& minus);

}  // namespace akh
