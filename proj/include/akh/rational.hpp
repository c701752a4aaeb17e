#pragma once

// Exact rational arithmetic, backed by GMP's mpq_class.
//
// Invariants: always in lowest terms, denominator > 0.  Both are maintained by
// canonicalize() at the construction boundary; GMP keeps them under arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "akh/errors.hpp"

namespace akh {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long n, long d) {
        require(d != 0, "Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    // Accepts "n" or "n/d" with optional leading '-'; rejects anything else.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        require(!o.is_zero(), "Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        require(!is_zero(), "Rational: inverse of zero");
        return Rational(1 / v_);
    }

    // Exact integer power; exp may be negative (then *this must be nonzero).
    Rational pow(int exp) const;

    bool is_integer() const { return v_.get_den() == 1; }

    // "-3/2" in lowest terms, "7" when the denominator is one.
    std::string to_string() const { return v_.get_str(); }
    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }

    // Value as long; requires an integer that fits.
    long to_long() const {
        require(is_integer() && v_.get_num().fits_slong_p(), "Rational: not a small integer");
        return v_.get_num().get_si();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t n = 0;
        while (from + n < text.size() && text[from + n] >= '0' && text[from + n] <= '9') ++n;
        return n;
    };
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t nd = digits(i);
    if (nd == 0) throw ParseError("bad rational: '" + text + "'");
    i += nd;
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("bad rational: '" + text + "'");
        std::size_t dd = digits(i + 1);
        if (dd == 0 || i + 1 + dd != text.size()) throw ParseError("bad rational: '" + text + "'");
        mpq_class den(text.substr(i + 1));
        if (sgn(den) == 0) throw ParseError("bad rational: zero denominator in '" + text + "'");
    }
    mpq_class v(text);
    v.canonicalize();
    return Rational(std::move(v));
}

inline Rational Rational::pow(int exp) const {
    Rational base = *this;
    if (exp < 0) {
        base = base.inverse();
        exp = -exp;
    }
    Rational out(1);
    while (exp > 0) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

}  // namespace akh
