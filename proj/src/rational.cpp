#include "askey/rational.hpp"

#include <cctype>
#include <ostream>

namespace askey {

Rational::Rational(long num, long den) {
    mpq_init(v_);
    if (den == 0) throw SingularParameters("Rational: zero denominator");
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Rational Rational::parse(std::string_view text) {
    // Accept only [-]digits[/digits]; no decimals, no whitespace.
    if (text.empty()) throw ConfigError("Rational: empty string");
    std::size_t pos = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
            seen_slash = true;
        } else {
            throw ConfigError("Rational: bad literal '" + std::string(text) + "'");
        }
    }
    if (!seen_digit) throw ConfigError("Rational: bad literal '" + std::string(text) + "'");

    Rational r;
    std::string buf(text[0] == '+' ? text.substr(1) : text);
    if (mpq_set_str(r.v_, buf.c_str(), 10) != 0)
        throw ConfigError("Rational: bad literal '" + buf + "'");
    if (mpz_sgn(mpq_denref(r.v_)) == 0)
        throw SingularParameters("Rational: zero denominator in '" + buf + "'");
    mpq_canonicalize(r.v_);
    return r;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = *this;
    if (e < 0) {
        base = base.reciprocal();
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace askey
