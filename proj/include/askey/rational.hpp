#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar, the only number type in the math core.
 *
 * Thin RAII wrapper over GMP's mpq_t. Values are always canonical:
 * lowest terms, positive denominator, zero stored as 0/1. Every
 * arithmetic operation is exact; there is no rounding anywhere.
 */

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "askey/errors.hpp"

namespace askey {

class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long num, long den);

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    /// Parse a decimal-free "p/q" string such as "-3/5" or "7".
    static Rational parse(std::string_view text);

    /// Serialize back to the "p/q" form ("7" when the denominator is 1).
    std::string str() const;

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    /// Integer value; only valid when is_integer() and the value fits in long.
    long to_long() const { return mpz_get_si(mpq_numref(v_)); }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.v_, v_);
        return r;
    }

    Rational operator+(const Rational& o) const {
        Rational r;
        mpq_add(r.v_, v_, o.v_);
        return r;
    }
    Rational operator-(const Rational& o) const {
        Rational r;
        mpq_sub(r.v_, v_, o.v_);
        return r;
    }
    Rational operator*(const Rational& o) const {
        Rational r;
        mpq_mul(r.v_, v_, o.v_);
        return r;
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw SingularParameters("Rational: division by zero");
        Rational r;
        mpq_div(r.v_, v_, o.v_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw SingularParameters("Rational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    bool operator==(const Rational& o) const { return mpq_equal(v_, o.v_) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = mpq_cmp(v_, o.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational reciprocal() const {
        if (is_zero()) throw SingularParameters("Rational: reciprocal of zero");
        Rational r;
        mpq_inv(r.v_, v_);
        return r;
    }

    /// Integer power; negative exponents invert (base must be nonzero then).
    Rational pow(long e) const;

    friend Rational abs(const Rational& r) {
        Rational a;
        mpq_abs(a.v_, r.v_);
        return a;
    }

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

} // namespace askey
