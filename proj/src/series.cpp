#include "askey/series.hpp"

namespace askey {

void require_valid_base(const Rational& q) {
    if (q.is_zero() || q == Rational(1) || q == Rational(-1))
        throw InvalidBase("q must not be 0, 1 or -1, got " + q.str());
}

Rational pochhammer(const Rational& a, int k) {
    Rational prod(1);
    Rational factor = a;
    for (int l = 0; l < k; ++l) {
        prod *= factor;
        factor += Rational(1);
    }
    return prod;
}

Rational q_pochhammer(const Rational& a, const Rational& q, int k) {
    Rational prod(1);
    Rational aq = a;
    for (int l = 0; l < k; ++l) {
        prod *= Rational(1) - aq;
        aq *= q;
    }
    return prod;
}

Rational hyp_terminating(const SeriesSpec& spec, int i) {
    Rational sum(1); // k = 0 term
    Rational term(1);
    for (int k = 0; k < i; ++k) {
        Rational num = spec.argument;
        for (const Rational& a : spec.top) num *= a + Rational(k);
        if (num.is_zero()) break; // numerator factor vanished: all later terms are 0
        Rational den(k + 1);
        for (const Rational& b : spec.bottom) den *= b + Rational(k);
        if (den.is_zero())
            throw SingularSeries("bottom Pochhammer vanishes at term " + std::to_string(k + 1));
        term *= num / den;
        sum += term;
    }
    return sum;
}

Rational q_hyp_terminating(const SeriesSpec& spec, const Rational& q, int i) {
    require_valid_base(q);
    Rational sum(1);
    Rational term(1);
    Rational qk(1); // q^k
    for (int k = 0; k < i; ++k) {
        Rational num = spec.argument;
        for (const Rational& a : spec.top) num *= Rational(1) - a * qk;
        if (num.is_zero()) break;
        Rational den = Rational(1) - q * qk; // the (q;q)_k factor
        for (const Rational& b : spec.bottom) den *= Rational(1) - b * qk;
        if (den.is_zero())
            throw SingularSeries("bottom q-Pochhammer vanishes at term " + std::to_string(k + 1));
        term *= num / den;
        sum += term;
        qk *= q;
    }
    return sum;
}

std::optional<long> is_k_balanced(const SeriesSpec& spec, const Rational& q, int i) {
    require_valid_base(q);
    if (!(spec.argument == q)) return std::nullopt;
    Rational top_prod(1), bottom_prod(1);
    for (std::size_t j = 1; j < spec.top.size(); ++j) top_prod *= spec.top[j];
    for (const Rational& b : spec.bottom) bottom_prod *= b;
    if (top_prod.is_zero()) return std::nullopt;
    Rational ratio = bottom_prod / top_prod; // must equal q^{k-i}
    if (ratio.is_zero()) return std::nullopt;
    // Solve q^m == ratio for integer m by walking both directions.
    if (ratio == Rational(1)) return i;
    Rational up(1), down(1);
    const int bound = 8 * (i + 4) + 64;
    for (int m = 1; m <= bound; ++m) {
        up *= q;
        if (up == ratio) return i + m;
        down /= q;
        if (down == ratio) return i - m;
    }
    return std::nullopt;
}

} // namespace askey
