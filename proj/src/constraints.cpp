#include "askey/constraints.hpp"

#include <algorithm>

namespace askey {

const char* constraint_name(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::A2: return "A2";
        case ConstraintKind::B2: return "B2";
        case ConstraintKind::B2p: return "B2p";
    }
    return "?";
}

ShiftedData::ShiftedData(const ParameterSet& params, const ShiftMap& shift) : rho_(params) {
    rho_bar_ = shift.apply(params);
    auto [zeta, xi] = shift_scalars(params, shift);
    zeta_ = zeta;
    xi_ = xi;
}

const RecurrencePair& ShiftedData::rc(int i, bool barred) const {
    auto& cache = barred ? cache_bar_ : cache_;
    auto it = cache.find(i);
    if (it == cache.end())
        it = cache.emplace(i, recurrence_coeffs(barred ? rho_bar_ : rho_, i)).first;
    return it->second;
}

Rational ShiftedData::A(int i) const { return rc(i, false).A; }
Rational ShiftedData::C(int i) const { return rc(i, false).C; }
Rational ShiftedData::X(int i) const { return rc(i, false).X; }
Rational ShiftedData::Y(int i) const { return rc(i, false).Y; }
Rational ShiftedData::Ab(int i) const { return rc(i, true).A; }
Rational ShiftedData::Cb(int i) const { return rc(i, true).C; }
Rational ShiftedData::Xb(int i) const { return rc(i, true).X; }
Rational ShiftedData::Yb(int i) const { return rc(i, true).Y; }

namespace {

/// Strict division: a vanishing denominator marks the index unusable.
Rational frac(const Rational& num, const Rational& den, int i, const char* what) {
    if (den.is_zero()) throw DenominatorVanishes(std::string(what) + " vanishes", i);
    return num / den;
}

/// prod_{k=1}^{i} Xb(k)/X(k)
Rational x_ratio_product(const ShiftedData& d, int i) {
    Rational prod(1);
    for (int k = 1; k <= i; ++k) {
        Rational xk = d.X(k);
        if (xk.is_zero()) throw DenominatorVanishes("X_k in ratio product vanishes", i);
        prod *= d.Xb(k) / xk;
    }
    return prod;
}

Rational a2_e1(const ShiftedData& d, int i) {
    const Rational &zeta = d.zeta(), &xi = d.xi();
    return frac(zeta * d.Yb(i) - d.Y(i) - xi, d.X(i + 1) - zeta * zeta * d.Xb(i), i,
                "A2 first denominator") *
           zeta.pow(2 * i) * x_ratio_product(d, i);
}

Rational a2_e2(const ShiftedData& d, int i) {
    const Rational &zeta = d.zeta(), &xi = d.xi();
    return frac(d.X(i + 1) - zeta * zeta * d.Xb(i + 1),
                (zeta * d.Yb(i) - d.Y(i + 1) - xi) * d.X(i + 1), i, "A2 second denominator") *
           zeta.pow(2 * i) * x_ratio_product(d, i);
}

Rational b2_e1(const ShiftedData& d, int i) {
    const Rational &zeta = d.zeta(), &xi = d.xi();
    Rational z2 = zeta * zeta;
    auto D = [&](int k) { return xi + d.Y(k) - zeta * d.Yb(k); };
    Rational f_i = frac(z2 * d.Xb(i + 1) - d.X(i), D(i), i, "B2 D_i");
    Rational f_ip1 = frac(z2 * d.Xb(i + 2) - d.X(i + 1), D(i + 1), i, "B2 D_{i+1}");
    Rational num1 = f_i - f_ip1 + zeta * d.Yb(i + 1) - d.Y(i) - xi;
    Rational g_ip1 = frac(z2 * d.Xb(i + 1) - d.X(i + 2), D(i + 1), i, "B2 D_{i+1}");
    Rational g_i = frac(z2 * d.Xb(i) - d.X(i + 1), D(i), i, "B2 D_i");
    Rational den1 = frac(d.X(i + 1), z2 * d.Xb(i + 1), i, "B2 Xb_{i+1}") * g_ip1 - g_i;
    return frac(num1, den1, i, "B2 first denominator") * zeta.pow(2 * i) * x_ratio_product(d, i);
}

Rational b2_e2(const ShiftedData& d, int i) {
    const Rational &zeta = d.zeta(), &xi = d.xi();
    Rational z2 = zeta * zeta;
    auto D = [&](int k) { return xi + d.Y(k) - zeta * d.Yb(k); };
    Rational f_i = frac(z2 * d.Xb(i + 1) - d.X(i), D(i), i, "B2 D_i");
    Rational f_ip1 = frac(z2 * d.Xb(i + 2) - d.X(i + 1), D(i + 1), i, "B2 D_{i+1}");
    Rational g_ip1 = frac(z2 * d.Xb(i + 1) - d.X(i + 2), D(i + 1), i, "B2 D_{i+1}");
    Rational g_i = frac(z2 * d.Xb(i) - d.X(i + 1), D(i), i, "B2 D_i");
    Rational num2 = f_i - frac(z2 * d.Xb(i + 1), d.X(i + 1), i, "B2 X_{i+1}") * f_ip1;
    Rational den2 = g_ip1 - g_i + zeta * d.Yb(i) - d.Y(i + 1) - xi;
    return frac(num2, den2, i, "B2 second denominator") * zeta.pow(2 * i) * x_ratio_product(d, i);
}

Rational b2p_e1(const ShiftedData& d, int i) {
    const Rational &zeta = d.zeta(), &xi = d.xi();
    Rational z2 = zeta * zeta;
    auto E = [&](int k) { return zeta * d.Yb(k - 1) - d.Y(k) - xi; }; // needs k >= 1
    // At i = 0 the fractions carrying Yb_{-1} are multiplied by X_0 = Xb_0 = 0
    // and are absent from the printed expression.
    Rational t1 = (i == 0) ? Rational(0) : frac(d.X(i) - z2 * d.Xb(i), E(i), i, "B2p E_i");
    Rational num1 = t1 - frac(d.X(i + 1) - z2 * d.Xb(i + 1), E(i + 1), i, "B2p E_{i+1}") +
                    zeta * d.Yb(i) - d.Y(i) - xi;
    Rational den1 = d.X(i + 1) * frac(d.X(i + 2) - z2 * d.Xb(i), E(i + 1), i, "B2p E_{i+1}");
    Rational xbz = z2 * d.Xb(i);
    if (!xbz.is_zero())
        den1 -= xbz * frac(d.X(i + 1) - z2 * d.Xb(i - 1), E(i), i, "B2p E_i");
    return frac(num1, den1, i, "B2p first denominator") * zeta.pow(2 * i) * x_ratio_product(d, i);
}

Rational b2p_e2(const ShiftedData& d, int i) {
    const Rational &zeta = d.zeta(), &xi = d.xi();
    Rational z2 = zeta * zeta;
    auto E = [&](int k) { return zeta * d.Yb(k - 1) - d.Y(k) - xi; };
    Rational t2 = frac(d.X(i + 1) - z2 * d.Xb(i + 1), E(i + 1), i, "B2p E_{i+1}");
    Rational num2 = t2 - frac(z2 * d.Xb(i + 1), d.X(i + 2), i, "B2p X_{i+2}") *
                             frac(d.X(i + 2) - z2 * d.Xb(i + 2), E(i + 2), i, "B2p E_{i+2}");
    Rational den2 = (frac(d.X(i + 3) - z2 * d.Xb(i + 1), E(i + 2), i, "B2p E_{i+2}") -
                     frac(d.X(i + 2) - z2 * d.Xb(i), E(i + 1), i, "B2p E_{i+1}") +
                     zeta * d.Yb(i) - d.Y(i + 2) - xi) *
                    d.X(i + 1);
    return frac(num2, den2, i, "B2p second denominator") * zeta.pow(2 * i) * x_ratio_product(d, i);
}

} // namespace

std::pair<Rational, Rational> a2_constraint_exprs(const ShiftedData& d, int i) {
    return {a2_e1(d, i), a2_e2(d, i)};
}

std::pair<Rational, Rational> b2_constraint_exprs(const ShiftedData& d, int i) {
    return {b2_e1(d, i), b2_e2(d, i)};
}

std::pair<Rational, Rational> b2p_constraint_exprs(const ShiftedData& d, int i) {
    return {b2p_e1(d, i), b2p_e2(d, i)};
}

ConstraintReport check_constraints(ConstraintKind kind, const ParameterSet& params,
                                   const ShiftMap& shift) {
    ConstraintReport rep;
    ShiftedData d(params, shift);
    const int i_max = std::min(params.N, d.rho_bar().N);

    using ExprFn = Rational (*)(const ShiftedData&, int);
    ExprFn fns[2];
    switch (kind) {
        case ConstraintKind::A2: fns[0] = a2_e1, fns[1] = a2_e2; break;
        case ConstraintKind::B2: fns[0] = b2_e1, fns[1] = b2_e2; break;
        case ConstraintKind::B2p: fns[0] = b2p_e1, fns[1] = b2p_e2; break;
    }

    std::vector<Rational> values;
    bool out_of_range = false;
    for (int i = 0; i <= i_max && !out_of_range; ++i) {
        bool any = false;
        for (ExprFn fn : fns) {
            try {
                values.push_back(fn(d, i));
                any = true;
            } catch (const DenominatorVanishes&) {
                // this expression is unusable at i; the other may still count
            } catch (const SingularParameters&) {
                out_of_range = true; // recurrence data undefined this far out
                break;
            }
        }
        if (any) rep.indices_used.push_back(i);
    }

    if (rep.indices_used.size() < 2) {
        rep.verdict = Verdict::Inconclusive;
        rep.note = "fewer than 2 usable indices";
        return rep;
    }
    for (const Rational& v : values) {
        if (!(v == values.front())) {
            rep.verdict = Verdict::Fail;
            rep.note = "expressions differ across indices";
            return rep;
        }
    }
    rep.verdict = Verdict::Pass;
    rep.common_value = values.front().str();
    return rep;
}

} // namespace askey
