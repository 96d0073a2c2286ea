#include "askey/banita.hpp"

namespace askey {

ParityIndex parity_decompose(int n) {
    // floor division keeps n_p in {0, 1} for negative n as well
    int n_e = (n >= 0) ? n / 2 : -((1 - n) / 2);
    return ParityIndex{n, n_e, n - 2 * n_e};
}

namespace bi {

Rational lambda(const ParameterSet& p, int x) {
    ParityIndex Np = parity_decompose(p.N);
    // S - (-1)^x (S - 2x) with S = 1 - 2 gamma + 2 N_e, all over 4
    Rational S = Rational(1) - Rational(2) * p.at("gamma") + Rational(2 * Np.n_e);
    Rational sgn = parity_sign(x);
    return (S - sgn * (S - Rational(2 * x))) / Rational(4);
}

RecurrencePair recurrence_coeffs(const ParameterSet& p, int i) {
    const Rational &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma");
    const int N = p.N;
    const int Npar = parity_decompose(N).n_p;
    auto A = [&](int k) -> Rational {
        Rational den = Rational(4) * (Rational(k + 1) + al + be);
        if (den.is_zero()) throw SingularParameters("BI: A denominator vanishes");
        int kp = parity_decompose(k).n_p;
        Rational num;
        if (kp == 0 && Npar == 0)
            num = Rational(k - N) * (Rational(k) + 2 * be + 2 * ga);
        else if (kp == 1 && Npar == 0)
            num = (Rational(k + 1) + 2 * al) * (Rational(k + 1) + 2 * al + 2 * be);
        else if (kp == 0 && Npar == 1)
            num = (Rational(k + 2) + 2 * al) * (Rational(k) + 2 * be + 2 * ga);
        else
            num = Rational(k - N) * (Rational(k + 1) + 2 * al + 2 * be);
        return num / den;
    };
    auto C = [&](int k) -> Rational {
        Rational den = Rational(4) * (Rational(k) + al + be);
        if (den.is_zero()) throw SingularParameters("BI: C denominator vanishes");
        int kp = parity_decompose(k).n_p;
        Rational num;
        if (kp == 0 && Npar == 0)
            num = Rational(k) * (Rational(k) + 2 * be);
        else if (kp == 1 && Npar == 0)
            num = (Rational(k + 1) + 2 * al - 2 * ga) * (Rational(k + 1 + N) + 2 * al + 2 * be);
        else if (kp == 0 && Npar == 1)
            num = Rational(k) * (Rational(k + 1 + N) + 2 * al + 2 * be);
        else
            num = (Rational(k - 1) + 2 * be) * (Rational(k + 1) + 2 * al - 2 * ga);
        return -num / den;
    };
    RecurrencePair rc;
    rc.A = A(i);
    rc.C = C(i);
    rc.X = (i == 0) ? Rational(0) : A(i - 1) * rc.C;
    rc.Y = -(rc.A + rc.C);
    return rc;
}

Rational eval_def(const ParameterSet& p, int i, int x) {
    const Rational &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma");
    const ParityIndex I = parity_decompose(i), X = parity_decompose(x), Np = parity_decompose(p.N);

    Rational kappa_den = pochhammer(al + be + Rational(I.n_e + 1), I.n_e + I.n_p);
    if (kappa_den.is_zero()) throw SingularParameters("BI: kappa denominator vanishes");
    Rational kappa = pochhammer(Rational(-Np.n_e), I.n_e + I.n_p * (1 - Np.n_p)) *
                     pochhammer(be + ga, I.n_e + I.n_p) *
                     pochhammer(al + Rational(1), I.n_e + Np.n_p * I.n_p) / kappa_den;

    SeriesSpec s1;
    s1.top = {Rational(-I.n_e), Rational(I.n_e + 1) + al + be, Rational(-X.n_e),
              Rational(X.n_e - Np.n_e) + ga};
    s1.bottom = {al + Rational(1), be + ga, Rational(-Np.n_e)};
    s1.argument = Rational(1);
    Rational value = hyp_terminating(s1, I.n_e);

    Rational pref_num = parity_sign(i + x) * (Rational(i) + Rational(I.n_p) * (2 * al + 2 * be + 1)) *
                        (Rational(x) - Rational(X.n_p) * (Rational(2 * Np.n_e) - 2 * ga + 1));
    if (!pref_num.is_zero()) {
        Rational pref_den = Rational(2) * (be + ga) *
                            (Rational(2 * Np.n_e) - Rational(Np.n_p) * (Rational(p.N + 1) + 2 * al));
        if (pref_den.is_zero()) throw SingularParameters("BI: second-term denominator vanishes");
        SeriesSpec s2;
        s2.top = {Rational(-(I.n_e + I.n_p - 1)), Rational(I.n_e + I.n_p) + al + be + Rational(1),
                  Rational(-(X.n_e + X.n_p - 1)), Rational(X.n_e + X.n_p - Np.n_e) + ga};
        s2.bottom = {al + Rational(Np.n_p + 1), be + ga + Rational(1),
                     Rational(-(Np.n_e + Np.n_p - 1))};
        s2.argument = Rational(1);
        value += pref_num / pref_den * hyp_terminating(s2, I.n_e + I.n_p - 1);
    }
    return kappa * value;
}

Rational eval_recurrence(const ParameterSet& p, int i, int x) {
    Rational lx = bi::lambda(p, x);
    Rational prev(0), cur(1);
    for (int k = 0; k < i; ++k) {
        RecurrencePair rc = bi::recurrence_coeffs(p, k);
        Rational next = (lx - rc.Y) * cur - rc.X * prev; // monic: no division
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace bi

namespace cbi {

Rational sigma(const ParameterSet& p) {
    const ParityIndex Np = parity_decompose(p.N);
    const Rational &a = p.at("alpha"), &c = p.at("gamma");
    if (Np.n_p == 0) return -(Rational(Np.n_e + 1) + c) / Rational(2);
    return -(Rational(-Np.n_e - 2) - 2 * a + c) / Rational(2);
}

Rational mu(const ParameterSet& p, int x) {
    const ParityIndex Np = parity_decompose(p.N), X = parity_decompose(x);
    const Rational& c = p.at("gamma");
    return parity_sign(x + p.N) / Rational(2) * (Rational(x - Np.n_e + Np.n_p - 1) - c) -
           Rational(X.n_p) / Rational(2);
}

Rational tau(const ParameterSet& p, int i) {
    ParameterSet bumped = p;
    bumped.family = FamilyId::BI;
    bumped.N = p.N + 1;
    RecurrencePair rc = bi::recurrence_coeffs(bumped, i);
    return rc.A * rc.C;
}

Rational eval_def(const ParameterSet& p, int i, int x) {
    const Rational &a = p.at("alpha"), &b = p.at("beta"), &c = p.at("gamma");
    const ParityIndex I = parity_decompose(i), X = parity_decompose(x), Np = parity_decompose(p.N);

    Rational pref_den = pochhammer(Rational(I.n_e + I.n_p + 1) + a + b, I.n_e);
    if (pref_den.is_zero()) throw SingularParameters("CBI: prefactor denominator vanishes");

    Rational musig_pow = (I.n_p == 0) ? Rational(1) : (mu(p, x) - sigma(p));

    SeriesSpec s;
    Rational pref;
    if (Np.n_p == 0) {
        pref = pochhammer(Rational(I.n_p - Np.n_e), I.n_e) *
               pochhammer(a - c + Rational(I.n_p + 1), I.n_e) *
               pochhammer(b + Rational(I.n_p), I.n_e) / pref_den;
        s.top = {Rational(-I.n_e), Rational(I.n_e + I.n_p + 1) + a + b,
                 Rational(-(X.n_e + X.n_p) + I.n_p),
                 Rational(X.n_e + X.n_p + I.n_p - Np.n_e - 1) - c};
        s.bottom = {Rational(I.n_p - Np.n_e), a - c + Rational(I.n_p + 1), b + Rational(I.n_p)};
    } else {
        pref = pochhammer(Rational(Np.n_e - I.n_e + 1), I.n_e) *
               pochhammer(a - c + Rational(I.n_p + 1), I.n_e) *
               pochhammer(-b - Rational(I.n_e), I.n_e) / pref_den;
        s.top = {Rational(-I.n_e), Rational(I.n_e + I.n_p + 1) + a + b, Rational(-X.n_e),
                 Rational(X.n_e - Np.n_e) - c};
        s.bottom = {Rational(-Np.n_e), a - c + Rational(I.n_p + 1), b + Rational(1)};
    }
    s.argument = Rational(1);
    return pref * musig_pow * hyp_terminating(s, I.n_e);
}

Rational eval_recurrence(const ParameterSet& p, int i, int x) {
    Rational mx = mu(p, x);
    Rational sg = sigma(p);
    Rational prev(0), cur(1);
    for (int k = 0; k < i; ++k) {
        Rational next = (mx - parity_sign(k) * sg) * cur - tau(p, k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace cbi

} // namespace askey
