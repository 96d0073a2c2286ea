#include "askey/families.hpp"

#include <array>
#include <set>

#include "askey/banita.hpp"

namespace askey {

namespace {

struct FamilyInfo {
    FamilyId id;
    const char* name;
    std::vector<std::string> params;
    bool q_family;
};

const std::array<FamilyInfo, 14>& family_table() {
    static const std::array<FamilyInfo, 14> table{{
        {FamilyId::qR, "qR", {"alpha", "beta", "gamma", "q"}, true},
        {FamilyId::qH, "qH", {"alpha", "beta", "q"}, true},
        {FamilyId::dqH, "dqH", {"alpha", "beta", "q"}, true},
        {FamilyId::qqK, "qqK", {"alpha", "q"}, true},
        {FamilyId::qK, "qK", {"alpha", "q"}, true},
        {FamilyId::aqK, "aqK", {"alpha", "q"}, true},
        {FamilyId::dqK, "dqK", {"alpha", "q"}, true},
        {FamilyId::R, "R", {"alpha", "beta", "gamma"}, false},
        {FamilyId::H, "H", {"alpha", "beta"}, false},
        {FamilyId::dH, "dH", {"alpha", "beta"}, false},
        {FamilyId::K, "K", {"alpha"}, false},
        {FamilyId::BI, "BI", {"alpha", "beta", "gamma"}, false},
        {FamilyId::CBI, "CBI", {"alpha", "beta", "gamma"}, false},
        {FamilyId::G, "G", {"alpha", "beta", "gamma", "delta", "q", "z"}, true},
    }};
    return table;
}

const FamilyInfo& info(FamilyId f) {
    for (const auto& fi : family_table())
        if (fi.id == f) return fi;
    throw UnsupportedFamily("unknown family id");
}

Rational one_minus(const Rational& t) { return Rational(1) - t; }

} // namespace

const char* family_name(FamilyId f) { return info(f).name; }

FamilyId family_from_name(const std::string& name) {
    for (const auto& fi : family_table())
        if (name == fi.name) return fi.id;
    throw UnsupportedFamily("unknown family '" + name + "'");
}

const std::vector<std::string>& family_param_names(FamilyId f) { return info(f).params; }

bool is_q_family(FamilyId f) { return info(f).q_family; }

const Rational& ParameterSet::at(const std::string& name) const {
    auto it = named.find(name);
    if (it == named.end())
        throw UnsupportedFamily(std::string(family_name(family)) + " has no parameter '" + name + "'");
    return it->second;
}

nlohmann::json ParameterSet::to_json() const {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : named) p[k] = v.str();
    return nlohmann::json{{"family", family_name(family)}, {"N", N}, {"params", p}};
}

ParameterSet ParameterSet::from_json(const nlohmann::json& j) {
    ParameterSet ps;
    ps.family = family_from_name(j.at("family").get<std::string>());
    ps.N = j.at("N").get<int>();
    for (const auto& [k, v] : j.at("params").items())
        ps.named.emplace(k, Rational::parse(v.get<std::string>()));
    return ps;
}

Rational lambda(const ParameterSet& p, int x) {
    switch (p.family) {
        case FamilyId::qR: {
            const Rational& q = p.q();
            return -one_minus(q.pow(-x)) * one_minus(p.at("gamma") * q.pow(x - p.N));
        }
        case FamilyId::qH:
        case FamilyId::qqK:
        case FamilyId::qK:
        case FamilyId::aqK:
            return -one_minus(p.q().pow(-x));
        case FamilyId::dqH: {
            const Rational& q = p.q();
            return -one_minus(q.pow(-x)) * one_minus(p.at("alpha") * p.at("beta") * q.pow(x + 1));
        }
        case FamilyId::dqK: {
            const Rational& q = p.q();
            return -one_minus(q.pow(-x)) * one_minus(p.at("alpha") * q.pow(x));
        }
        case FamilyId::R:
            return Rational(x) * (Rational(x) + p.at("gamma") - Rational(p.N));
        case FamilyId::H:
        case FamilyId::K:
            return Rational(-x);
        case FamilyId::dH:
            return Rational(x) * (Rational(x) + p.at("alpha") + p.at("beta") + Rational(1));
        case FamilyId::BI:
            return bi::lambda(p, x);
        default:
            throw UnsupportedFamily(std::string("no spectral variable for family ") +
                                    family_name(p.family));
    }
}

RecurrencePair recurrence_coeffs(const ParameterSet& p, int i) {
    auto make = [&](auto&& A_of, auto&& C_of) {
        RecurrencePair rc;
        rc.A = A_of(i);
        rc.C = C_of(i);
        rc.X = (i == 0) ? Rational(0) : A_of(i - 1) * rc.C;
        rc.Y = -(rc.A + rc.C);
        return rc;
    };
    const int N = p.N;
    switch (p.family) {
        case FamilyId::qR: {
            const Rational &q = p.q(), &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma");
            Rational ab = al * be;
            auto A = [&](int k) {
                Rational den = one_minus(ab * q.pow(2 * k + 1)) * one_minus(ab * q.pow(2 * k + 2));
                if (den.is_zero()) throw SingularParameters("qR: A denominator vanishes");
                return one_minus(q.pow(k - N)) * one_minus(al * q.pow(k + 1)) *
                       one_minus(ab * q.pow(k + 1)) * one_minus(be * ga * q.pow(k + 1)) / den;
            };
            auto C = [&](int k) {
                Rational den = q.pow(N) * one_minus(ab * q.pow(2 * k)) * one_minus(ab * q.pow(2 * k + 1));
                if (den.is_zero()) throw SingularParameters("qR: C denominator vanishes");
                return one_minus(q.pow(k)) * one_minus(be * q.pow(k)) *
                       one_minus(ab * q.pow(k + N + 1)) * (ga - al * q.pow(k)) / den;
            };
            return make(A, C);
        }
        case FamilyId::qH: {
            const Rational &q = p.q(), &al = p.at("alpha"), &be = p.at("beta");
            Rational ab = al * be;
            auto A = [&](int k) {
                Rational den = one_minus(ab * q.pow(2 * k + 1)) * one_minus(ab * q.pow(2 * k + 2));
                if (den.is_zero()) throw SingularParameters("qH: A denominator vanishes");
                return one_minus(q.pow(k - N)) * one_minus(al * q.pow(k + 1)) *
                       one_minus(ab * q.pow(k + 1)) / den;
            };
            auto C = [&](int k) {
                Rational den = one_minus(ab * q.pow(2 * k)) * one_minus(ab * q.pow(2 * k + 1));
                if (den.is_zero()) throw SingularParameters("qH: C denominator vanishes");
                return -(al * q.pow(k - N)) * one_minus(q.pow(k)) * one_minus(be * q.pow(k)) *
                       one_minus(ab * q.pow(k + N + 1)) / den;
            };
            return make(A, C);
        }
        case FamilyId::dqH: {
            const Rational &q = p.q(), &al = p.at("alpha"), &be = p.at("beta");
            auto A = [&](int k) { return one_minus(q.pow(k - N)) * one_minus(al * q.pow(k + 1)); };
            auto C = [&](int k) { return al * q * one_minus(q.pow(k)) * (be - q.pow(k - N - 1)); };
            return make(A, C);
        }
        case FamilyId::qqK: {
            const Rational &q = p.q(), &al = p.at("alpha");
            if (al.is_zero()) throw SingularParameters("qqK: alpha must be nonzero");
            auto A = [&](int k) { return one_minus(q.pow(k - N)) / (al * q.pow(2 * k + 1)); };
            auto C = [&](int k) {
                return one_minus(q.pow(k)) * one_minus(al * q.pow(k)) / (al * q.pow(2 * k));
            };
            return make(A, C);
        }
        case FamilyId::qK: {
            const Rational &q = p.q(), &al = p.at("alpha");
            auto A = [&](int k) {
                Rational den = one_minus(al * q.pow(2 * k)) * one_minus(al * q.pow(2 * k + 1));
                if (den.is_zero()) throw SingularParameters("qK: A denominator vanishes");
                return one_minus(q.pow(k - N)) * one_minus(al * q.pow(k)) / den;
            };
            auto C = [&](int k) {
                Rational den = one_minus(al * q.pow(2 * k - 1)) * one_minus(al * q.pow(2 * k));
                if (den.is_zero()) throw SingularParameters("qK: C denominator vanishes");
                return al * q.pow(2 * k - N - 1) * one_minus(al * q.pow(k + N)) *
                       one_minus(q.pow(k)) / den;
            };
            return make(A, C);
        }
        case FamilyId::aqK: {
            const Rational &q = p.q(), &al = p.at("alpha");
            auto A = [&](int k) { return one_minus(q.pow(k - N)) * one_minus(al * q.pow(k + 1)); };
            auto C = [&](int k) { return -(al * q.pow(k - N)) * one_minus(q.pow(k)); };
            return make(A, C);
        }
        case FamilyId::dqK: {
            const Rational &q = p.q(), &al = p.at("alpha");
            auto A = [&](int k) { return one_minus(q.pow(k - N)); };
            auto C = [&](int k) { return al * one_minus(q.pow(k)); };
            return make(A, C);
        }
        case FamilyId::R: {
            const Rational &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma");
            Rational absum = al + be;
            auto A = [&](int k) {
                Rational den = (Rational(2 * k + 1) + absum) * (Rational(2 * k + 2) + absum);
                if (den.is_zero()) throw SingularParameters("R: A denominator vanishes");
                return Rational(k - N) * (Rational(k + 1) + al) * (Rational(k + 1) + absum) *
                       (Rational(k + 1) + be + ga) / den;
            };
            auto C = [&](int k) {
                Rational den = (Rational(2 * k) + absum) * (Rational(2 * k + 1) + absum);
                if (den.is_zero()) throw SingularParameters("R: C denominator vanishes");
                return Rational(k) * (Rational(k) + al - ga) * (Rational(k + N + 1) + absum) *
                       (Rational(k) + be) / den;
            };
            return make(A, C);
        }
        case FamilyId::H: {
            const Rational &al = p.at("alpha"), &be = p.at("beta");
            Rational absum = al + be;
            auto A = [&](int k) {
                Rational den = (Rational(2 * k + 1) + absum) * (Rational(2 * k + 2) + absum);
                if (den.is_zero()) throw SingularParameters("H: A denominator vanishes");
                return (Rational(k + 1) + absum) * (Rational(k + 1) + al) * Rational(N - k) / den;
            };
            auto C = [&](int k) {
                Rational den = (Rational(2 * k) + absum) * (Rational(2 * k + 1) + absum);
                if (den.is_zero()) throw SingularParameters("H: C denominator vanishes");
                return Rational(k) * (Rational(k + N + 1) + absum) * (Rational(k) + be) / den;
            };
            return make(A, C);
        }
        case FamilyId::dH: {
            const Rational &al = p.at("alpha"), &be = p.at("beta");
            auto A = [&](int k) { return (Rational(k + 1) + al) * Rational(k - N); };
            auto C = [&](int k) { return Rational(k) * (Rational(k - N - 1) - be); };
            return make(A, C);
        }
        case FamilyId::K: {
            const Rational& al = p.at("alpha");
            auto A = [&](int k) { return al * Rational(N - k); };
            auto C = [&](int k) { return Rational(k) * one_minus(al); };
            return make(A, C);
        }
        case FamilyId::BI:
            return bi::recurrence_coeffs(p, i);
        default:
            throw UnsupportedFamily(std::string("no recurrence data for family ") +
                                    family_name(p.family));
    }
}

Rational eval_poly_hypergeometric(const ParameterSet& p, int i, int x) {
    const int N = p.N;
    SeriesSpec s;
    switch (p.family) {
        case FamilyId::qR: {
            const Rational& q = p.q();
            s.top = {q.pow(-i), p.at("alpha") * p.at("beta") * q.pow(i + 1), q.pow(-x),
                     p.at("gamma") * q.pow(x - N)};
            s.bottom = {p.at("alpha") * q, p.at("beta") * p.at("gamma") * q, q.pow(-N)};
            s.argument = q;
            return q_hyp_terminating(s, q, i);
        }
        case FamilyId::qH: {
            const Rational& q = p.q();
            s.top = {q.pow(-i), p.at("alpha") * p.at("beta") * q.pow(i + 1), q.pow(-x)};
            s.bottom = {p.at("alpha") * q, q.pow(-N)};
            s.argument = q;
            return q_hyp_terminating(s, q, i);
        }
        case FamilyId::dqH: {
            const Rational& q = p.q();
            s.top = {q.pow(-i), q.pow(-x), p.at("alpha") * p.at("beta") * q.pow(x + 1)};
            s.bottom = {p.at("alpha") * q, q.pow(-N)};
            s.argument = q;
            return q_hyp_terminating(s, q, i);
        }
        case FamilyId::qqK: {
            const Rational& q = p.q();
            s.top = {q.pow(-i), q.pow(-x)};
            s.bottom = {q.pow(-N)};
            s.argument = p.at("alpha") * q.pow(i + 1);
            return q_hyp_terminating(s, q, i);
        }
        case FamilyId::qK: {
            const Rational& q = p.q();
            s.top = {q.pow(-i), p.at("alpha") * q.pow(i), q.pow(-x)};
            s.bottom = {q.pow(-N), Rational(0)};
            s.argument = q;
            return q_hyp_terminating(s, q, i);
        }
        case FamilyId::aqK: {
            const Rational& q = p.q();
            s.top = {q.pow(-i), Rational(0), q.pow(-x)};
            s.bottom = {p.at("alpha") * q, q.pow(-N)};
            s.argument = q;
            return q_hyp_terminating(s, q, i);
        }
        case FamilyId::dqK: {
            const Rational& q = p.q();
            s.top = {q.pow(-i), q.pow(-x), p.at("alpha") * q.pow(x)};
            s.bottom = {q.pow(-N), Rational(0)};
            s.argument = q;
            return q_hyp_terminating(s, q, i);
        }
        case FamilyId::R: {
            s.top = {Rational(-i), Rational(i + 1) + p.at("alpha") + p.at("beta"), Rational(-x),
                     Rational(x - N) + p.at("gamma")};
            s.bottom = {p.at("alpha") + Rational(1), p.at("beta") + p.at("gamma") + Rational(1),
                        Rational(-N)};
            s.argument = Rational(1);
            return hyp_terminating(s, i);
        }
        case FamilyId::H: {
            s.top = {Rational(-i), Rational(i + 1) + p.at("alpha") + p.at("beta"), Rational(-x)};
            s.bottom = {p.at("alpha") + Rational(1), Rational(-N)};
            s.argument = Rational(1);
            return hyp_terminating(s, i);
        }
        case FamilyId::dH: {
            s.top = {Rational(-i), Rational(-x), Rational(x + 1) + p.at("alpha") + p.at("beta")};
            s.bottom = {p.at("alpha") + Rational(1), Rational(-N)};
            s.argument = Rational(1);
            return hyp_terminating(s, i);
        }
        case FamilyId::K: {
            if (p.at("alpha").is_zero()) throw SingularParameters("K: alpha must be nonzero");
            s.top = {Rational(-i), Rational(-x)};
            s.bottom = {Rational(-N)};
            s.argument = p.at("alpha").reciprocal();
            return hyp_terminating(s, i);
        }
        case FamilyId::G: {
            const Rational& q = p.q();
            s.top = {q.pow(-i), p.at("alpha") * p.at("beta") * q.pow(i + 1), q.pow(-x),
                     p.at("gamma") * q.pow(x - N)};
            s.bottom = {p.at("alpha") * q, p.at("delta"), q.pow(-N)};
            s.argument = p.at("z");
            return q_hyp_terminating(s, q, i);
        }
        case FamilyId::BI:
            return bi::eval_def(p, i, x);
        case FamilyId::CBI:
            return cbi::eval_def(p, i, x);
    }
    throw UnsupportedFamily("unreachable");
}

Rational eval_poly_recurrence(const ParameterSet& p, int i, int x) {
    if (p.family == FamilyId::BI) return bi::eval_recurrence(p, i, x);
    if (p.family == FamilyId::CBI) return cbi::eval_recurrence(p, i, x);
    if (p.family == FamilyId::G)
        throw UnsupportedFamily("G has no recurrence route");
    Rational lx = lambda(p, x);
    Rational prev(0), cur(1); // R_{-1}, R_0
    for (int k = 0; k < i; ++k) {
        RecurrencePair rc = recurrence_coeffs(p, k);
        if (rc.A.is_zero())
            throw SingularParameters("recurrence step needs division by A_i = 0 at i=" +
                                     std::to_string(k));
        Rational next = ((lx - rc.Y) * cur - rc.C * prev) / rc.A;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational weight(const ParameterSet& p, int x) {
    const int N = p.N;
    switch (p.family) {
        case FamilyId::qR: {
            const Rational &q = p.q(), &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma");
            Rational num = q_pochhammer(al * q, q, x) * q_pochhammer(be * ga * q, q, x) *
                           q_pochhammer(q.pow(-N), q, x) * q_pochhammer(ga * q.pow(-N), q, x) *
                           one_minus(ga * q.pow(2 * x - N));
            Rational den = q_pochhammer(q, q, x) * q_pochhammer(ga / al * q.pow(-N), q, x) *
                           q_pochhammer(q.pow(-N) / be, q, x) * q_pochhammer(ga * q, q, x) *
                           (al * be * q).pow(x) * one_minus(ga * q.pow(-N));
            if (den.is_zero()) throw SingularParameters("qR weight denominator vanishes");
            return num / den;
        }
        case FamilyId::R: {
            const Rational &al = p.at("alpha"), &be = p.at("beta"), &ga = p.at("gamma");
            Rational half(1, 2);
            Rational num = pochhammer(al + 1, x) * pochhammer(be + ga + 1, x) *
                           pochhammer(Rational(-N), x) * pochhammer(ga - N, x) *
                           pochhammer((ga - N + 2) * half, x);
            Rational den = pochhammer(ga - al - N, x) * pochhammer(-be - N, x) *
                           pochhammer((ga - N) * half, x) * pochhammer(ga + 1, x) *
                           pochhammer(Rational(1), x);
            if (den.is_zero()) throw SingularParameters("R weight denominator vanishes");
            return num / den;
        }
        default:
            throw UnsupportedFamily(std::string("no published weight for family ") +
                                    family_name(p.family));
    }
}

bool admissible(const ParameterSet& p) {
    try {
        if (p.N < 0) return false;
        for (const auto& name : family_param_names(p.family))
            if (!p.has(name)) return false;
        if (p.has("q")) require_valid_base(p.q());

        const int N = p.N;
        if (p.family != FamilyId::G && p.family != FamilyId::CBI) {
            for (int i = 0; i <= N + 3; ++i) {
                RecurrencePair rc = recurrence_coeffs(p, i);
                if (i < N && rc.A.is_zero()) return false;
                if (i >= 1 && i <= N && rc.C.is_zero()) return false;
            }
            std::set<std::string> seen;
            for (int x = 0; x <= N; ++x)
                if (!seen.insert(lambda(p, x).str()).second) return false;
        }
        if (p.family == FamilyId::CBI) {
            std::set<std::string> seen;
            for (int x = 0; x <= N; ++x)
                if (!seen.insert(cbi::mu(p, x).str()).second) return false;
            for (int i = 0; i <= N + 1; ++i) cbi::tau(p, i);
        }
        for (int i = 0; i <= N; ++i)
            for (int x = 0; x <= N; ++x) eval_poly_hypergeometric(p, i, x);
        if (p.family == FamilyId::qR || p.family == FamilyId::R)
            for (int x = 0; x <= N; ++x) weight(p, x);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::vector<std::vector<Rational>> grid_table(const ParameterSet& p) {
    std::vector<std::vector<Rational>> t(p.N + 1);
    for (int i = 0; i <= p.N; ++i) {
        t[i].reserve(p.N + 1);
        for (int x = 0; x <= p.N; ++x) t[i].push_back(eval_poly_hypergeometric(p, i, x));
    }
    return t;
}

} // namespace askey
