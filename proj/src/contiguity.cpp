#include "askey/contiguity.hpp"

#include <algorithm>
#include <memory>

namespace askey {

const char* relation_kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::A2: return "A2";
        case RelationKind::B2: return "B2";
        case RelationKind::B2p: return "B2p";
        case RelationKind::BIrel: return "BI";
        case RelationKind::Grel: return "G";
    }
    return "?";
}

RelationInstance RelationInstance::with_coeff_scaled(int eps, const Rational& factor) const {
    RelationInstance out = *this;
    auto inner = coeff;
    out.coeff = [inner, eps, factor](int i, int e) {
        Rational v = inner(i, e);
        return e == eps ? v * factor : v;
    };
    out.id = id + "[phi" + std::to_string(eps) + " scaled]";
    return out;
}

RelationInstance RelationInstance::with_lambda_scaled(const Rational& factor) const {
    RelationInstance out = *this;
    auto inner = lambda_factor;
    out.lambda_factor = [inner, factor](int x) { return inner(x) * factor; };
    out.id = id + "[lambda scaled]";
    return out;
}

namespace {

std::shared_ptr<ShiftedData> make_data(const ParameterSet& params, const ShiftMap& shift) {
    return std::make_shared<ShiftedData>(params, shift);
}

} // namespace

RelationInstance a2_plus_relation(const ParameterSet& params, const ShiftMap& shift) {
    auto d = make_data(params, shift);
    RelationInstance rel;
    rel.kind = RelationKind::A2;
    rel.direction = Direction::Plus;
    rel.id = std::string(family_name(params.family)) + ":A2+:" + shift.key();
    rel.base = params;
    rel.target = d->rho_bar();
    rel.eta = shift.eta;
    rel.support = {0, -1};
    rel.lambda_factor = [](int) { return Rational(1); };
    rel.coeff = [d](int i, int eps) -> Rational {
        const Rational& zeta = d->zeta();
        if (eps == 0) {
            Rational v = zeta.pow(i);
            for (int k = 0; k < i; ++k) {
                Rational ak = d->A(k);
                if (ak.is_zero()) throw SingularParameters("A_k vanishes in Phi^{0,+}");
                v *= d->Ab(k) / ak;
            }
            return v;
        }
        if (eps == -1) {
            if (i == 0) return Rational(0);
            Rational a0 = d->A(0);
            if (a0.is_zero()) throw SingularParameters("A_0 vanishes in Phi^{-1,+}");
            Rational v = zeta.pow(-i + 1) * (Rational(1) - (zeta * d->Ab(0) + d->xi()) / a0);
            for (int k = 1; k <= i - 1; ++k) {
                Rational cbk = d->Cb(k);
                if (cbk.is_zero()) throw SingularParameters("Cb_k vanishes in Phi^{-1,+}");
                v *= d->C(k + 1) / cbk;
            }
            return v;
        }
        return Rational(0);
    };
    return rel;
}

RelationInstance a2_minus_relation(const ParameterSet& params, const ShiftMap& shift) {
    auto d = make_data(params, shift);
    RelationInstance rel;
    rel.kind = RelationKind::A2;
    rel.direction = Direction::Minus;
    rel.id = std::string(family_name(params.family)) + ":A2-:" + shift.key();
    rel.base = params;
    rel.target = d->rho_bar();
    rel.eta = shift.eta;
    rel.support = {0, 1};
    Rational head = d->A(0) - d->zeta() * d->Ab(0) - d->xi();
    rel.lambda_factor = [d, head](int x) {
        Rational a0 = d->A(0);
        if (a0.is_zero()) throw SingularParameters("A_0 vanishes in lambda^-");
        return head * (lambda(d->rho(), x) / a0 + Rational(1)) + d->C(1);
    };
    rel.coeff = [d, head](int i, int eps) -> Rational {
        const Rational& zeta = d->zeta();
        if (eps == 1) {
            Rational v = head * zeta.pow(-i);
            for (int k = 1; k <= i; ++k) {
                Rational abk = d->Ab(k - 1);
                if (abk.is_zero()) throw SingularParameters("Ab_{k-1} vanishes in Phi^{1,-}");
                v *= d->A(k) / abk;
            }
            return v;
        }
        if (eps == 0) {
            Rational v = zeta.pow(i) * d->C(1);
            for (int k = 1; k <= i; ++k) {
                Rational ck = d->C(k);
                if (ck.is_zero()) throw SingularParameters("C_k vanishes in Phi^{0,-}");
                v *= d->Cb(k) / ck;
            }
            return v;
        }
        return Rational(0);
    };
    return rel;
}

namespace {

Rational must_div(const Rational& num, const Rational& den, const char* what) {
    if (den.is_zero()) throw SingularParameters(std::string(what) + " vanishes");
    return num / den;
}

} // namespace

RelationInstance b2_relation(const ParameterSet& params, const ShiftMap& shift, Direction dir) {
    auto d = make_data(params, shift);
    const Rational zeta = d->zeta(), xi = d->xi();
    const Rational z2 = zeta * zeta;

    RelationInstance rel;
    rel.kind = RelationKind::B2;
    rel.direction = dir;
    rel.base = params;
    rel.target = d->rho_bar();
    rel.eta = shift.eta;
    rel.support = {1, 0, -1};

    if (dir == Direction::Plus) {
        rel.id = std::string(family_name(params.family)) + ":B2+:" + shift.key();
        auto D = [d, zeta, xi](int k) { return xi + d->Y(k) - zeta * d->Yb(k); };
        // Head quantities. Their denominators vanish exactly when a one-step
        // relation already exists for the shift; flag that case distinctly.
        Rational T, phi1m_head;
        try {
            T = must_div(z2 * d->Xb(1), D(0), "B2 D_0") -
                must_div(z2 * d->Xb(2) - d->X(1), D(1), "B2 D_1") + zeta * d->Yb(1) - d->Y(0) -
                xi;
            phi1m_head = must_div(
                T,
                d->A(0) * d->Ab(0) *
                    (must_div(z2 * d->Xb(1) - d->X(2), z2 * d->Xb(1) * D(1), "B2 Xb_1 D_1") +
                     must_div(Rational(1), D(0), "B2 D_0")),
                "B2 Phi^{-1,+} denominator");
        } catch (const SingularParameters& e) {
            throw DenominatorVanishes(std::string(e.what()) + " (one-step relation embedded)", 0);
        }

        auto phi_p1 = [d, zeta](int i) {
            Rational v = zeta.pow(i);
            for (int k = 1; k <= i; ++k)
                v *= must_div(d->Ab(k), d->A(k - 1), "A_{k-1} in Phi^{1,+}");
            return v;
        };
        auto phi_m1 = [d, zeta, phi1m_head](int i) {
            if (i == 0) return Rational(0);
            Rational v = zeta.pow(-i) * phi1m_head;
            for (int k = 1; k <= i - 1; ++k)
                v *= must_div(d->C(k + 1), d->Cb(k), "Cb_k in Phi^{-1,+}");
            return v;
        };

        Rational lam_const;
        try {
            Rational lam_den =
                must_div((xi + zeta * d->Ab(0) - d->A(0)) * (z2 * d->Xb(1) - d->X(2)),
                         zeta * d->Cb(1) * D(1), "B2 lambda^+ inner denominator") +
                zeta * d->Ab(0);
            lam_const = Rational(1) +
                        must_div(zeta * d->Cb(1), xi + zeta * d->Ab(0) - d->A(0),
                                 "B2 lambda^+ head denominator") -
                        must_div(T, lam_den, "B2 lambda^+ denominator");
        } catch (const SingularParameters& e) {
            throw DenominatorVanishes(std::string(e.what()) + " (one-step relation embedded)", 0);
        }
        rel.lambda_factor = [d, zeta, xi, lam_const](int x) {
            return lam_const +
                   must_div(lambda(d->rho(), x) + xi, zeta * d->Ab(0), "Ab_0 in lambda^+");
        };
        rel.coeff = [d, zeta, xi, z2, D, phi_p1, phi_m1](int i, int eps) -> Rational {
            if (eps == 1) return phi_p1(i);
            if (eps == -1) return phi_m1(i);
            if (eps == 0) {
                Rational Di = D(i);
                return must_div(z2 * d->Xb(i + 1) - d->X(i), zeta * d->Ab(i) * Di,
                                "Ab_i D_i in Phi^{0,+}") *
                           phi_p1(i) +
                       must_div(z2 * d->Xb(i) - d->X(i + 1), d->C(i + 1) * Di,
                                "C_{i+1} D_i in Phi^{0,+}") *
                           phi_m1(i + 1);
            }
            return Rational(0);
        };
        return rel;
    }

    rel.id = std::string(family_name(params.family)) + ":B2-:" + shift.key();
    auto Dm = [d, zeta, xi](int k) { return zeta * d->Yb(k) - d->Y(k) - xi; };
    Rational Tm, phim1_head;
    try {
        Tm = must_div(d->X(1), Dm(0), "B2 Dm_0") -
             must_div(d->X(2) - z2 * d->Xb(1), Dm(1), "B2 Dm_1") + d->Y(1) - zeta * d->Yb(0) + xi;
        phim1_head =
            must_div(Tm,
                     d->Ab(0) * d->A(0) *
                         (must_div(d->X(1) - z2 * d->Xb(2), d->X(1) * Dm(1), "B2 X_1 Dm_1") +
                          must_div(Rational(1), Dm(0), "B2 Dm_0")),
                     "B2 Phi^{-1,-} denominator");
    } catch (const SingularParameters& e) {
        throw DenominatorVanishes(std::string(e.what()) + " (one-step relation embedded)", 0);
    }

    auto phi_p1 = [d, zeta](int i) {
        Rational v = zeta.pow(-i);
        for (int k = 1; k <= i; ++k)
            v *= must_div(d->A(k), d->Ab(k - 1), "Ab_{k-1} in Phi^{1,-}");
        return v;
    };
    auto phi_m1 = [d, zeta, phim1_head](int i) {
        if (i == 0) return Rational(0);
        Rational v = zeta.pow(i) * phim1_head;
        for (int k = 1; k <= i - 1; ++k)
            v *= must_div(d->Cb(k + 1), d->C(k), "C_k in Phi^{-1,-}");
        return v;
    };

    Rational lam_const;
    try {
        Rational lam_den = must_div((d->A(0) - zeta * d->Ab(0) - xi) * (d->X(1) - z2 * d->Xb(2)),
                                    d->C(1) * Dm(1), "B2 lambda^- inner denominator") +
                           d->A(0);
        lam_const =
            Rational(1) +
            must_div(d->C(1), d->A(0) - zeta * d->Ab(0) - xi, "B2 lambda^- head denominator") -
            must_div(Tm, lam_den, "B2 lambda^- denominator");
    } catch (const SingularParameters& e) {
        throw DenominatorVanishes(std::string(e.what()) + " (one-step relation embedded)", 0);
    }
    rel.lambda_factor = [d, lam_const](int x) {
        return lam_const + must_div(lambda(d->rho(), x), d->A(0), "A_0 in lambda^-");
    };
    rel.coeff = [d, zeta, z2, Dm, phi_p1, phi_m1](int i, int eps) -> Rational {
        if (eps == 1) return phi_p1(i);
        if (eps == -1) return phi_m1(i);
        if (eps == 0) {
            Rational Di = Dm(i);
            return must_div(d->X(i + 1) - z2 * d->Xb(i), d->A(i) * Di, "A_i Dm_i in Phi^{0,-}") *
                       phi_p1(i) +
                   must_div(d->X(i) - z2 * d->Xb(i + 1), zeta * d->Cb(i + 1) * Di,
                            "Cb_{i+1} Dm_i in Phi^{0,-}") *
                       phi_m1(i + 1);
        }
        return Rational(0);
    };
    return rel;
}

RelationInstance b2p_relation(const ParameterSet& params, const ShiftMap& shift, Direction dir) {
    auto d = make_data(params, shift);
    const Rational zeta = d->zeta(), xi = d->xi();
    const Rational z2 = zeta * zeta;

    RelationInstance rel;
    rel.kind = RelationKind::B2p;
    rel.direction = dir;
    rel.base = params;
    rel.target = d->rho_bar();
    rel.eta = shift.eta;

    if (dir == Direction::Plus) {
        rel.id = std::string(family_name(params.family)) + ":B2p+:" + shift.key();
        rel.support = {0, -1, -2};
        Rational W = (d->Y(0) + xi - zeta * d->Yb(0)) * (d->Y(1) + xi - zeta * d->Yb(0)) +
                     z2 * d->Xb(1) - d->X(1);
        auto phi_0 = [d, zeta](int i) {
            Rational v = zeta.pow(i);
            for (int k = 0; k < i; ++k) v *= must_div(d->Ab(k), d->A(k), "A_k in Phi^{0,+}");
            return v;
        };
        auto phi_m2 = [d, zeta, W](int i) {
            if (i < 2) return Rational(0);
            Rational v =
                zeta.pow(-i + 2) * must_div(W, d->A(0) * d->A(1), "A_0 A_1 in Phi^{-2,+}");
            for (int k = 1; k <= i - 2; ++k)
                v *= must_div(d->C(k + 2), d->Cb(k), "Cb_k in Phi^{-2,+}");
            return v;
        };
        rel.lambda_factor = [](int) { return Rational(1); };
        rel.coeff = [d, zeta, xi, z2, phi_0, phi_m2](int i, int eps) -> Rational {
            if (eps == 0) return phi_0(i);
            if (eps == -2) return phi_m2(i);
            if (eps == -1) {
                if (i == 0) return Rational(0);
                Rational E = zeta * d->Yb(i - 1) - d->Y(i) - xi;
                return must_div(d->X(i) - z2 * d->Xb(i), zeta * d->Ab(i - 1) * E,
                                "Ab_{i-1} E in Phi^{-1,+}") *
                           phi_0(i) +
                       must_div(d->X(i + 1) - z2 * d->Xb(i - 1), d->C(i + 1) * E,
                                "C_{i+1} E in Phi^{-1,+}") *
                           phi_m2(i + 1);
            }
            return Rational(0);
        };
        return rel;
    }

    rel.id = std::string(family_name(params.family)) + ":B2p-:" + shift.key();
    rel.support = {0, 1, 2};
    Rational W = (d->Y(0) - zeta * d->Yb(0) + xi) * (d->Y(1) - zeta * d->Yb(0) + xi) +
                 z2 * d->Xb(1) - d->X(1);
    auto phi_0 = [d, zeta](int i) {
        Rational v = zeta.pow(i);
        for (int k = 1; k <= i; ++k) v *= must_div(d->Cb(k), d->C(k), "C_k in Phi^{0,-}");
        return v;
    };
    // Chaining two degree-raising relations puts zeta^{-i} in front of the
    // double-raise coefficient (one inverse power per step).
    auto phi_p2 = [d, zeta, W](int i) {
        Rational v = zeta.pow(-i) * must_div(W, d->C(1) * d->C(2), "C_1 C_2 in Phi^{2,-}");
        for (int n = 0; n <= i - 1; ++n) v *= must_div(d->A(n + 2), d->Ab(n), "Ab_n in Phi^{2,-}");
        return v;
    };
    // Phi^{2,-}_i / A_{i+1} with the A_{i+1} product factor cancelled, so the
    // value stays finite at the support edge where A_{i+1} = 0.
    auto phi_p2_over_A = [d, zeta, W](int i) {
        Rational v = zeta.pow(-i) * must_div(W, d->C(1) * d->C(2), "C_1 C_2 in Phi^{2,-}");
        if (i == 0) return must_div(v, d->A(1), "A_1 in Phi^{1,-}");
        for (int n = 0; n <= i - 2; ++n) v *= must_div(d->A(n + 2), d->Ab(n), "Ab_n in Phi^{2,-}");
        return must_div(v, d->Ab(i - 1), "Ab_{i-1} in Phi^{1,-}");
    };
    auto phi_p1 = [d, zeta, xi, z2, phi_0, phi_p2_over_A](int i) {
        Rational E = zeta * d->Yb(i) - d->Y(i + 1) - xi;
        return must_div(d->X(i + 1) - z2 * d->Xb(i + 1), d->C(i + 1) * E,
                        "C_{i+1} E in Phi^{1,-}") *
                   phi_0(i) +
               must_div(d->X(i + 2) - z2 * d->Xb(i), E, "E in Phi^{1,-}") * phi_p2_over_A(i);
    };
    // The left factor is the relation's own i = 0 row: with Phi_0^{0,-} = 1,
    // lambda^-(x) = 1 + Phi_0^{1,-} R_1(x) + Phi_0^{2,-} R_2(x).
    Rational p01 = phi_p1(0);
    Rational p02 = phi_p2(0);
    rel.lambda_factor = [d, p01, p02](int x) {
        Rational lx = lambda(d->rho(), x);
        Rational r1 = must_div(lx - d->Y(0), d->A(0), "A_0 in lambda^-");
        Rational r2 = must_div((lx - d->Y(1)) * r1 - d->C(1), d->A(1), "A_1 in lambda^-");
        return Rational(1) + p01 * r1 + p02 * r2;
    };
    rel.coeff = [phi_0, phi_p1, phi_p2](int i, int eps) -> Rational {
        if (eps == 0) return phi_0(i);
        if (eps == 2) return phi_p2(i);
        if (eps == 1) return phi_p1(i);
        return Rational(0);
    };
    return rel;
}

VerificationReport verify_relation(const RelationInstance& rel) {
    VerificationReport rep;
    rep.relation_id = rel.id;
    rep.params = rel.base.to_json();

    const bool plus = rel.direction == Direction::Plus;
    const int lhs_N = plus ? rel.base.N : rel.target.N;
    const int rhs_N = plus ? rel.target.N : rel.base.N;
    const ParameterSet& lhs_ps = plus ? rel.base : rel.target;
    const ParameterSet& rhs_ps = plus ? rel.target : rel.base;

    const int x_lo = std::max(0, -rel.eta);
    const int x_hi = std::min(rel.base.N, rel.target.N - rel.eta);
    if (x_lo > x_hi) {
        rep.verdict = Verdict::NotApplicable;
        rep.note = "empty common grid";
        return rep;
    }

    // Memoized polynomial values, indexed [degree][grid point].
    auto memo = [](const ParameterSet& ps, int max_i) {
        return std::vector<std::vector<std::optional<Rational>>>(
            max_i + 1, std::vector<std::optional<Rational>>(ps.N + 1));
    };
    auto lhs_vals = memo(lhs_ps, lhs_N);
    auto rhs_vals = memo(rhs_ps, rhs_N);
    auto poly = [](const ParameterSet& ps, auto& vals, int i, int x) -> const Rational& {
        auto& slot = vals[i][x];
        if (!slot) slot = eval_poly_hypergeometric(ps, i, x);
        return *slot;
    };

    bool truncated = false;
    int i = 0;
    for (; i <= lhs_N && !truncated; ++i) {
        // Coefficients first: zero ones are skipped, which also implements the
        // boundary conventions at the low end of the degree range.
        std::vector<std::pair<int, Rational>> terms;
        bool stop = false;
        for (int eps : rel.support) {
            Rational c;
            try {
                c = rel.coeff(i, eps);
            } catch (const SingularParameters&) {
                stop = true; // generic construction undefined this far out
                break;
            }
            if (c.is_zero()) continue;
            int j = i + eps;
            if (j < 0) {
                rep.verdict = Verdict::Fail;
                rep.note = "nonzero coefficient references degree below 0 (convention violated)";
                rep.residual_locus.push_back({i, -1});
                return rep;
            }
            if (j > rhs_N) {
                stop = true; // support edge of the finite family
                break;
            }
            terms.emplace_back(j, c);
        }
        if (stop) {
            truncated = true;
            break;
        }
        for (int x = x_lo; x <= x_hi; ++x) {
            const int xb = x + rel.eta;
            const int lhs_x = plus ? x : xb;
            Rational residual = rel.lambda_factor(x) * poly(lhs_ps, lhs_vals, i, lhs_x);
            for (const auto& [j, c] : terms)
                residual -= c * poly(rhs_ps, rhs_vals, j, plus ? xb : x);
            ++rep.points_checked;
            if (!residual.is_zero()) rep.residual_locus.push_back({i, x});
        }
        rep.max_index_checked = i;
    }
    if (truncated) rep.note = "degree range truncated at support edge i=" + std::to_string(i);

    if (rep.points_checked == 0) {
        rep.verdict = Verdict::Inconclusive;
        rep.note = "no checkable points";
    } else {
        rep.verdict = rep.residual_locus.empty() ? Verdict::Pass : Verdict::Fail;
    }
    return rep;
}

RelationInstance compose_a2_to_b2(const RelationInstance& plus_rel,
                                  const RelationInstance& minus_rel) {
    if (plus_rel.direction != Direction::Plus || minus_rel.direction != Direction::Minus)
        throw IncompatibleShifts("compose_a2_to_b2 needs a plus and a minus relation");
    if (!(plus_rel.target == minus_rel.target))
        throw IncompatibleShifts("relations do not meet at a common barred parameter set");

    RelationInstance out;
    out.kind = RelationKind::B2;
    out.direction = Direction::Plus;
    out.id = plus_rel.id + " o " + minus_rel.id;
    out.base = plus_rel.base;
    out.target = minus_rel.base;
    out.eta = plus_rel.eta - minus_rel.eta;
    out.support = {1, 0, -1};

    auto pl = plus_rel.lambda_factor;
    auto ml = minus_rel.lambda_factor;
    int eta_net = out.eta;
    out.lambda_factor = [pl, ml, eta_net](int x) { return pl(x) * ml(x + eta_net); };

    auto pc = plus_rel.coeff;
    auto mc = minus_rel.coeff;
    // Left factors gate the products: a vanishing one suppresses the right
    // factor entirely (which may sit past its construction's valid range).
    auto prod = [](const Rational& left, auto&& right) {
        return left.is_zero() ? Rational(0) : left * right();
    };
    out.coeff = [pc, mc, prod](int i, int eps) -> Rational {
        if (eps == 1) return prod(pc(i, 0), [&] { return mc(i, 1); });
        if (eps == 0)
            return prod(pc(i, 0), [&] { return mc(i, 0); }) +
                   prod(pc(i, -1), [&] { return mc(i - 1, 1); });
        if (eps == -1) return prod(pc(i, -1), [&] { return mc(i - 1, 0); });
        return Rational(0);
    };
    return out;
}

RelationInstance compose_a2_to_b2p(const RelationInstance& first, const RelationInstance& second) {
    if (first.direction != Direction::Plus || second.direction != Direction::Plus)
        throw IncompatibleShifts("compose_a2_to_b2p needs two plus relations");
    if (!(second.base == first.target))
        throw IncompatibleShifts("second relation must start at the first one's barred set");

    RelationInstance out;
    out.kind = RelationKind::B2p;
    out.direction = Direction::Plus;
    out.id = first.id + " o " + second.id;
    out.base = first.base;
    out.target = second.target;
    out.eta = first.eta + second.eta;
    out.support = {0, -1, -2};

    auto fl = first.lambda_factor;
    auto sl = second.lambda_factor;
    int eta1 = first.eta;
    out.lambda_factor = [fl, sl, eta1](int x) { return fl(x) * sl(x + eta1); };

    auto fc = first.coeff;
    auto sc = second.coeff;
    auto prod = [](const Rational& left, auto&& right) {
        return left.is_zero() ? Rational(0) : left * right();
    };
    out.coeff = [fc, sc, prod](int i, int eps) -> Rational {
        if (eps == 0) return prod(fc(i, 0), [&] { return sc(i, 0); });
        if (eps == -1)
            return prod(fc(i, 0), [&] { return sc(i, -1); }) +
                   prod(fc(i, -1), [&] { return sc(i - 1, 0); });
        if (eps == -2) return prod(fc(i, -1), [&] { return sc(i - 1, -1); });
        return Rational(0);
    };
    return out;
}

bool proportional(const RelationInstance& a, const RelationInstance& b, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.direction != b.direction) return fail("directions differ");

    std::vector<int> supports = a.support;
    for (int e : b.support)
        if (std::find(supports.begin(), supports.end(), e) == supports.end())
            supports.push_back(e);

    const int x_lo = std::max(0, -std::max(a.eta, b.eta));
    const int x_hi = std::min(a.base.N, std::min(a.target.N, b.target.N) - std::max(a.eta, b.eta));
    const int i_max = std::min(a.base.N, std::min(a.target.N, b.target.N));

    std::vector<std::pair<Rational, Rational>> samples;
    for (int x = x_lo; x <= x_hi; ++x)
        samples.emplace_back(a.lambda_factor(x), b.lambda_factor(x));
    for (int i = 0; i <= i_max; ++i)
        for (int eps : supports) {
            Rational va, vb;
            try {
                va = a.coeff(i, eps);
                vb = b.coeff(i, eps);
            } catch (const SingularParameters&) {
                continue; // outside one construction's valid range
            }
            samples.emplace_back(va, vb);
        }

    const std::pair<Rational, Rational>* anchor = nullptr;
    for (const auto& s : samples) {
        if (s.first.is_zero() != s.second.is_zero())
            return fail("zero patterns differ");
        if (!s.first.is_zero() && anchor == nullptr) anchor = &s;
    }
    if (anchor == nullptr) return fail("all coefficients vanish");
    for (const auto& s : samples)
        if (!(s.first * anchor->second == s.second * anchor->first))
            return fail("cross products differ");
    return true;
}

} // namespace askey
