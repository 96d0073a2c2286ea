#include "askey/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include "askey/banita.hpp"

namespace askey {

namespace {

ExprPtr load_expr(const nlohmann::json& j) { return Expr::load(j); }

Phi0Mode load_mode(const nlohmann::json& j, ExprPtr& tree) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "lambda0_minus_sum") return Phi0Mode::Lambda0MinusSum;
    if (mode == "neg_sum") return Phi0Mode::NegSum;
    if (mode == "expr") {
        tree = load_expr(j.at("tree"));
        return Phi0Mode::Expr;
    }
    throw ConfigError("unknown coefficient mode '" + mode + "'");
}

nlohmann::json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open catalog file " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

Rational eval_expr(const ExprPtr& e, const ParameterSet& params, long i, long x) {
    EvalCtx ctx;
    ctx.params = &params;
    ctx.i = i;
    ctx.x = x;
    return e->eval(ctx);
}

} // namespace

Catalog Catalog::load(const std::string& dir) {
    Catalog cat;
    static const char* kFiles[] = {"qR", "qH", "dqH", "qqK", "qK", "aqK",
                                   "dqK", "R",  "H",   "dH",  "K",  "BI", "G"};
    for (const char* name : kFiles) {
        nlohmann::json j = read_file(dir + "/" + name + ".json");
        FamilyId fam = family_from_name(j.at("family").get<std::string>());

        for (const auto& ej : j.value("a2", nlohmann::json::array())) {
            A2Entry e;
            e.id = ej.at("id").get<std::string>();
            e.family = fam;
            e.shift = ShiftMap::from_json(fam, ej.at("shift"));
            const auto& plus = ej.at("plus");
            e.lambda_plus = load_expr(plus.at("lambda"));
            e.phi0_plus = load_expr(plus.at("phi0"));
            e.phim1_plus = load_expr(plus.at("phim1"));
            const auto& minus = ej.at("minus");
            e.lambda_minus = load_expr(minus.at("lambda"));
            e.phi0_minus = load_expr(minus.at("phi0"));
            e.phi1_minus = load_expr(minus.at("phi1"));
            if (ej.contains("lambda_nu")) e.lambda_nu = load_expr(ej.at("lambda_nu"));
            if (ej.contains("chi")) {
                const auto& cj = ej.at("chi");
                const std::string kind = cj.at("kind").get<std::string>();
                if (kind == "zero") {
                    e.chi_kind = ChiKind::Zero;
                } else if (kind == "expr") {
                    e.chi_kind = ChiKind::Expr;
                    e.chi = load_expr(cj.at("tree"));
                } else if (kind == "weight_ratio") {
                    e.chi_kind = ChiKind::WeightRatio;
                    e.chi = load_expr(cj.at("den"));
                } else {
                    throw ConfigError("unknown chi kind '" + kind + "'");
                }
            }
            cat.a2_[fam].push_back(std::move(e));
        }

        for (const auto& ej : j.value("b2", nlohmann::json::array())) {
            B2Entry e;
            e.id = ej.at("id").get<std::string>();
            e.family = fam;
            e.shift = ShiftMap::from_json(fam, ej.at("shift"));
            e.via = {ej.at("via")[0].get<std::string>(), ej.at("via")[1].get<std::string>()};
            e.lambda_plus = load_expr(ej.at("lambda"));
            e.phi_p1 = load_expr(ej.at("phi_p1"));
            e.phi_m1 = load_expr(ej.at("phi_m1"));
            e.phi0_mode = load_mode(ej.at("phi_0"), e.phi0);
            cat.b2_[fam].push_back(std::move(e));
        }

        for (const auto& ej : j.value("b2p", nlohmann::json::array())) {
            B2pEntry e;
            e.id = ej.at("id").get<std::string>();
            e.family = fam;
            e.shift = ShiftMap::from_json(fam, ej.at("shift"));
            e.via = {ej.at("via")[0].get<std::string>(), ej.at("via")[1].get<std::string>()};
            const auto& plus = ej.at("plus");
            e.phi0_plus = load_expr(plus.at("phi0"));
            e.phim2_plus = load_expr(plus.at("phim2"));
            e.phim1_mode = load_mode(plus.at("phim1"), e.phim1_plus);
            const auto& minus = ej.at("minus");
            e.lambda_minus = load_expr(minus.at("lambda"));
            e.phi_p2_minus = load_expr(minus.at("phi_p2"));
            e.phi0_minus = load_expr(minus.at("phi_0"));
            e.phip1_mode = load_mode(minus.at("phi_p1"), e.phip1_minus);
            cat.b2p_[fam].push_back(std::move(e));
        }

        for (const auto& ej : j.value("bi_relations", nlohmann::json::array())) {
            BIEntry e;
            e.id = ej.at("id").get<std::string>();
            e.side = ej.at("side").get<std::string>().at(0);
            e.n_parity = ej.at("n_parity").get<int>();
            const auto& bar = ej.at("bar");
            e.x_offset = bar.at("x_offset").get<int>();
            e.n_offset = bar.at("n_offset").get<int>();
            e.bar_alpha = load_expr(bar.at("alpha"));
            e.bar_beta = load_expr(bar.at("beta"));
            e.bar_gamma = load_expr(bar.at("gamma"));
            e.z0[0] = load_expr(ej.at("z0_even"));
            e.z0[1] = load_expr(ej.at("z0_odd"));
            e.zm[0] = load_expr(ej.at("zm_even"));
            e.zm[1] = load_expr(ej.at("zm_odd"));
            e.w0[0] = load_expr(ej.at("w0_even"));
            e.w0[1] = load_expr(ej.at("w0_odd"));
            e.wp[0] = load_expr(ej.at("wp_even"));
            e.wp[1] = load_expr(ej.at("wp_odd"));
            e.omega = load_expr(ej.at("omega"));
            cat.bi_.push_back(std::move(e));
        }

        for (const auto& ej : j.value("g_relations", nlohmann::json::array())) {
            GEntry e;
            e.id = ej.at("id").get<std::string>();
            e.minus_form = ej.at("form").get<std::string>() == "minus";
            e.shift = ShiftMap::from_json(FamilyId::G, ej.at("shift"));
            if (e.minus_form) {
                e.lambda = load_expr(ej.at("lambda"));
                e.phi1 = load_expr(ej.at("phi1"));
                e.phi0 = load_expr(ej.at("phi0"));
            } else {
                e.c0 = load_expr(ej.at("c0"));
                e.cm1 = load_expr(ej.at("cm1"));
            }
            cat.g_.push_back(std::move(e));
        }

        for (const auto& lj : j.value("limits", nlohmann::json::array()))
            cat.limits_[fam].push_back(
                {lj.at("source").get<std::string>(), lj.at("target").get<std::string>()});
    }
    return cat;
}

const Catalog& Catalog::instance() {
    static Catalog cat = [] {
        const char* env = std::getenv("ASKEY_CATALOG_DIR");
        return load(env ? env : ASKEY_SOURCE_CATALOG_DIR);
    }();
    return cat;
}

const std::vector<A2Entry>& Catalog::a2(FamilyId f) const {
    static const std::vector<A2Entry> empty;
    auto it = a2_.find(f);
    return it == a2_.end() ? empty : it->second;
}
const std::vector<B2Entry>& Catalog::b2(FamilyId f) const {
    static const std::vector<B2Entry> empty;
    auto it = b2_.find(f);
    return it == b2_.end() ? empty : it->second;
}
const std::vector<B2pEntry>& Catalog::b2p(FamilyId f) const {
    static const std::vector<B2pEntry> empty;
    auto it = b2p_.find(f);
    return it == b2p_.end() ? empty : it->second;
}

const A2Entry& Catalog::a2_by_id(const std::string& id) const {
    for (const auto& [fam, entries] : a2_)
        for (const auto& e : entries)
            if (e.id == id) return e;
    throw ConfigError("unknown A2 relation '" + id + "'");
}
const B2Entry& Catalog::b2_by_id(const std::string& id) const {
    for (const auto& [fam, entries] : b2_)
        for (const auto& e : entries)
            if (e.id == id) return e;
    throw ConfigError("unknown B2 relation '" + id + "'");
}
const B2pEntry& Catalog::b2p_by_id(const std::string& id) const {
    for (const auto& [fam, entries] : b2p_)
        for (const auto& e : entries)
            if (e.id == id) return e;
    throw ConfigError("unknown B2' relation '" + id + "'");
}
const BIEntry& Catalog::bi_by_id(const std::string& id) const {
    for (const auto& e : bi_)
        if (e.id == id) return e;
    throw ConfigError("unknown BI relation '" + id + "'");
}
const GEntry& Catalog::g_by_id(const std::string& id) const {
    for (const auto& e : g_)
        if (e.id == id) return e;
    throw ConfigError("unknown G relation '" + id + "'");
}

std::vector<std::string> Catalog::list_ids(FamilyId f, RelationKind kind) const {
    std::vector<std::string> ids;
    switch (kind) {
        case RelationKind::A2:
            for (const auto& e : a2(f)) ids.push_back(e.id);
            break;
        case RelationKind::B2:
            for (const auto& e : b2(f)) ids.push_back(e.id);
            break;
        case RelationKind::B2p:
            for (const auto& e : b2p(f)) ids.push_back(e.id);
            break;
        case RelationKind::BIrel:
            if (f == FamilyId::BI || f == FamilyId::CBI)
                for (const auto& e : bi_) ids.push_back(e.id);
            break;
        case RelationKind::Grel:
            if (f == FamilyId::G)
                for (const auto& e : g_) ids.push_back(e.id);
            break;
    }
    return ids;
}

std::string Catalog::limit_correspondence(const std::string& source_id, FamilyId target) const {
    auto it = limits_.find(target);
    if (it != limits_.end())
        for (const auto& row : it->second)
            if (row.source == source_id) return row.target;
    throw UnknownCorrespondence("no published correspondence for " + source_id + " -> " +
                                family_name(target));
}

RelationInstance Catalog::instantiate(const A2Entry& e, Direction dir,
                                      const ParameterSet& params) const {
    RelationInstance rel;
    rel.kind = RelationKind::A2;
    rel.direction = dir;
    rel.id = e.id + (dir == Direction::Plus ? "+" : "-");
    rel.base = params;
    rel.target = e.shift.apply(params);
    rel.eta = e.shift.eta;
    ParameterSet base = params;
    if (dir == Direction::Plus) {
        rel.support = {0, -1};
        auto lam = e.lambda_plus;
        auto p0 = e.phi0_plus, pm1 = e.phim1_plus;
        rel.lambda_factor = [lam, base](int x) { return eval_expr(lam, base, 0, x); };
        rel.coeff = [p0, pm1, base](int i, int eps) {
            if (eps == 0) return eval_expr(p0, base, i, 0);
            if (eps == -1) return eval_expr(pm1, base, i, 0);
            return Rational(0);
        };
    } else {
        rel.support = {0, 1};
        auto lam = e.lambda_minus;
        auto p0 = e.phi0_minus, p1 = e.phi1_minus;
        rel.lambda_factor = [lam, base](int x) { return eval_expr(lam, base, 0, x); };
        rel.coeff = [p0, p1, base](int i, int eps) {
            if (eps == 0) return eval_expr(p0, base, i, 0);
            if (eps == 1) return eval_expr(p1, base, i, 0);
            return Rational(0);
        };
    }
    return rel;
}

RelationInstance Catalog::instantiate(const B2Entry& e, const ParameterSet& params) const {
    RelationInstance rel;
    rel.kind = RelationKind::B2;
    rel.direction = Direction::Plus;
    rel.id = e.id;
    rel.base = params;
    rel.target = e.shift.apply(params);
    rel.eta = e.shift.eta;
    rel.support = {1, 0, -1};
    ParameterSet base = params;
    auto lam = e.lambda_plus;
    rel.lambda_factor = [lam, base](int x) { return eval_expr(lam, base, 0, x); };
    auto p1 = e.phi_p1, m1 = e.phi_m1, p0 = e.phi0;
    Phi0Mode mode = e.phi0_mode;
    rel.coeff = [p1, m1, p0, mode, lam, base](int i, int eps) -> Rational {
        if (eps == 1) return eval_expr(p1, base, i, 0);
        if (eps == -1) return eval_expr(m1, base, i, 0);
        if (eps == 0) {
            switch (mode) {
                case Phi0Mode::Lambda0MinusSum:
                    return eval_expr(lam, base, 0, 0) - eval_expr(p1, base, i, 0) -
                           eval_expr(m1, base, i, 0);
                case Phi0Mode::NegSum:
                    return -eval_expr(p1, base, i, 0) - eval_expr(m1, base, i, 0);
                case Phi0Mode::Expr:
                    return eval_expr(p0, base, i, 0);
            }
        }
        return Rational(0);
    };
    return rel;
}

RelationInstance Catalog::instantiate(const B2pEntry& e, Direction dir,
                                      const ParameterSet& params) const {
    RelationInstance rel;
    rel.kind = RelationKind::B2p;
    rel.direction = dir;
    rel.id = e.id + (dir == Direction::Plus ? "+" : "-");
    rel.base = params;
    rel.target = e.shift.apply(params);
    rel.eta = e.shift.eta;
    ParameterSet base = params;
    if (dir == Direction::Plus) {
        rel.support = {0, -1, -2};
        rel.lambda_factor = [](int) { return Rational(1); };
        auto p0 = e.phi0_plus, m2 = e.phim2_plus, m1 = e.phim1_plus;
        Phi0Mode mode = e.phim1_mode;
        rel.coeff = [p0, m2, m1, mode, base](int i, int eps) -> Rational {
            if (eps == 0) return eval_expr(p0, base, i, 0);
            if (eps == -2) return eval_expr(m2, base, i, 0);
            if (eps == -1) {
                if (mode == Phi0Mode::Expr) return eval_expr(m1, base, i, 0);
                return Rational(1) - eval_expr(p0, base, i, 0) - eval_expr(m2, base, i, 0);
            }
            return Rational(0);
        };
    } else {
        rel.support = {0, 1, 2};
        auto lam = e.lambda_minus;
        rel.lambda_factor = [lam, base](int x) { return eval_expr(lam, base, 0, x); };
        auto p2 = e.phi_p2_minus, p0 = e.phi0_minus, p1 = e.phip1_minus;
        Phi0Mode mode = e.phip1_mode;
        rel.coeff = [p2, p0, p1, mode, lam, base](int i, int eps) -> Rational {
            if (eps == 0) return eval_expr(p0, base, i, 0);
            if (eps == 2) return eval_expr(p2, base, i, 0);
            if (eps == 1) {
                switch (mode) {
                    case Phi0Mode::Lambda0MinusSum:
                        return eval_expr(lam, base, 0, 0) - eval_expr(p2, base, i, 0) -
                               eval_expr(p0, base, i, 0);
                    case Phi0Mode::NegSum:
                        return -eval_expr(p2, base, i, 0) - eval_expr(p0, base, i, 0);
                    case Phi0Mode::Expr:
                        return eval_expr(p1, base, i, 0);
                }
            }
            return Rational(0);
        };
    }
    return rel;
}

ParameterSet Catalog::bi_barred(const BIEntry& e, const ParameterSet& params) const {
    ParameterSet barred;
    barred.family = (e.side == 'B') ? FamilyId::CBI : FamilyId::BI;
    barred.N = params.N + e.n_offset;
    EvalCtx ctx;
    ctx.params = &params;
    barred.named.emplace("alpha", e.bar_alpha->eval(ctx));
    barred.named.emplace("beta", e.bar_beta->eval(ctx));
    barred.named.emplace("gamma", e.bar_gamma->eval(ctx));
    return barred;
}

RelationInstance Catalog::instantiate(const BIEntry& e, Direction dir,
                                      const ParameterSet& params) const {
    if (params.N % 2 != e.n_parity)
        throw InvalidShift(e.id + " requires N " + (e.n_parity == 0 ? "even" : "odd"));
    RelationInstance rel;
    rel.kind = RelationKind::BIrel;
    rel.direction = dir;
    rel.id = e.id + (dir == Direction::Plus ? "(a)" : "(b)");
    rel.base = params;
    rel.target = bi_barred(e, params);
    rel.eta = e.x_offset;

    ParameterSet base = params;
    const Rational alpha = params.at("alpha"), beta = params.at("beta"), gamma = params.at("gamma");
    const int Ne = parity_decompose(params.N).n_e;
    auto eval_parity = [base, Ne](const ExprPtr& tree, int i) {
        EvalCtx ctx;
        ctx.params = &base;
        ctx.i = i;
        ctx.extra.emplace("ie", Rational(parity_decompose(i).n_e));
        ctx.extra.emplace("Ne", Rational(Ne));
        return tree->eval(ctx);
    };

    if (dir == Direction::Plus) {
        // left side carries the base polynomial with unit factor
        rel.support = {0, -1};
        rel.lambda_factor = [](int) { return Rational(1); };
        auto z0e = e.z0[0], z0o = e.z0[1], zme = e.zm[0], zmo = e.zm[1];
        char side = e.side;
        rel.coeff = [=](int i, int eps) -> Rational {
            int ip = parity_decompose(i).n_p;
            if (eps == 0) return eval_parity(ip == 0 ? z0e : z0o, i);
            if (eps == -1) {
                Rational den = (side == 'B') ? Rational(i) + alpha + beta
                                             : alpha + beta + Rational(i + 1);
                if (den.is_zero()) throw SingularParameters("BI relation z-denominator vanishes");
                return eval_parity(ip == 0 ? zme : zmo, i) / den;
            }
            return Rational(0);
        };
    } else {
        rel.support = {0, 1};
        auto omega = e.omega;
        char side = e.side;
        rel.lambda_factor = [=](int x) {
            Rational sgn = parity_sign(x);
            Rational mid = (side == 'B') ? gamma - Rational(Ne) - Rational(1, 2)
                                         : -(gamma + Rational(Ne) + Rational(1, 2));
            Rational om = eval_parity(omega, 0);
            return (Rational(x) * sgn + sgn * mid + om) / Rational(2);
        };
        auto w0e = e.w0[0], w0o = e.w0[1], wpe = e.wp[0], wpo = e.wp[1];
        rel.coeff = [=](int i, int eps) -> Rational {
            int ip = parity_decompose(i).n_p;
            if (eps == 1) return eval_parity(ip == 0 ? wpe : wpo, i);
            if (eps == 0) {
                Rational den = Rational(i + 1) + alpha + beta;
                if (den.is_zero()) throw SingularParameters("BI relation w-denominator vanishes");
                return eval_parity(ip == 0 ? w0e : w0o, i) / den;
            }
            return Rational(0);
        };
    }
    return rel;
}

RelationInstance Catalog::instantiate(const GEntry& e, const ParameterSet& params) const {
    RelationInstance rel;
    rel.kind = RelationKind::Grel;
    rel.id = e.id;
    rel.base = params;
    rel.target = e.shift.apply(params);
    rel.eta = e.shift.eta;
    ParameterSet base = params;
    if (!e.minus_form) {
        rel.direction = Direction::Plus;
        rel.support = {0, -1};
        rel.lambda_factor = [](int) { return Rational(1); };
        auto c0 = e.c0, cm1 = e.cm1;
        rel.coeff = [c0, cm1, base](int i, int eps) -> Rational {
            if (eps == 0) return eval_expr(c0, base, i, 0);
            if (eps == -1) return eval_expr(cm1, base, i, 0);
            return Rational(0);
        };
    } else {
        rel.direction = Direction::Minus;
        rel.support = {0, 1};
        auto lam = e.lambda;
        rel.lambda_factor = [lam, base](int x) { return eval_expr(lam, base, 0, x); };
        auto p1 = e.phi1, p0 = e.phi0;
        rel.coeff = [p1, p0, base](int i, int eps) -> Rational {
            if (eps == 1) return eval_expr(p1, base, i, 0);
            if (eps == 0) return eval_expr(p0, base, i, 0);
            return Rational(0);
        };
    }
    return rel;
}

Rational Catalog::eval_lambda_nu(const A2Entry& e, const ParameterSet& params) const {
    if (!e.lambda_nu) throw ConfigError("no lambda_nu recorded for " + e.id);
    return eval_expr(e.lambda_nu, params, 0, 0);
}

std::optional<Rational> Catalog::eval_chi(const A2Entry& e, const ParameterSet& params) const {
    switch (e.chi_kind) {
        case ChiKind::None:
            return std::nullopt;
        case ChiKind::Zero:
            return Rational(0);
        case ChiKind::Expr:
            return eval_expr(e.chi, params, 0, 0);
        case ChiKind::WeightRatio: {
            Rational den = eval_expr(e.chi, params, 0, 0);
            if (den.is_zero()) throw SingularParameters("chi denominator vanishes");
            return weight(params, params.N) / den;
        }
    }
    return std::nullopt;
}

} // namespace askey
