#include "askey/shift.hpp"

#include <sstream>

#include "askey/banita.hpp"

namespace askey {

bool ShiftMap::is_identity() const {
    if (eta != 0 || n_offset != 0) return false;
    for (const auto& [name, mv] : moves)
        if (!mv.is_identity()) return false;
    return true;
}

ParameterSet ShiftMap::apply(const ParameterSet& params) const {
    if (params.family != family) throw InvalidShift("shift/family mismatch");
    ParameterSet barred = params;
    barred.N = params.N + n_offset;
    if (barred.N < 0) throw InvalidShift("shift drives N below 0");
    const bool qfam = is_q_family(family);
    for (const auto& [name, mv] : moves) {
        auto it = barred.named.find(name);
        if (it == barred.named.end()) throw InvalidShift("shift moves unknown parameter " + name);
        if (qfam)
            it->second *= params.q().pow(mv.qexp);
        else
            it->second += mv.add;
    }
    return barred;
}

ShiftMap ShiftMap::inverse() const {
    ShiftMap inv = *this;
    inv.eta = -eta;
    inv.n_offset = -n_offset;
    for (auto& [name, mv] : inv.moves) {
        mv.qexp = -mv.qexp;
        mv.add = -mv.add;
    }
    return inv;
}

std::string ShiftMap::key() const {
    std::ostringstream os;
    os << "eta=" << eta << ";dN=" << n_offset;
    for (const auto& [name, mv] : moves) {
        if (mv.is_identity()) continue;
        if (is_q_family(family))
            os << ";" << name << "*=q^" << mv.qexp;
        else
            os << ";" << name << "+=" << mv.add.str();
    }
    return os.str();
}

nlohmann::json ShiftMap::to_json() const {
    std::string nbar = "N";
    if (n_offset > 0) nbar += "+" + std::to_string(n_offset);
    if (n_offset < 0) nbar += std::to_string(n_offset);
    nlohmann::json map = nlohmann::json::object();
    for (const auto& [name, mv] : moves) {
        if (mv.is_identity()) {
            map[name] = name;
        } else if (is_q_family(family)) {
            std::string prefix = mv.qexp == 1 ? "q" : "q^" + std::to_string(mv.qexp);
            map[name] = prefix + "*" + name;
        } else {
            map[name] = mv.add.sign() > 0 ? name + "+" + mv.add.str() : name + mv.add.str();
        }
    }
    return nlohmann::json{{"eta", eta}, {"N_bar", nbar}, {"map", map}};
}

ShiftMap ShiftMap::from_json(FamilyId family, const nlohmann::json& j) {
    ShiftMap s;
    s.family = family;
    s.eta = j.at("eta").get<int>();
    std::string nbar = j.at("N_bar").get<std::string>();
    if (nbar == "N")
        s.n_offset = 0;
    else if (nbar.size() > 1 && nbar[0] == 'N')
        s.n_offset = std::stoi(nbar.substr(1));
    else
        throw ConfigError("bad N_bar spec '" + nbar + "'");
    for (const auto& [name, spec] : j.at("map").items()) {
        std::string text = spec.get<std::string>();
        ParamMove mv;
        if (text == name) {
            // identity
        } else if (is_q_family(family)) {
            auto star = text.find('*');
            if (star == std::string::npos || text.substr(star + 1) != name)
                throw ConfigError("bad move spec '" + text + "'");
            std::string qpart = text.substr(0, star);
            if (qpart == "q")
                mv.qexp = 1;
            else if (qpart.rfind("q^", 0) == 0)
                mv.qexp = std::stoi(qpart.substr(2));
            else
                throw ConfigError("bad move spec '" + text + "'");
        } else {
            if (text.rfind(name, 0) != 0) throw ConfigError("bad move spec '" + text + "'");
            mv.add = Rational::parse(text.substr(name.size()));
        }
        s.moves[name] = mv;
    }
    return s;
}

std::pair<Rational, Rational> shift_scalars(const ParameterSet& params, const ShiftMap& shift) {
    ParameterSet barred = shift.apply(params);
    const int eta = shift.eta;
    const int N = params.N, Nbar = barred.N;

    auto check = [&](bool ok, const char* what) {
        if (!ok) throw InvalidShift(std::string("bar-parameter constraint violated: ") + what);
    };

    switch (params.family) {
        case FamilyId::qR: {
            const Rational& q = params.q();
            check(barred.at("gamma") == params.at("gamma") * q.pow(Nbar - N - 2 * eta),
                  "gamma_bar = gamma q^{N_bar-N-2 eta}");
            Rational zeta = q.pow(eta);
            Rational xi = (Rational(1) - q.pow(eta)) *
                          (Rational(1) - params.at("gamma") * q.pow(-eta - N));
            return {zeta, xi};
        }
        case FamilyId::qH:
        case FamilyId::qqK:
        case FamilyId::qK:
        case FamilyId::aqK: {
            const Rational& q = params.q();
            return {q.pow(eta), Rational(1) - q.pow(eta)};
        }
        case FamilyId::dqH: {
            const Rational& q = params.q();
            check(barred.at("alpha") * barred.at("beta") ==
                      params.at("alpha") * params.at("beta") * q.pow(-2 * eta),
                  "alpha_bar beta_bar = alpha beta q^{-2 eta}");
            Rational xi = (Rational(1) - q.pow(eta)) *
                          (Rational(1) - params.at("alpha") * params.at("beta") * q.pow(1 - eta));
            return {q.pow(eta), xi};
        }
        case FamilyId::dqK: {
            const Rational& q = params.q();
            check(barred.at("alpha") == params.at("alpha") * q.pow(-2 * eta),
                  "alpha_bar = alpha q^{-2 eta}");
            Rational xi = (Rational(1) - q.pow(eta)) *
                          (Rational(1) - params.at("alpha") * q.pow(-eta));
            return {q.pow(eta), xi};
        }
        case FamilyId::R: {
            check(params.at("gamma") - barred.at("gamma") + Rational(Nbar - N) == Rational(2 * eta),
                  "2 eta = gamma - gamma_bar + N_bar - N");
            return {Rational(1), Rational(eta) * (params.at("gamma") - Rational(N + eta))};
        }
        case FamilyId::H:
        case FamilyId::K:
            return {Rational(1), Rational(-eta)};
        case FamilyId::dH: {
            check(params.at("alpha") + params.at("beta") - barred.at("alpha") - barred.at("beta") ==
                      Rational(2 * eta),
                  "alpha + beta - alpha_bar - beta_bar = 2 eta");
            Rational xi =
                Rational(eta) * (params.at("alpha") + params.at("beta") + Rational(1 - eta));
            return {Rational(1), xi};
        }
        case FamilyId::BI: {
            int Ne = parity_decompose(N).n_e;
            int Nbe = parity_decompose(Nbar).n_e;
            check(barred.at("gamma") == params.at("gamma") + Rational(Nbe - Ne - eta),
                  "gamma_bar = gamma + N_bar^e - N^e - eta");
            Rational zeta = parity_sign(eta);
            // The prefactor follows from the matching identity itself:
            // (1 - (-1)^eta)/2, which is 1 for odd eta and 0 for eta = 0.
            Rational xi = (Rational(1) - zeta) / Rational(2) *
                          (params.at("gamma") - Rational(Ne) - Rational(eta + 1, 2));
            return {zeta, xi};
        }
        default:
            throw UnsupportedFamily(std::string("no shift rule for family ") +
                                    family_name(params.family));
    }
}

} // namespace askey
