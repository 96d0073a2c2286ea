#include "askey/search.hpp"

#include <algorithm>
#include <set>

#include "askey/banita.hpp"

namespace askey {

namespace {

/// Parameters whose bar-move is forced by the family's lambda-matching rule.
bool move_is_forced(FamilyId f, const std::string& name) {
    switch (f) {
        case FamilyId::qR: return name == "gamma";
        case FamilyId::dqK: return name == "alpha";
        case FamilyId::dqH: return name == "beta"; // forced once alpha's move is chosen
        case FamilyId::R: return name == "gamma";
        case FamilyId::dH: return name == "beta";
        case FamilyId::BI: return name == "gamma";
        default: return false;
    }
}

/// The forced move for (eta, n_offset) and, where relevant, the other moves.
ParamMove forced_move(const SearchSpace& space, const std::string& name, int eta, int n_offset,
                      const std::map<std::string, ParamMove>& chosen) {
    ParamMove mv;
    switch (space.family) {
        case FamilyId::qR:
            mv.qexp = n_offset - 2 * eta;
            break;
        case FamilyId::dqK:
            mv.qexp = -2 * eta;
            break;
        case FamilyId::dqH:
            mv.qexp = -2 * eta - chosen.at("alpha").qexp;
            break;
        case FamilyId::R:
            mv.add = Rational(n_offset - 2 * eta);
            break;
        case FamilyId::dH:
            mv.add = Rational(-2 * eta) - chosen.at("alpha").add;
            break;
        case FamilyId::BI: {
            // gamma_bar = gamma + N_bar^e - N^e - eta; the N^e difference only
            // depends on the parity of N, so compute it on a representative
            if (space.n_parity < 0)
                throw ConfigError("Bannai-Ito search needs a fixed N parity");
            int n_rep = 10 + space.n_parity;
            int ne_diff = parity_decompose(n_rep + n_offset).n_e - parity_decompose(n_rep).n_e;
            mv.add = Rational(ne_diff - eta);
            break;
        }
        default:
            break;
    }
    (void)name;
    return mv;
}

} // namespace

std::vector<ShiftMap> enumerate_shifts(const SearchSpace& space) {
    const auto& names = family_param_names(space.family);
    std::vector<std::string> free_names, forced_names;
    for (const auto& n : names) {
        if (n == "q") continue;
        (move_is_forced(space.family, n) ? forced_names : free_names).push_back(n);
    }

    std::vector<ShiftMap> out;
    const bool qfam = is_q_family(space.family);
    for (int eta : space.eta_set) {
        for (int n_off : space.n_offsets) {
            // Cartesian product over the free parameters' move sets.
            std::vector<std::size_t> idx(free_names.size(), 0);
            for (;;) {
                ShiftMap s;
                s.family = space.family;
                s.eta = eta;
                s.n_offset = n_off;
                bool ok = true;
                for (std::size_t k = 0; k < free_names.size(); ++k) {
                    const Rational& mv = space.param_moves[idx[k]];
                    ParamMove pm;
                    if (qfam) {
                        if (!mv.is_integer()) {
                            ok = false;
                            break;
                        }
                        pm.qexp = static_cast<int>(mv.to_long());
                    } else {
                        pm.add = mv;
                    }
                    s.moves[free_names[k]] = pm;
                }
                if (ok) {
                    try {
                        for (const auto& fn : forced_names)
                            s.moves[fn] = forced_move(space, fn, eta, n_off, s.moves);
                        out.push_back(s);
                    } catch (const Error&) {
                        // unsatisfiable consistency rule for this combination
                    }
                }
                // advance the product
                std::size_t k = 0;
                for (; k < idx.size(); ++k) {
                    if (++idx[k] < space.param_moves.size()) break;
                    idx[k] = 0;
                }
                if (k == idx.size()) break;
            }
        }
    }
    // dedup (the empty-product loop above emits one candidate per (eta, n_off))
    std::sort(out.begin(), out.end(),
              [](const ShiftMap& a, const ShiftMap& b) { return a.key() < b.key(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

nlohmann::json ClassifyResult::to_json() const {
    nlohmann::json disc = nlohmann::json::array();
    for (const auto& s : discovered) disc.push_back(s.to_json());
    return nlohmann::json{{"discovered", disc}, {"identity_passed", identity_passed},
                          {"matched", matched}, {"unmatched", unmatched},
                          {"missing", missing},  {"candidates", candidates}};
}

ClassifyResult classify(const SearchSpace& space, ConstraintKind kind) {
    ClassifyResult result;
    std::vector<ShiftMap> candidates = enumerate_shifts(space);
    result.candidates = static_cast<long>(candidates.size());

    // Fixed per-run sample set: each candidate sees the same parameter draws,
    // resampling only when a draw is inadmissible for that candidate's bar map.
    Sampler sampler(space.seed);
    std::vector<ParameterSet> base_samples;
    for (int s = 0; s < space.samples; ++s) {
        int N = space.n_values[s % space.n_values.size()];
        if (space.n_parity >= 0 && N % 2 != space.n_parity) ++N;
        base_samples.push_back(sampler.sample(space.family, N));
    }

    Sampler resampler(space.seed ^ 0x9e3779b97f4a7c15ull);
    for (const ShiftMap& shift : candidates) {
        bool all_pass = true;
        for (const ParameterSet& base : base_samples) {
            ParameterSet ps = base;
            ConstraintReport rep;
            bool usable = false;
            for (int attempt = 0; attempt < 40 && !usable; ++attempt) {
                try {
                    ParameterSet barred = shift.apply(ps);
                    if (!admissible(barred)) throw SingularParameters("barred set inadmissible");
                    rep = check_constraints(kind, ps, shift);
                    usable = rep.verdict != Verdict::Inconclusive;
                } catch (const Error&) {
                    usable = false;
                }
                if (!usable) ps = resampler.sample(space.family, ps.N);
            }
            if (!usable || !rep.passed()) {
                all_pass = false;
                break;
            }
        }
        if (!all_pass) continue;
        if (shift.is_identity())
            result.identity_passed = true;
        else
            result.discovered.push_back(shift);
    }

    // Diff against the catalog. The canonicalization table (discovered shifts
    // equivalent to published ones under parameter symmetries) is empty: the
    // searches below reproduce the published lists directly.
    const Catalog& cat = Catalog::instance();
    std::map<std::string, std::string> published; // shift key -> id
    if (kind == ConstraintKind::A2)
        for (const auto& e : cat.a2(space.family)) published[e.shift.key()] = e.id;

    std::set<std::string> found;
    for (const auto& s : result.discovered) {
        auto it = published.find(s.key());
        if (it != published.end()) {
            result.matched.push_back(it->second);
            found.insert(it->second);
        } else {
            result.unmatched.push_back(s.key());
        }
    }
    for (const auto& [key, id] : published)
        if (!found.count(id)) result.missing.push_back(id);
    std::sort(result.matched.begin(), result.matched.end());
    std::sort(result.missing.begin(), result.missing.end());
    return result;
}

} // namespace askey
