/**
 * @file askey_main.cpp
 * @brief Command-line front end: list relations, verify them at explicit
 *        parameters, sweep the catalog, reproduce the classification, run
 *        the spectral-transform checks, and summarize report files.
 *
 * Every run writes a JSON report with a stable schema
 *   {version, config_echo, results[], summary{pass, fail, skipped}}
 * and exits 0 only when nothing failed (2 on configuration errors).
 */

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "askey/banita_relations.hpp"
#include "askey/catalog.hpp"
#include "askey/sampling.hpp"
#include "askey/search.hpp"
#include "askey/spectral.hpp"

using namespace askey;

namespace {

struct NRange {
    int lo = 2;
    int hi = 5;
};

NRange parse_range(const std::string& text) {
    NRange r;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    }
    if (r.lo < 0 || r.hi < r.lo) throw ConfigError("bad N range '" + text + "'");
    return r;
}

RelationKind parse_kind(const std::string& text) {
    if (text == "A2") return RelationKind::A2;
    if (text == "B2") return RelationKind::B2;
    if (text == "B2p" || text == "B2'") return RelationKind::B2p;
    if (text == "BI") return RelationKind::BIrel;
    if (text == "G") return RelationKind::Grel;
    throw ConfigError("unknown relation kind '" + text + "'");
}

int write_report(const RunReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write report to " + path);
    out << report.to_json().dump(1) << "\n";
    const auto j = report.to_json()["summary"];
    std::cout << "pass " << j["pass"] << "  fail " << j["fail"] << "  skipped " << j["skipped"]
              << "  -> " << path << "\n";
    return report.all_passed() ? 0 : 1;
}

const std::vector<FamilyId>& a2_families() {
    static const std::vector<FamilyId> fams = {
        FamilyId::qR, FamilyId::qH, FamilyId::dqH, FamilyId::qqK, FamilyId::qK, FamilyId::aqK,
        FamilyId::dqK, FamilyId::R, FamilyId::H, FamilyId::dH, FamilyId::K};
    return fams;
}

ParameterSet sample_admissible_for(Sampler& sampler, FamilyId family, int N,
                                   const std::function<ParameterSet(const ParameterSet&)>& barred) {
    return sampler.sample_where(family, N, [&](const ParameterSet& c) {
        try {
            return admissible(barred(c));
        } catch (const Error&) {
            return false;
        }
    });
}

void add_skip(RunReport& report, const std::string& id, const Error& err) {
    VerificationReport rep;
    rep.relation_id = id;
    rep.verdict = Verdict::Inconclusive;
    rep.note = std::string("skipped: ") + err.what();
    report.add(rep);
}

void sweep_a2(const Catalog& cat, FamilyId family, const NRange& nr, int samples, Sampler& sampler,
              RunReport& report) {
    for (const auto& entry : cat.a2(family)) {
        for (int s = 0; s < samples; ++s) {
            int N = nr.lo + s % (nr.hi - nr.lo + 1);
            try {
                ParameterSet p = sample_admissible_for(
                    sampler, family, N,
                    [&](const ParameterSet& c) { return entry.shift.apply(c); });
                report.add(verify_relation(cat.instantiate(entry, Direction::Plus, p)));
                report.add(verify_relation(cat.instantiate(entry, Direction::Minus, p)));
            } catch (const Error& err) {
                add_skip(report, entry.id, err);
            }
        }
    }
}

void sweep_b2(const Catalog& cat, const NRange& nr, int samples, Sampler& sampler,
              RunReport& report) {
    for (const auto& entry : cat.b2(FamilyId::qR)) {
        for (int s = 0; s < samples; ++s) {
            int N = std::max(2, nr.lo + s % (nr.hi - nr.lo + 1));
            try {
                ParameterSet p = sample_admissible_for(
                    sampler, FamilyId::qR, N,
                    [&](const ParameterSet& c) { return entry.shift.apply(c); });
                report.add(verify_relation(cat.instantiate(entry, p)));
            } catch (const Error& err) {
                add_skip(report, entry.id, err);
            }
        }
    }
}

void sweep_b2p(const Catalog& cat, const NRange& nr, int samples, Sampler& sampler,
               RunReport& report) {
    for (const auto& entry : cat.b2p(FamilyId::qR)) {
        for (int s = 0; s < samples; ++s) {
            int N = std::max(2, nr.lo + s % (nr.hi - nr.lo + 1));
            if (entry.shift.n_offset == -2) N = std::max(N, 3);
            try {
                ParameterSet p = sample_admissible_for(
                    sampler, FamilyId::qR, N,
                    [&](const ParameterSet& c) { return entry.shift.apply(c); });
                report.add(verify_relation(cat.instantiate(entry, Direction::Plus, p)));
                report.add(verify_relation(cat.instantiate(entry, Direction::Minus, p)));
            } catch (const Error& err) {
                add_skip(report, entry.id, err);
            }
        }
    }
}

void sweep_bi(const Catalog& cat, const NRange& nr, int samples, Sampler& sampler,
              RunReport& report) {
    for (const auto& entry : cat.bi_entries()) {
        for (int s = 0; s < samples; ++s) {
            int N = nr.lo + s % (nr.hi - nr.lo + 1);
            if (N % 2 != entry.n_parity) ++N;
            N = std::max(N, 2 + entry.n_parity);
            try {
                FamilyId base = (entry.side == 'B') ? FamilyId::BI : FamilyId::CBI;
                ParameterSet p = sample_admissible_for(
                    sampler, base, N,
                    [&](const ParameterSet& c) { return cat.bi_barred(entry, c); });
                report.add(verify_relation(cat.instantiate(entry, Direction::Plus, p)));
                report.add(verify_relation(cat.instantiate(entry, Direction::Minus, p)));
            } catch (const Error& err) {
                add_skip(report, entry.id, err);
            }
        }
    }
}

void sweep_g(const Catalog& cat, const NRange& nr, int samples, Sampler& sampler,
             RunReport& report) {
    for (const auto& entry : cat.g_entries()) {
        for (int s = 0; s < samples; ++s) {
            int N = nr.lo + s % (nr.hi - nr.lo + 1);
            try {
                ParameterSet p = sample_admissible_for(
                    sampler, FamilyId::G, N,
                    [&](const ParameterSet& c) { return entry.shift.apply(c); });
                report.add(verify_relation(cat.instantiate(entry, p)));
            } catch (const Error& err) {
                add_skip(report, entry.id, err);
            }
        }
    }
}

RelationKind find_kind(const Catalog& cat, const std::string& id) {
    for (RelationKind k : {RelationKind::A2, RelationKind::B2, RelationKind::B2p,
                           RelationKind::BIrel, RelationKind::Grel}) {
        try {
            switch (k) {
                case RelationKind::A2: cat.a2_by_id(id); break;
                case RelationKind::B2: cat.b2_by_id(id); break;
                case RelationKind::B2p: cat.b2p_by_id(id); break;
                case RelationKind::BIrel: cat.bi_by_id(id); break;
                case RelationKind::Grel: cat.g_by_id(id); break;
            }
            return k;
        } catch (const ConfigError&) {
        }
    }
    throw ConfigError("unknown relation id '" + id + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of contiguity relations for the finite discrete families"};
    app.require_subcommand(1);

    std::string family_arg, kind_arg, relation_arg, out_path = "askey_report.json";
    std::string n_range = "2..5", shift_json, in_path;
    int samples = 3;
    std::uint64_t seed = 7;
    bool all_families = false;
    std::map<std::string, std::string> param_args;

    auto* list_cmd = app.add_subcommand("list", "print the published relation ids");
    list_cmd->add_option("--family", family_arg)->required();
    list_cmd->add_option("--kind", kind_arg)->default_val("A2");
    list_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "verify one relation at explicit parameters");
    verify_cmd->add_option("--family", family_arg)->required();
    verify_cmd->add_option("--relation", relation_arg);
    verify_cmd->add_option("--shift", shift_json, "explicit shift map as JSON");
    verify_cmd->add_option("--out", out_path);
    for (const char* name : {"alpha", "beta", "gamma", "delta", "z", "q"})
        verify_cmd->add_option("--" + std::string(name), param_args[name],
                               "parameter value as p/q");
    verify_cmd->add_option("--N", param_args["N"], "grid size N");

    auto* sweep_cmd = app.add_subcommand("sweep", "verify catalog entries on random samples");
    sweep_cmd->add_flag("--all", all_families, "every family and relation kind");
    sweep_cmd->add_option("--family", family_arg);
    sweep_cmd->add_option("--kind", kind_arg);
    sweep_cmd->add_option("--N", n_range);
    sweep_cmd->add_option("--samples", samples);
    sweep_cmd->add_option("--seed", seed);
    sweep_cmd->add_option("--out", out_path);

    auto* classify_cmd = app.add_subcommand("classify", "rediscover the one-step list by search");
    classify_cmd->add_option("--family", family_arg)->required();
    classify_cmd->add_option("--N", n_range)->default_val("3..5");
    classify_cmd->add_option("--samples", samples);
    classify_cmd->add_option("--seed", seed);
    classify_cmd->add_option("--out", out_path);

    auto* spectral_cmd = app.add_subcommand("spectral", "Christoffel/Geronimus identification");
    spectral_cmd->add_option("--family", family_arg);
    spectral_cmd->add_option("--relation", relation_arg);
    spectral_cmd->add_option("--N", n_range)->default_val("2..4");
    spectral_cmd->add_option("--samples", samples);
    spectral_cmd->add_option("--seed", seed);
    spectral_cmd->add_option("--out", out_path);

    auto* report_cmd = app.add_subcommand("report", "summarize a previously written report");
    report_cmd->add_option("--in", in_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const Catalog& cat = Catalog::instance();
        RunReport report;

        if (list_cmd->parsed()) {
            FamilyId f = family_from_name(family_arg);
            RelationKind kind = parse_kind(kind_arg);
            report.config_echo = {{"command", "list"}, {"family", family_arg}, {"kind", kind_arg}};
            for (const auto& id : cat.list_ids(f, kind)) {
                std::cout << id << "\n";
                VerificationReport r;
                r.relation_id = id;
                r.verdict = Verdict::Pass;
                r.note = "listed";
                report.add(r);
            }
            return write_report(report, out_path);
        }

        if (verify_cmd->parsed()) {
            FamilyId f = family_from_name(family_arg);
            if (relation_arg.empty() && shift_json.empty())
                throw ConfigError("verify needs --relation or --shift");
            if (!param_args.count("N") || param_args.at("N").empty())
                throw ConfigError("verify needs --N");
            ParameterSet p;
            p.family = f;
            p.N = std::stoi(param_args.at("N"));
            for (const auto& name : family_param_names(f)) {
                auto it = param_args.find(name);
                if (it == param_args.end() || it->second.empty())
                    throw ConfigError("missing --" + name);
                p.named.emplace(name, Rational::parse(it->second));
            }
            if (!admissible(p)) throw ConfigError("parameters are not admissible");
            report.config_echo = {{"command", "verify"},
                                  {"family", family_arg},
                                  {"relation", relation_arg},
                                  {"params", p.to_json()}};

            if (!relation_arg.empty()) {
                switch (find_kind(cat, relation_arg)) {
                    case RelationKind::A2: {
                        const auto& e = cat.a2_by_id(relation_arg);
                        report.add(verify_relation(cat.instantiate(e, Direction::Plus, p)));
                        report.add(verify_relation(cat.instantiate(e, Direction::Minus, p)));
                        break;
                    }
                    case RelationKind::B2:
                        report.add(
                            verify_relation(cat.instantiate(cat.b2_by_id(relation_arg), p)));
                        break;
                    case RelationKind::B2p: {
                        const auto& e = cat.b2p_by_id(relation_arg);
                        report.add(verify_relation(cat.instantiate(e, Direction::Plus, p)));
                        report.add(verify_relation(cat.instantiate(e, Direction::Minus, p)));
                        break;
                    }
                    case RelationKind::BIrel: {
                        const auto& e = cat.bi_by_id(relation_arg);
                        report.add(verify_relation(cat.instantiate(e, Direction::Plus, p)));
                        report.add(verify_relation(cat.instantiate(e, Direction::Minus, p)));
                        break;
                    }
                    case RelationKind::Grel:
                        report.add(verify_relation(cat.instantiate(cat.g_by_id(relation_arg), p)));
                        break;
                }
            } else {
                ShiftMap shift = ShiftMap::from_json(f, nlohmann::json::parse(shift_json));
                auto con = check_constraints(ConstraintKind::A2, p, shift);
                if (!con.passed())
                    throw ConfigError("shift does not satisfy the one-step conditions");
                report.add(verify_relation(a2_plus_relation(p, shift)));
                report.add(verify_relation(a2_minus_relation(p, shift)));
            }
            return write_report(report, out_path);
        }

        if (sweep_cmd->parsed()) {
            NRange nr = parse_range(n_range);
            Sampler sampler(seed);
            report.config_echo = {{"command", "sweep"},   {"N", n_range},
                                  {"samples", samples},   {"seed", seed},
                                  {"family", family_arg}, {"kind", kind_arg},
                                  {"all", all_families}};
            std::vector<FamilyId> fams;
            if (all_families || family_arg.empty())
                fams = a2_families();
            else if (family_arg != "BI" && family_arg != "G")
                fams = {family_from_name(family_arg)};
            const bool any_kind = all_families || kind_arg.empty();
            auto want = [&](RelationKind k) { return any_kind || parse_kind(kind_arg) == k; };

            if (want(RelationKind::A2))
                for (FamilyId f : fams) sweep_a2(cat, f, nr, samples, sampler, report);
            bool want_qr = all_families || family_arg.empty() || family_arg == "qR";
            if (want_qr && want(RelationKind::B2)) sweep_b2(cat, nr, samples, sampler, report);
            if (want_qr && want(RelationKind::B2p)) sweep_b2p(cat, nr, samples, sampler, report);
            if ((all_families || family_arg.empty() || family_arg == "BI") &&
                want(RelationKind::BIrel))
                sweep_bi(cat, nr, samples, sampler, report);
            if ((all_families || family_arg.empty() || family_arg == "G") &&
                want(RelationKind::Grel))
                sweep_g(cat, nr, samples, sampler, report);
            return write_report(report, out_path);
        }

        if (classify_cmd->parsed()) {
            SearchSpace space;
            space.family = family_from_name(family_arg);
            space.samples = samples;
            space.seed = seed;
            NRange nr = parse_range(n_range);
            space.n_values.clear();
            for (int n = nr.lo; n <= nr.hi; ++n) space.n_values.push_back(n);
            auto result = classify(space, ConstraintKind::A2);
            report.config_echo = {{"command", "classify"},
                                  {"family", family_arg},
                                  {"seed", seed},
                                  {"classification", result.to_json()}};
            VerificationReport r;
            r.relation_id = "classification:" + family_arg;
            r.verdict = result.exact_reproduction() && result.identity_passed ? Verdict::Pass
                                                                              : Verdict::Fail;
            report.add(r);
            std::cout << result.to_json().dump(1) << "\n";
            return write_report(report, out_path);
        }

        if (spectral_cmd->parsed()) {
            NRange nr = parse_range(n_range);
            Sampler sampler(seed);
            report.config_echo = {{"command", "spectral"},
                                  {"family", family_arg},
                                  {"relation", relation_arg},
                                  {"seed", seed}};
            std::vector<FamilyId> fams = family_arg.empty()
                                             ? std::vector<FamilyId>{FamilyId::qR, FamilyId::R}
                                             : std::vector<FamilyId>{family_from_name(family_arg)};
            for (FamilyId f : fams) {
                for (const auto& e : cat.a2(f)) {
                    if (!relation_arg.empty() && e.id != relation_arg) continue;
                    for (int s = 0; s < samples; ++s) {
                        int N = nr.lo + s % (nr.hi - nr.lo + 1);
                        try {
                            ParameterSet p = sample_admissible_for(
                                sampler, f, N,
                                [&](const ParameterSet& c) { return e.shift.apply(c); });
                            auto rep = verify_christoffel_geronimus(p, e.shift);
                            rep.relation_id = "christoffel_geronimus:" + e.id;
                            report.add(rep);
                            if (e.id == "qRI" || e.id == "qRII" || e.id == "RI" || e.id == "RII")
                                report.add(verify_measure_identity(e.id, p));
                        } catch (const Error& err) {
                            add_skip(report, e.id, err);
                        }
                    }
                }
            }
            return write_report(report, out_path);
        }

        if (report_cmd->parsed()) {
            std::ifstream in(in_path);
            if (!in) throw ConfigError("cannot open " + in_path);
            nlohmann::json j;
            in >> j;
            const auto& s = j.at("summary");
            std::cout << "pass " << s.at("pass") << "  fail " << s.at("fail") << "  skipped "
                      << s.at("skipped") << "\n";
            return s.at("fail").get<long>() == 0 ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
