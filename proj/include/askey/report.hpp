#pragma once

/**
 * @file report.hpp
 * @brief Verification verdicts and JSON report plumbing.
 */

#include <string>
#include <vector>

#include <json.hpp>

namespace askey {

enum class Verdict { Pass, Fail, Inconclusive, NotApplicable };

const char* verdict_name(Verdict v);

/// A single failing grid point.
struct Locus {
    int i;
    int x;
};

struct VerificationReport {
    std::string relation_id;
    nlohmann::json params;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Locus> residual_locus;
    int max_index_checked = -1;
    long points_checked = 0;
    std::string note;

    bool passed() const { return verdict == Verdict::Pass; }
    nlohmann::json to_json() const;
};

/// Aggregate run report with a stable schema.
struct RunReport {
    nlohmann::json config_echo;
    std::vector<VerificationReport> results;

    void add(VerificationReport r) { results.push_back(std::move(r)); }
    long count(Verdict v) const;
    nlohmann::json to_json() const; // {version, config_echo, results[], summary{pass,fail,skipped}}
    bool all_passed() const;
};

} // namespace askey
