#include "askey/report.hpp"

namespace askey {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json locus = nlohmann::json::array();
    for (const auto& l : residual_locus) locus.push_back({{"i", l.i}, {"x", l.x}});
    return nlohmann::json{{"relation_id", relation_id},
                          {"params", params},
                          {"pass", verdict == Verdict::Pass},
                          {"verdict", verdict_name(verdict)},
                          {"residual_locus", locus},
                          {"max_index_checked", max_index_checked},
                          {"points_checked", points_checked},
                          {"note", note}};
}

long RunReport::count(Verdict v) const {
    long n = 0;
    for (const auto& r : results)
        if (r.verdict == v) ++n;
    return n;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json res = nlohmann::json::array();
    for (const auto& r : results) res.push_back(r.to_json());
    long skipped = count(Verdict::Inconclusive) + count(Verdict::NotApplicable);
    return nlohmann::json{{"version", 1},
                          {"config_echo", config_echo},
                          {"results", res},
                          {"summary",
                           {{"pass", count(Verdict::Pass)},
                            {"fail", count(Verdict::Fail)},
                            {"skipped", skipped}}}};
}

bool RunReport::all_passed() const { return count(Verdict::Fail) == 0; }

} // namespace askey
