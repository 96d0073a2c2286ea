#include "askey/sampling.hpp"

namespace askey {

Rational Sampler::pick_q() {
    static const Rational pool[] = {Rational(2, 5), Rational(3, 5), Rational(5, 3)};
    return pool[std::uniform_int_distribution<int>(0, 2)(rng_)];
}

Rational Sampler::small_rational() {
    // value in (0,1) u (1,2), height at most 9
    for (;;) {
        int den = std::uniform_int_distribution<int>(2, 9)(rng_);
        int num = std::uniform_int_distribution<int>(1, 2 * den - 1)(rng_);
        if (num == den) continue;
        return Rational(num, den);
    }
}

ParameterSet Sampler::sample(FamilyId family, int N) {
    return sample_where(family, N, [](const ParameterSet&) { return true; });
}

ParameterSet Sampler::sample_where(FamilyId family, int N,
                                   const std::function<bool(const ParameterSet&)>& accept) {
    for (int tries = 0; tries < kMaxTries; ++tries) {
        ParameterSet ps;
        ps.family = family;
        ps.N = N;
        for (const auto& name : family_param_names(family)) {
            if (name == "q")
                ps.named.emplace(name, pick_q());
            else
                ps.named.emplace(name, small_rational());
        }
        if (!admissible(ps)) continue;
        if (!accept(ps)) continue;
        return ps;
    }
    throw InsufficientSamples(std::string("no admissible sample for ") + family_name(family) +
                              " at N=" + std::to_string(N));
}

} // namespace askey
