#pragma once

/**
 * @file sampling.hpp
 * @brief Deterministic admissible parameter sampling for sweeps and searches.
 *
 * q is drawn from {2/5, 3/5, 5/3}; the remaining parameters are small-height
 * rationals in (0,1) or (1,2). Draws that break admissibility (or a
 * caller-supplied predicate) are rejected and retried a bounded number of
 * times. A fixed seed reproduces the exact same parameter stream.
 */

#include <cstdint>
#include <functional>
#include <random>

#include "askey/families.hpp"

namespace askey {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Rational pick_q();
    Rational small_rational();

    /// An admissible parameter set, resampling inadmissible draws.
    ParameterSet sample(FamilyId family, int N);

    /// As sample(), but the draw must also satisfy `accept`.
    ParameterSet sample_where(FamilyId family, int N,
                              const std::function<bool(const ParameterSet&)>& accept);

    static constexpr int kMaxTries = 800;

private:
    std::mt19937_64 rng_;
};

} // namespace askey
