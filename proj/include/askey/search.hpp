#pragma once

/**
 * @file search.hpp
 * @brief Brute-force classification of shift maps against the constraints,
 *        diffed against the published catalog.
 */

#include <cstdint>

#include "askey/catalog.hpp"
#include "askey/sampling.hpp"

namespace askey {

struct SearchSpace {
    FamilyId family = FamilyId::K;
    std::vector<int> eta_set = {-1, 0, 1};
    std::vector<int> n_offsets = {-2, -1, 0, 1, 2};
    /// q-families: q-power exponents; classical families: additive offsets.
    std::vector<Rational> param_moves = {Rational(-2), Rational(-1), Rational(0), Rational(1),
                                         Rational(2)};
    int samples = 3;
    std::vector<int> n_values = {3, 4, 5};
    std::uint64_t seed = 7;
    /// Restrict N to one parity (used by the Bannai-Ito search); -1 = no restriction.
    int n_parity = -1;
};

/**
 * All candidate shifts of the space whose bar-parameter consistency rule is
 * satisfiable; parameters forced by the rule are filled in, the rest range
 * over the move set. The identity is always present.
 */
std::vector<ShiftMap> enumerate_shifts(const SearchSpace& space);

struct ClassifyResult {
    std::vector<ShiftMap> discovered; // non-identity shifts passing on all samples
    bool identity_passed = false;
    std::vector<std::string> matched;   // catalog ids reproduced
    std::vector<std::string> unmatched; // discovered but not published (after canonicalization)
    std::vector<std::string> missing;   // published but not discovered
    long candidates = 0;

    bool exact_reproduction() const { return unmatched.empty() && missing.empty(); }
    nlohmann::json to_json() const;
};

/**
 * Test every candidate on `samples` admissible parameter draws; a shift is
 * discovered only when the constraint check passes on all of them. The
 * discovered set is diffed against the catalog modulo the (currently empty)
 * canonicalization table; survivors land in `unmatched`.
 */
ClassifyResult classify(const SearchSpace& space, ConstraintKind kind);

} // namespace askey
