#pragma once

/**
 * @file banita_relations.hpp
 * @brief The published Bannai-Ito <-> complementary Bannai-Ito relation
 *        lists: verification, chaining, and the bounded nonexistence
 *        search for one-step relations on the Bannai-Ito family itself.
 */

#include "askey/catalog.hpp"
#include "askey/search.hpp"

namespace askey {

/// Verify one side ('a': Plus, 'b': Minus) of a published entry.
VerificationReport verify_bi_relation(const BIEntry& entry, Direction dir,
                                      const ParameterSet& params);

/**
 * Chain entry1's expansion with entry2's back-expansion into a three-step
 * relation on the base family. Compatible combinations are
 *   (a) o (a): two plus forms, degree offsets {0,-1,-2};
 *   (a) o (b): plus then mu-weighted minus, degree offsets {+1,0,-1}.
 * Throws IncompatibleShifts when the barred parameter sets do not meet.
 */
RelationInstance compose_bi_pair(const BIEntry& first, const BIEntry& second, Direction second_dir,
                                 const ParameterSet& params);

struct BiNonexistenceReport {
    long candidates = 0;
    bool identity_passed = false;
    std::vector<std::string> survivors; // non-identity shifts passing the constraints
    bool only_identity() const { return identity_passed && survivors.empty(); }
};

/**
 * Bounded search for one-step contiguity moves on the Bannai-Ito family:
 * eta in {0,+1,-1}, additive half-integer moves up to magnitude 2 on alpha
 * and beta, N offsets in {-2..2}, gamma forced by the spectral matching
 * rule. Every candidate is tested on `samples` admissible draws.
 */
BiNonexistenceReport bi_a2_nonexistence(int n_parity, const std::vector<int>& n_values,
                                        int samples, std::uint64_t seed);

} // namespace askey
