#pragma once

/**
 * @file shift.hpp
 * @brief Contiguity moves: eta, per-parameter transformation, N offset,
 *        and the induced (zeta, xi) matching the spectral variables.
 *
 * A shift is valid when lambda_{x,rho} = zeta * lambda_{x+eta,rho_bar} - xi
 * holds on the whole grid; per family this pins zeta, xi and one
 * bar-parameter consistency rule, all taken from the published closed forms.
 */

#include <map>
#include <string>

#include "askey/families.hpp"

namespace askey {

/// One parameter's transformation: multiply by q^{qexp} (q-families) or add `add`.
struct ParamMove {
    int qexp = 0;
    Rational add = Rational(0);

    bool is_identity() const { return qexp == 0 && add.is_zero(); }
    bool operator==(const ParamMove&) const = default;
};

struct ShiftMap {
    FamilyId family = FamilyId::K;
    int eta = 0;
    int n_offset = 0; // N_bar - N
    std::map<std::string, ParamMove> moves;

    bool is_identity() const;

    /// Build the barred parameter set.
    ParameterSet apply(const ParameterSet& params) const;

    /// Invert the parameter map (used when chaining relations).
    ShiftMap inverse() const;

    /// Canonical string id (used for search dedup and report keys).
    std::string key() const;

    nlohmann::json to_json() const; // {"eta":.., "N_bar":"N-1", "map":{"beta":"q*beta",...}}
    static ShiftMap from_json(FamilyId family, const nlohmann::json& j);

    bool operator==(const ShiftMap&) const = default;
};

/**
 * The induced (zeta, xi) for this family's spectral matching rule.
 * Throws InvalidShift when the family's bar-parameter constraint is
 * violated (e.g. qR requires gamma_bar = gamma q^{N_bar - N - 2 eta}).
 */
std::pair<Rational, Rational> shift_scalars(const ParameterSet& params, const ShiftMap& shift);

} // namespace askey
