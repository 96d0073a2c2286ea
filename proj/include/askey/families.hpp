#pragma once

/**
 * @file families.hpp
 * @brief The finite discrete families: spectral variable, recurrence data,
 *        dual evaluation paths and the two published weights.
 *
 * Each family evaluates through two independent routes: the terminating
 * series definition and the three-term recurrence seeded by R_{-1} = 0,
 * R_0 = 1. Exact agreement of the two routes on the whole (i, x) grid is
 * the core self-check of the library.
 */

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "askey/rational.hpp"
#include "askey/series.hpp"

namespace askey {

enum class FamilyId { qR, qH, dqH, qqK, qK, aqK, dqK, R, H, dH, K, BI, CBI, G };

const char* family_name(FamilyId f);
FamilyId family_from_name(const std::string& name);

/// Parameter names a family carries, in canonical order ("N" excluded).
const std::vector<std::string>& family_param_names(FamilyId f);

/// True when the family's parameter moves are multiplicative in q.
bool is_q_family(FamilyId f);

/// Named rational parameters plus the grid size N, tagged by family.
struct ParameterSet {
    FamilyId family = FamilyId::K;
    std::map<std::string, Rational> named;
    int N = 0;

    const Rational& at(const std::string& name) const;
    bool has(const std::string& name) const { return named.count(name) != 0; }
    const Rational& q() const { return at("q"); }

    nlohmann::json to_json() const;
    static ParameterSet from_json(const nlohmann::json& j);
    std::string str() const { return to_json().dump(); }

    bool operator==(const ParameterSet& o) const = default;
};

/// One rung of the three-term recurrence, with the derived X, Y combinations.
struct RecurrencePair {
    Rational A;
    Rational C;
    Rational X; // A_{i-1} C_i
    Rational Y; // -(A_i + C_i)
};

/// Spectral value of the grid point x.
Rational lambda(const ParameterSet& params, int x);

/**
 * Recurrence data at degree i. The closed forms extend past the support
 * (needed by the constraint expressions, which look a few indices ahead);
 * A_N = 0 and C_0 = 0 hold by construction.
 */
RecurrencePair recurrence_coeffs(const ParameterSet& params, int i);

/// R_i(x) through the terminating series definition.
Rational eval_poly_hypergeometric(const ParameterSet& params, int i, int x);

/// R_i(x) through the recurrence (independent route; series is the reference at i = N).
Rational eval_poly_recurrence(const ParameterSet& params, int i, int x);

/// Published discrete orthogonality weight; q-Racah and Racah only.
Rational weight(const ParameterSet& params, int x);

/**
 * Whole-parameter-set admissibility: every denominator used by the
 * recurrences, series, weights and constraint machinery is nonzero over
 * the working grid, and the spectral map is injective on it.
 */
bool admissible(const ParameterSet& params);

/// Full evaluation grid R_i(x) for i, x in [0, N], via the series route.
std::vector<std::vector<Rational>> grid_table(const ParameterSet& params);

} // namespace askey
