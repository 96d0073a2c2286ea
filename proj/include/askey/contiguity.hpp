#pragma once

/**
 * @file contiguity.hpp
 * @brief Relation instances, the generic coefficient constructions, exact
 *        verification, and the chaining of two one-step relations into a
 *        three-step one.
 *
 * A relation instance is a fully materialized identity
 *   plus :  lambda(x) R_i(x; base)        = sum_e Phi_i^e R_{i+e}(x+eta; target)
 *   minus:  lambda(x) R_i(x+eta; target)  = sum_e Phi_i^e R_{i+e}(x; base)
 * with exact coefficient evaluators. Verification computes every residual
 * exactly; a relation passes only when all of them are zero.
 */

#include <functional>

#include "askey/constraints.hpp"

namespace askey {

enum class RelationKind { A2, B2, B2p, BIrel, Grel };
enum class Direction { Plus, Minus };

const char* relation_kind_name(RelationKind k);

struct RelationInstance {
    RelationKind kind = RelationKind::A2;
    Direction direction = Direction::Plus;
    std::string id;
    ParameterSet base;
    ParameterSet target;
    int eta = 0;                                  // target argument is x + eta
    std::vector<int> support;                     // degree offsets with (potentially) nonzero coefficients
    std::function<Rational(int x)> lambda_factor; // lambda^{+/-} at base grid point x
    std::function<Rational(int i, int eps)> coeff;

    /// Same instance with one coefficient slot scaled (perturbation testing).
    RelationInstance with_coeff_scaled(int eps, const Rational& factor) const;
    RelationInstance with_lambda_scaled(const Rational& factor) const;
};

/// Generic plus coefficients (lambda^+ = 1, two-term expansion).
RelationInstance a2_plus_relation(const ParameterSet& params, const ShiftMap& shift);

/// Generic minus coefficients (two-term, degree raising).
RelationInstance a2_minus_relation(const ParameterSet& params, const ShiftMap& shift);

/// Generic three-term {+1,0,-1} coefficients for the requested direction.
RelationInstance b2_relation(const ParameterSet& params, const ShiftMap& shift, Direction dir);

/// Generic three-term {0,-1,-2} coefficients for the requested direction.
RelationInstance b2p_relation(const ParameterSet& params, const ShiftMap& shift, Direction dir);

/**
 * Verify the relation exactly over its whole admissible (i, x) grid.
 * Failures land in the residual locus; the report is data, not an error.
 */
VerificationReport verify_relation(const RelationInstance& rel);

/**
 * Chain a plus relation (base -> mid) with a minus relation (target -> mid)
 * into a three-step relation from base to the minus relation's base.
 */
RelationInstance compose_a2_to_b2(const RelationInstance& plus_rel,
                                  const RelationInstance& minus_rel);

/// Chain two plus relations (base -> mid, mid -> far) into a B2'-type one.
RelationInstance compose_a2_to_b2p(const RelationInstance& first, const RelationInstance& second);

/**
 * Compare two relations up to one global scalar by cross-multiplication
 * over every sampled coefficient (lambda over the x grid, Phi over i and
 * the union of supports). Never fixes a normalization.
 */
bool proportional(const RelationInstance& a, const RelationInstance& b, std::string* why = nullptr);

} // namespace askey
