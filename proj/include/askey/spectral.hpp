#pragma once

/**
 * @file spectral.hpp
 * @brief Monic systems, Christoffel/Geronimus identification and the
 *        discrete measure identities.
 *
 * The monic polynomials are taken with respect to the spectral variable;
 * both P and Q evaluate through their monic recurrences, which stay
 * defined past the support edge (no divisions). nu is always carried as
 * its spectral value lambda_nu, never as a grid index: the recurrence run
 * at the scalar lambda_nu defines P_i(nu) even off the grid.
 */

#include "askey/catalog.hpp"
#include "askey/constraints.hpp"

namespace askey {

class MonicPolySystem {
public:
    MonicPolySystem(const ParameterSet& params, const ShiftMap& shift);

    const ShiftedData& data() const { return d_; }

    /// Gamma_i = prod_{k<i} A_k (base), and the barred version.
    Rational gamma_prod(int i) const;
    Rational gamma_prod_bar(int i) const;

    /// P_i at grid point x, through the monic recurrence.
    Rational P(int i, int x) const;
    /// Q_i at grid point x (the shifted monic system).
    Rational Q(int i, int x) const;

    /// P_i and Q_i at an arbitrary spectral value.
    Rational P_at(int i, const Rational& lambda_value) const;
    Rational Q_at(int i, const Rational& lambda_value) const;

private:
    ShiftedData d_;
};

MonicPolySystem monicize(const ParameterSet& params, const ShiftMap& shift);

struct SpectralData {
    Rational lambda_nu;
    std::function<Rational(int)> a; // Christoffel coefficients a_i
    std::function<Rational(int)> c; // Geronimus coefficients c_i
    std::function<Rational(int)> omega; // omega_x = lambda_x - lambda_nu on the grid
};

/// The coefficient data of the monic contiguity pair; throws when the
/// shift is identity-like (lambda_nu undefined).
SpectralData christoffel_data(const ParameterSet& params, const ShiftMap& shift);

/**
 * The four exact checks identifying an A2 pair as Christoffel/Geronimus:
 * the two monic contiguity identities on the grid, a_i as the ratio
 * P_{i+1}(nu)/P_i(nu), and c_i a_i = zeta^2 Xb_i.
 */
VerificationReport verify_christoffel_geronimus(const ParameterSet& params, const ShiftMap& shift);

/// The printed finite measure-sum identity for qRI, qRII, RI or RII.
VerificationReport verify_measure_identity(const std::string& relation_id,
                                           const ParameterSet& params);

/**
 * First-moment relation: pointwise, (lambda_x - lambda_nu) w_rho(x) is one
 * fixed multiple of w_rho_bar(x), and that multiple matches the normalized
 * first moment of the base measure.
 */
VerificationReport verify_first_moment_relation(const std::string& relation_id,
                                                const ParameterSet& params);

} // namespace askey
