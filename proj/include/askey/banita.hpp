#pragma once

/**
 * @file banita.hpp
 * @brief Bannai-Ito and complementary Bannai-Ito polynomials.
 *
 * Both families are indexed through the parity split n = 2 n_e + n_p.
 * The Bannai-Ito polynomials are monic; the complementary family obeys
 * a twisted three-term recurrence in the variable mu(x).
 */

#include "askey/families.hpp"

namespace askey {

/// n = 2 n_e + n_p with n_p in {0, 1}; the decomposition is unique.
struct ParityIndex {
    int n;
    int n_e;
    int n_p;
};

ParityIndex parity_decompose(int n);

/// Sign (-1)^n computed from the parity, never by powering a scalar.
inline Rational parity_sign(int n) { return parity_decompose(n).n_p == 0 ? Rational(1) : Rational(-1); }

namespace bi {

/// Spectral variable of the Bannai-Ito family (piecewise in the parity of x).
Rational lambda(const ParameterSet& params, int x);

/// Recurrence data; the Bannai-Ito recurrence is monic, so X = A_{i-1} C_i and Y = -(A_i + C_i).
RecurrencePair recurrence_coeffs(const ParameterSet& params, int i);

/// Monic B_i(x) through the two-series definition.
Rational eval_def(const ParameterSet& params, int i, int x);

/// Monic B_i(x) through the recurrence (independent route).
Rational eval_recurrence(const ParameterSet& params, int i, int x);

} // namespace bi

namespace cbi {

/// The complementary family's recurrence variable mu(x).
Rational mu(const ParameterSet& params, int x);

/// The constant sigma entering the recurrence with alternating sign.
Rational sigma(const ParameterSet& params);

/// tau_i, the i-th product coefficient of the recurrence.
Rational tau(const ParameterSet& params, int i);

/// I_i(x) through the hypergeometric definitions (split by the parity of N).
Rational eval_def(const ParameterSet& params, int i, int x);

/// I_i(x) through the recurrence I_{i+1} + (-1)^i sigma I_i + tau_i I_{i-1} = mu(x) I_i.
Rational eval_recurrence(const ParameterSet& params, int i, int x);

} // namespace cbi

} // namespace askey
