#pragma once

/**
 * @file series.hpp
 * @brief Pochhammer symbols and terminating (q-)hypergeometric sums.
 *
 * Everything here is exact. A terminating sum of degree i has exactly
 * i+1 terms; terms are produced incrementally, each from the previous
 * one through a single multiply/divide, so integer growth stays bounded.
 *
 * Convention for degenerate factors: if a numerator Pochhammer factor
 * vanishes at some term the sum stops there (all later terms are zero);
 * a vanishing denominator factor reached before that raises SingularSeries.
 */

#include <optional>
#include <vector>

#include "askey/rational.hpp"

namespace askey {

/// (a)_k = a (a+1) ... (a+k-1); empty product is 1.
Rational pochhammer(const Rational& a, int k);

/// (a;q)_k = (1-a)(1-aq)...(1-aq^{k-1}); empty product is 1.
Rational q_pochhammer(const Rational& a, const Rational& q, int k);

/**
 * A terminating series specification. The first top entry carries the
 * terminating parameter (q^{-i} for q-series, -i for ordinary ones);
 * the implicit (q;q)_k / k! factor is NOT part of `bottom`.
 */
struct SeriesSpec {
    std::vector<Rational> top;
    std::vector<Rational> bottom;
    Rational argument;
};

/**
 * Ordinary terminating hypergeometric sum:
 *   sum_{k=0}^{i} (top_0)_k (top_1)_k ... z^k / ((bottom_1)_k ... k!)
 */
Rational hyp_terminating(const SeriesSpec& spec, int i);

/**
 * Basic terminating q-hypergeometric sum:
 *   sum_{k=0}^{i} (top_0, top_1, ...; q)_k z^k / (q, bottom_1, ...; q)_k
 * Requires q outside {0, 1, -1}.
 */
Rational q_hyp_terminating(const SeriesSpec& spec, const Rational& q, int i);

/**
 * If the argument equals q and bottom_1...bottom_p = q^{k-i} top_1...top_p
 * for an integer k (the terminating top_0 excluded from the product),
 * return that k; otherwise nothing.
 */
std::optional<long> is_k_balanced(const SeriesSpec& spec, const Rational& q, int i);

/// Throws InvalidBase unless q is admissible (not 0, 1 or -1).
void require_valid_base(const Rational& q);

} // namespace askey
