#pragma once

/**
 * @file constraints.hpp
 * @brief Exact checkers for the existence conditions of contiguity relations.
 *
 * Each kind is defined by a pair of expressions in the recurrence data of
 * rho and rho_bar that must be equal and independent of the degree index.
 * The checkers evaluate them over every index where all denominators are
 * nonzero and report pass only when at least two indices were usable.
 */

#include "askey/report.hpp"
#include "askey/shift.hpp"

namespace askey {

enum class ConstraintKind { A2, B2, B2p };

const char* constraint_name(ConstraintKind k);

/// Memoized recurrence data for a (rho, rho_bar) pair plus (zeta, xi).
class ShiftedData {
public:
    ShiftedData(const ParameterSet& params, const ShiftMap& shift);

    const ParameterSet& rho() const { return rho_; }
    const ParameterSet& rho_bar() const { return rho_bar_; }
    const Rational& zeta() const { return zeta_; }
    const Rational& xi() const { return xi_; }

    Rational A(int i) const;
    Rational C(int i) const;
    Rational X(int i) const;
    Rational Y(int i) const;
    Rational Ab(int i) const;
    Rational Cb(int i) const;
    Rational Xb(int i) const;
    Rational Yb(int i) const;

private:
    ParameterSet rho_, rho_bar_;
    Rational zeta_, xi_;
    mutable std::map<int, RecurrencePair> cache_, cache_bar_;
    const RecurrencePair& rc(int i, bool barred) const;
};

/// The defining expression pairs at index i, one per kind.
std::pair<Rational, Rational> a2_constraint_exprs(const ShiftedData& d, int i);
std::pair<Rational, Rational> b2_constraint_exprs(const ShiftedData& d, int i);
std::pair<Rational, Rational> b2p_constraint_exprs(const ShiftedData& d, int i);

struct ConstraintReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<int> indices_used;
    std::string common_value; // serialized, when the check passed
    std::string note;
    bool passed() const { return verdict == Verdict::Pass; }
};

/**
 * Evaluate the kind's expression pair for every usable index and report
 * pass iff all defined values coincide. Fewer than two usable indices is
 * inconclusive, never a pass.
 */
ConstraintReport check_constraints(ConstraintKind kind, const ParameterSet& params,
                                   const ShiftMap& shift);

} // namespace askey
