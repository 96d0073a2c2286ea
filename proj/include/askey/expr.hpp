#pragma once

/**
 * @file expr.hpp
 * @brief Arithmetic expression trees for catalog coefficient formulas.
 *
 * Catalog entries carry their coefficients as data so the files stay
 * auditable line by line. Trees are prefix-form JSON with node kinds
 * {const, param, qpow, add, mul, div, pochq, poch}. Exponents and
 * Pochhammer lengths are integer linear forms in (i, x, N).
 */

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "askey/families.hpp"

namespace askey {

/// c + ci*i + cx*x + cN*N with integer coefficients.
struct LinForm {
    long c = 0, ci = 0, cx = 0, cN = 0;
    long value(long i, long x, long N) const { return c + ci * i + cx * x + cN * N; }
};

struct EvalCtx {
    const ParameterSet* params = nullptr;
    long i = 0;
    long x = 0;
    std::map<std::string, Rational> extra; // e.g. "ie", "Ne" for parity-indexed entries

    Rational lookup(const std::string& name) const;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { Const, Param, QPow, Add, Mul, Div, PochQ, Poch };

    Rational eval(const EvalCtx& ctx) const;

    static ExprPtr load(const nlohmann::json& j);

    Kind kind;
    Rational value;             // Const
    std::string name;           // Param
    LinForm lin;                // QPow exponent / Pochhammer length
    std::vector<ExprPtr> args;  // Add, Mul, Div (2), PochQ/Poch (base)
};

} // namespace askey
