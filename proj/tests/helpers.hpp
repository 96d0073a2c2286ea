#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "askey/families.hpp"

namespace askey::testing {

inline ParameterSet make_params(FamilyId f,
                                std::initializer_list<std::pair<const char*, const char*>> named,
                                int N) {
    ParameterSet p;
    p.family = f;
    p.N = N;
    for (const auto& [k, v] : named) p.named.emplace(k, Rational::parse(v));
    return p;
}

/// Leading coefficient of a degree-n polynomial from n+1 (point, value)
/// pairs: the top Newton divided difference.
inline Rational leading_coefficient(const std::vector<std::pair<Rational, Rational>>& pts) {
    std::vector<Rational> coef;
    std::vector<Rational> xs;
    for (const auto& [x, y] : pts) {
        xs.push_back(x);
        coef.push_back(y);
    }
    for (std::size_t level = 1; level < coef.size(); ++level)
        for (std::size_t j = coef.size() - 1; j >= level; --j)
            coef[j] = (coef[j] - coef[j - 1]) / (xs[j] - xs[j - level]);
    return coef.back();
}

} // namespace askey::testing
