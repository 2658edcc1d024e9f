#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "magnus/errors.hpp"

namespace magnus {

// Exponent vector of a Laurent monomial; entry j is the exponent of the
// j-th variable. Componentwise addition is the group law.
using ExponentVector = std::vector<std::int64_t>;

// Pure lexicographic order, first variable most significant.
struct LexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
    }
};

inline ExponentVector exp_zero(std::size_t n) { return ExponentVector(n, 0); }

inline ExponentVector exp_unit(std::size_t n, std::size_t index) {
    ExponentVector e(n, 0);
    e[index] = 1;
    return e;
}

inline void exp_check_size(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw DimensionError("exponent vectors of different lengths");
}

inline ExponentVector exp_add(const ExponentVector& a,
                              const ExponentVector& b) {
    exp_check_size(a, b);
    ExponentVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

inline ExponentVector exp_sub(const ExponentVector& a,
                              const ExponentVector& b) {
    exp_check_size(a, b);
    ExponentVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

inline ExponentVector exp_neg(const ExponentVector& a) {
    ExponentVector r(a);
    for (auto& e : r)
        e = -e;
    return r;
}

inline ExponentVector exp_scale(const ExponentVector& a, std::int64_t k) {
    ExponentVector r(a);
    for (auto& e : r)
        e *= k;
    return r;
}

inline bool exp_is_zero(const ExponentVector& a) {
    return std::all_of(a.begin(), a.end(),
                       [](std::int64_t e) { return e == 0; });
}

} // namespace magnus
