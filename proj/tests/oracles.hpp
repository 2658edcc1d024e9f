#pragma once

// Test-only oracles and random generators. The determinant oracle is an
// independent cofactor expansion, deliberately separate from the library's
// elimination path.

#include <random>
#include <vector>

#include "magnus/cylinders.hpp"
#include "magnus/homology.hpp"
#include "magnus/matrix.hpp"
#include "magnus/presentation.hpp"

namespace testutil {

using namespace magnus;

using Rng = std::mt19937_64;

inline RationalFunction cofactor_determinant(const FieldMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return RationalFunction::one(m.variable_count());
    if (n == 1)
        return m.at(0, 0);
    RationalFunction det = RationalFunction::zero(m.variable_count());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero())
            continue;
        FieldMatrix minor(n - 1, n - 1, m.variable_count());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        RationalFunction term = m.at(0, j) * cofactor_determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

inline Rational rand_rational(Rng& rng, bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    long n = num(rng);
    if (!allow_zero)
        while (n == 0)
            n = num(rng);
    return make_rational(n, den(rng));
}

inline ExponentVector rand_exponent(Rng& rng, std::size_t vars,
                                    std::int64_t lo = -2,
                                    std::int64_t hi = 2) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    ExponentVector e(vars);
    for (auto& x : e)
        x = d(rng);
    return e;
}

inline LaurentPolynomial rand_poly(Rng& rng, std::size_t vars,
                                   std::size_t max_terms = 3,
                                   bool allow_zero = true) {
    std::uniform_int_distribution<std::size_t> nt(allow_zero ? 0 : 1,
                                                  max_terms);
    LaurentPolynomial p(vars);
    const std::size_t n = nt(rng);
    for (std::size_t i = 0; i < n; ++i)
        p.add_term(rand_exponent(rng, vars), rand_rational(rng, false));
    if (!allow_zero && p.is_zero())
        p.add_term(rand_exponent(rng, vars), 1);
    return p;
}

inline RationalFunction rand_rf(Rng& rng, std::size_t vars) {
    return RationalFunction::make(rand_poly(rng, vars, 2),
                                  rand_poly(rng, vars, 2, false));
}

inline Word rand_word(Rng& rng, int genus, int internal, std::size_t len) {
    std::uniform_int_distribution<int> pick_sign(0, 1);
    const int total = 4 * genus + internal;
    std::uniform_int_distribution<int> pick_gen(0, total - 1);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        const int g = pick_gen(rng);
        GeneratorRef ref;
        if (g < 2 * genus)
            ref = minus_gen(g + 1);
        else if (g < 2 * genus + internal)
            ref = internal_gen(g - 2 * genus + 1);
        else
            ref = plus_gen(g - 2 * genus - internal + 1);
        w.push_back({ref, pick_sign(rng) ? 1 : -1});
    }
    return w;
}

// Arbitrary homomorphic class assignment; the Fox identities hold for any
// of these, soundness is not required.
inline HomologyAssignment rand_assignment(Rng& rng, int genus, int internal) {
    HomologyAssignment h;
    h.genus = genus;
    h.internal_count = internal;
    const std::size_t vars = static_cast<std::size_t>(2 * genus);
    for (int i = 0; i < 2 * genus; ++i)
        h.minus_classes.push_back(rand_exponent(rng, vars));
    for (int i = 0; i < internal; ++i)
        h.internal_classes.push_back(rand_exponent(rng, vars));
    return h;
}

// Random free endomorphism with unimodular exponent-sum matrix.
inline FreeEndomorphism rand_endomorphism(Rng& rng, int genus,
                                          std::size_t max_len = 3) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<int> pick(1, 2 * genus);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    for (;;) {
        FreeEndomorphism phi;
        phi.genus = genus;
        for (int j = 0; j < 2 * genus; ++j) {
            Word w;
            const std::size_t n = len(rng);
            for (std::size_t i = 0; i < n; ++i)
                w.push_back({plus_gen(pick(rng)), pick_sign(rng) ? 1 : -1});
            phi.images.push_back(std::move(w));
        }
        const auto m = phi.abelianized();
        std::vector<std::vector<Integer>> mi(m.size(),
                                             std::vector<Integer>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                mi[i][j] = m[i][j];
        const Integer d = integer_determinant(std::move(mi));
        if (d == 1 || d == -1)
            return phi;
    }
}

} // namespace testutil
