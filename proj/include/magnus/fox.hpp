#pragma once

#include "magnus/homology.hpp"
#include "magnus/laurent.hpp"
#include "magnus/presentation.hpp"
#include "magnus/word.hpp"

namespace magnus {

// Image of a word under the abelianization map, in the upper-boundary
// basis. Group-homomorphic: abelianize(uv) = abelianize(u) + abelianize(v).
inline ExponentVector abelianize(const Word& w, const HomologyAssignment& h) {
    ExponentVector r = exp_zero(static_cast<std::size_t>(2 * h.genus));
    for (const Letter& l : w) {
        const ExponentVector c = h.class_of(l.gen);
        r = l.sign > 0 ? exp_add(r, c) : exp_sub(r, c);
    }
    return r;
}

// Involuted abelianized free derivative of w with respect to x. For an
// occurrence of x with sign +1 after prefix u, contributes the inverse
// monomial of ab(u); for sign -1 after prefix u (including the letter),
// contributes minus the inverse monomial of ab(u).
inline LaurentPolynomial fox_derivative(const Word& w, const GeneratorRef& x,
                                        const HomologyAssignment& h) {
    const std::size_t vars = static_cast<std::size_t>(2 * h.genus);
    LaurentPolynomial d(vars);
    ExponentVector prefix = exp_zero(vars);
    for (const Letter& l : w) {
        const ExponentVector c = h.class_of(l.gen);
        if (l.sign > 0) {
            if (l.gen == x)
                d.add_term(exp_neg(prefix), 1);
            prefix = exp_add(prefix, c);
        } else {
            prefix = exp_sub(prefix, c);
            if (l.gen == x)
                d.add_term(exp_neg(prefix), -1);
        }
    }
    return d;
}

} // namespace magnus
