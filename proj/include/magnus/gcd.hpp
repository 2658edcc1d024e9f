#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "magnus/laurent.hpp"

namespace magnus {

namespace detail {

inline bool variable_present(const LaurentPolynomial& f, std::size_t v) {
    for (const auto& [e, c] : f.terms())
        if (e[v] != 0)
            return true;
    return false;
}

inline std::int64_t degree_in(const LaurentPolynomial& f, std::size_t v) {
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first || e[v] > d)
            d = e[v];
        first = false;
    }
    return d;
}

// Coefficient of v^k, as a polynomial with zero exponent in v.
inline LaurentPolynomial coefficient_in(const LaurentPolynomial& f,
                                        std::size_t v, std::int64_t k) {
    LaurentPolynomial r(f.variable_count());
    for (const auto& [e, c] : f.terms()) {
        if (e[v] != k)
            continue;
        ExponentVector t(e);
        t[v] = 0;
        r.add_term(t, c);
    }
    return r;
}

inline LaurentPolynomial shift_in(const LaurentPolynomial& f, std::size_t v,
                                  std::int64_t k) {
    ExponentVector e = exp_zero(f.variable_count());
    e[v] = k;
    return f.shifted(e);
}

} // namespace detail

// Exact quotient n / d in the Laurent ring; throws DomainError when d does
// not divide n. d must be nonzero.
inline std::optional<LaurentPolynomial>
try_exact_divide(const LaurentPolynomial& n, const LaurentPolynomial& d) {
    if (d.is_zero())
        throw DivisionByZeroError("division by the zero polynomial");
    const std::size_t vars = n.variable_count();
    if (vars != d.variable_count())
        throw DimensionError("polynomials over different variable counts");
    if (n.is_zero())
        return LaurentPolynomial::zero(vars);

    // Shift to honest polynomials; the quotient picks up the net shift.
    const ExponentVector en = n.min_exponents();
    const ExponentVector ed = d.min_exponents();
    LaurentPolynomial r = n.shifted(exp_neg(en));
    const LaurentPolynomial dd = d.shifted(exp_neg(ed));

    LaurentPolynomial q(vars);
    const auto& [eg, cg] = dd.leading_term();
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading_term();
        ExponentVector e = exp_sub(er, eg);
        for (std::int64_t x : e)
            if (x < 0)
                return std::nullopt;
        LaurentPolynomial t = LaurentPolynomial::monomial(vars, cr / cg, e);
        q += t;
        r -= t * dd;
        if (!r.is_zero() && !LexLess()(r.leading_term().first, er))
            return std::nullopt; // no progress: not divisible
    }
    return q.shifted(exp_sub(en, ed));
}

inline LaurentPolynomial exact_divide(const LaurentPolynomial& n,
                                      const LaurentPolynomial& d) {
    auto q = try_exact_divide(n, d);
    if (!q)
        throw DomainError("polynomial division is not exact");
    return *q;
}

inline bool divides(const LaurentPolynomial& d, const LaurentPolynomial& n) {
    return try_exact_divide(n, d).has_value();
}

namespace detail {

// Full pseudo-remainder of f by g in the variable v:
// lc_v(g)^(deg f - deg g + 1) * f reduced modulo g. Inputs have
// nonnegative exponents in v and deg_v(f) >= deg_v(g).
inline LaurentPolynomial pseudo_remainder(const LaurentPolynomial& f,
                                          const LaurentPolynomial& g,
                                          std::size_t v) {
    const std::int64_t dg = degree_in(g, v);
    const LaurentPolynomial lg = coefficient_in(g, v, dg);
    std::int64_t scale = degree_in(f, v) - dg + 1;
    LaurentPolynomial r = f;
    while (!r.is_zero()) {
        const std::int64_t dr = degree_in(r, v);
        if (dr < dg)
            break;
        const LaurentPolynomial lr = coefficient_in(r, v, dr);
        r = lg * r - shift_in(lr * g, v, dr - dg);
        --scale;
    }
    for (; scale > 0; --scale)
        r = r * lg;
    return r;
}

inline LaurentPolynomial power(const LaurentPolynomial& base,
                               std::int64_t e) {
    LaurentPolynomial r = LaurentPolynomial::one(base.variable_count());
    for (std::int64_t i = 0; i < e; ++i)
        r = r * base;
    return r;
}

inline LaurentPolynomial gcd_recursive(LaurentPolynomial a,
                                       LaurentPolynomial b);

// Content of f with respect to v: gcd of the v-coefficients.
inline LaurentPolynomial content_in(const LaurentPolynomial& f,
                                    std::size_t v) {
    LaurentPolynomial c(f.variable_count());
    for (std::int64_t k = 0; k <= degree_in(f, v); ++k) {
        LaurentPolynomial coeff = coefficient_in(f, v, k);
        if (coeff.is_zero())
            continue;
        c = c.is_zero() ? coeff : gcd_recursive(c, coeff);
        if (c.is_constant())
            break;
    }
    return c;
}

// Greatest common divisor as polynomials over Q, up to rational scale.
// Subresultant polynomial remainder sequence in the highest present
// variable, recursing on the coefficient ring for contents.
inline LaurentPolynomial gcd_recursive(LaurentPolynomial a,
                                       LaurentPolynomial b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    a *= 1 / a.rational_content();
    b *= 1 / b.rational_content();
    if (a.is_constant() || b.is_constant())
        return LaurentPolynomial::one(a.variable_count());
    if (a == b || a == -b)
        return a;

    std::size_t v = a.variable_count();
    while (v-- > 0)
        if (variable_present(a, v) || variable_present(b, v))
            break;

    const LaurentPolynomial ca = content_in(a, v);
    const LaurentPolynomial cb = content_in(b, v);
    const LaurentPolynomial c = gcd_recursive(ca, cb);
    LaurentPolynomial f = exact_divide(a, ca);
    LaurentPolynomial g = exact_divide(b, cb);
    if (degree_in(f, v) < degree_in(g, v))
        std::swap(f, g);

    // Subresultant sequence: the beta divisors keep coefficient growth
    // polynomial without recomputing contents at every step.
    LaurentPolynomial sub_g = LaurentPolynomial::one(a.variable_count());
    LaurentPolynomial sub_h = sub_g;
    for (;;) {
        if (g.is_zero())
            break;
        if (degree_in(g, v) == 0) {
            // Nonzero v-degree-0 remainder: the primitive parts are
            // coprime in v.
            f = LaurentPolynomial::one(a.variable_count());
            break;
        }
        const std::int64_t delta = degree_in(f, v) - degree_in(g, v);
        LaurentPolynomial r = pseudo_remainder(f, g, v);
        f = g;
        if (r.is_zero()) {
            g = r;
            break;
        }
        const LaurentPolynomial beta = sub_g * power(sub_h, delta);
        g = exact_divide(r, beta);
        sub_g = coefficient_in(f, v, degree_in(f, v));
        if (delta > 0)
            sub_h = exact_divide(power(sub_g, delta),
                                 power(sub_h, delta - 1));
    }
    // f now holds the last nonzero remainder up to content in v.
    f *= 1 / f.rational_content();
    if (!f.is_constant() && variable_present(f, v))
        f = exact_divide(f, content_in(f, v));
    else if (!f.is_constant())
        f = LaurentPolynomial::one(a.variable_count());
    return c * f;
}

} // namespace detail

// Normalizes a nonzero Laurent polynomial to the representative with
// componentwise-minimal exponent 0, integer content 1 and a positive
// coefficient on the lex-greatest monomial.
inline LaurentPolynomial normalize_monic(const LaurentPolynomial& f) {
    if (f.is_zero())
        throw DomainError("cannot normalize the zero polynomial");
    LaurentPolynomial r = f.shifted(exp_neg(f.min_exponents()));
    Rational scale = 1 / r.rational_content();
    if (sign(r.leading_term().second) < 0)
        scale = -scale;
    r *= scale;
    return r;
}

// Greatest common divisor in the Laurent ring, in the normal form of
// normalize_monic. The result divides both inputs exactly.
inline LaurentPolynomial gcd(const LaurentPolynomial& a,
                             const LaurentPolynomial& b) {
    if (a.variable_count() != b.variable_count())
        throw DimensionError("polynomials over different variable counts");
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd(0, 0) is undefined");
    if (a.is_zero())
        return normalize_monic(b);
    if (b.is_zero())
        return normalize_monic(a);
    if (a.is_unit() || b.is_unit())
        return LaurentPolynomial::one(a.variable_count());
    LaurentPolynomial aa = a.shifted(exp_neg(a.min_exponents()));
    LaurentPolynomial bb = b.shifted(exp_neg(b.min_exponents()));
    return normalize_monic(detail::gcd_recursive(std::move(aa),
                                                 std::move(bb)));
}

} // namespace magnus
