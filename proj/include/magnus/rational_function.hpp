#pragma once

#include <string>
#include <utility>
#include <vector>

#include "magnus/gcd.hpp"
#include "magnus/laurent.hpp"

namespace magnus {

// Reduced fraction of Laurent polynomials. Canonical form: numerator and
// denominator coprime; denominator with componentwise-minimal exponent 0,
// integer content 1 and a positive coefficient on its lex-smallest
// monomial. Zero is 0/1. Equal values therefore compare equal
// componentwise.
class RationalFunction {
  public:
    explicit RationalFunction(std::size_t vars = 0)
        : num_(LaurentPolynomial::zero(vars)),
          den_(LaurentPolynomial::one(vars)) {}

    static RationalFunction zero(std::size_t vars) {
        return RationalFunction(vars);
    }

    static RationalFunction one(std::size_t vars) {
        return from_polynomial(LaurentPolynomial::one(vars));
    }

    static RationalFunction from_polynomial(LaurentPolynomial p) {
        RationalFunction f(p.variable_count());
        f.num_ = std::move(p);
        return f;
    }

    static RationalFunction constant(std::size_t vars, const Rational& c) {
        return from_polynomial(LaurentPolynomial::constant(vars, c));
    }

    // The reduced, canonically scaled fraction n / d.
    static RationalFunction make(const LaurentPolynomial& n,
                                 const LaurentPolynomial& d) {
        if (n.variable_count() != d.variable_count())
            throw DimensionError("fraction over different variable counts");
        if (d.is_zero())
            throw DivisionByZeroError("fraction with zero denominator");
        RationalFunction f(n.variable_count());
        if (n.is_zero())
            return f;
        if (d.is_unit()) {
            // Monomial denominators are units: fold into the numerator.
            const auto& [e, c] = d.trailing_term();
            f.num_ = n.shifted(exp_neg(e)) * (1 / c);
            return f;
        }
        if (n.is_unit()) {
            f.num_ = n;
            f.den_ = d;
            f.rescale();
            return f;
        }
        const LaurentPolynomial g = gcd(n, d);
        if (g.is_one()) {
            f.num_ = n;
            f.den_ = d;
        } else {
            f.num_ = exact_divide(n, g);
            f.den_ = exact_divide(d, g);
        }
        f.rescale();
        return f;
    }

    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }
    std::size_t variable_count() const { return num_.variable_count(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    // True when the value lies in the Laurent ring itself.
    bool is_laurent() const { return den_.is_one(); }

    std::size_t term_count() const {
        return num_.term_count() + den_.term_count();
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    // Addition with cross-reduction: only small gcds are ever computed,
    // which is what keeps elimination-time expression swell in check.
    friend RationalFunction operator+(const RationalFunction& a,
                                      const RationalFunction& b) {
        a.check_vars(b);
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.den_ == b.den_)
            return make(a.num_ + b.num_, a.den_);
        if (a.den_.is_one())
            return reduced(a.num_ * b.den_ + b.num_, b.den_);
        if (b.den_.is_one())
            return reduced(a.num_ + b.num_ * a.den_, a.den_);
        const LaurentPolynomial g0 = gcd(a.den_, b.den_);
        if (g0.is_one())
            return reduced(a.num_ * b.den_ + b.num_ * a.den_,
                           a.den_ * b.den_);
        const LaurentPolynomial da = exact_divide(a.den_, g0);
        const LaurentPolynomial db = exact_divide(b.den_, g0);
        LaurentPolynomial num = a.num_ * db + b.num_ * da;
        if (num.is_zero())
            return zero(a.variable_count());
        LaurentPolynomial den = da * b.den_;
        const LaurentPolynomial h = gcd(num, g0);
        if (!h.is_one()) {
            num = exact_divide(num, h);
            den = exact_divide(den, h);
        }
        return reduced(std::move(num), std::move(den));
    }

    friend RationalFunction operator-(const RationalFunction& a,
                                      const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a,
                                      const RationalFunction& b) {
        a.check_vars(b);
        if (a.is_zero() || b.is_zero())
            return zero(a.variable_count());
        if (a.is_one())
            return b;
        if (b.is_one())
            return a;
        const LaurentPolynomial g1 = a.den_.is_one() || b.num_.is_unit()
                                         ? LaurentPolynomial::one(a.vars())
                                         : gcd(b.num_, a.den_);
        const LaurentPolynomial g2 = b.den_.is_one() || a.num_.is_unit()
                                         ? LaurentPolynomial::one(a.vars())
                                         : gcd(a.num_, b.den_);
        const LaurentPolynomial num =
            (g2.is_one() ? a.num_ : exact_divide(a.num_, g2)) *
            (g1.is_one() ? b.num_ : exact_divide(b.num_, g1));
        const LaurentPolynomial den =
            (g1.is_one() ? a.den_ : exact_divide(a.den_, g1)) *
            (g2.is_one() ? b.den_ : exact_divide(b.den_, g2));
        return reduced(num, den);
    }

    friend RationalFunction operator/(const RationalFunction& a,
                                      const RationalFunction& b) {
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& o) {
        *this = *this + o;
        return *this;
    }

    RationalFunction& operator-=(const RationalFunction& o) {
        *this = *this - o;
        return *this;
    }

    RationalFunction& operator*=(const RationalFunction& o) {
        *this = *this * o;
        return *this;
    }

    RationalFunction inverse() const {
        if (is_zero())
            throw DivisionByZeroError("inverse of the zero function");
        return reduced(den_, num_);
    }

    friend bool operator==(const RationalFunction& a,
                           const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator!=(const RationalFunction& a,
                           const RationalFunction& b) {
        return !(a == b);
    }

    // Homomorphic substitution of monomial images into numerator and
    // denominator, re-reduced. Throws PoleError when the denominator
    // specializes to zero.
    RationalFunction specialize(const std::vector<ExponentVector>& images,
                                std::size_t target_vars) const {
        LaurentPolynomial d = den_.substitute(images, target_vars);
        if (d.is_zero())
            throw PoleError("denominator vanishes under specialization");
        return make(num_.substitute(images, target_vars), d);
    }

    std::string text(const std::string& var_prefix = "g") const {
        if (den_.is_one())
            return num_.text(var_prefix);
        return "(" + num_.text(var_prefix) + ") / (" + den_.text(var_prefix) +
               ")";
    }

  private:
    std::size_t vars() const { return num_.variable_count(); }

    void check_vars(const RationalFunction& o) const {
        if (variable_count() != o.variable_count())
            throw DimensionError("fractions over different variable counts");
    }

    // Builds a fraction already known to be coprime; only canonical
    // scaling is applied.
    static RationalFunction reduced(LaurentPolynomial n, LaurentPolynomial d) {
        RationalFunction f(n.variable_count());
        if (n.is_zero())
            return f;
        if (d.is_unit()) {
            const auto& [e, c] = d.trailing_term();
            f.num_ = n.shifted(exp_neg(e)) * (1 / c);
            return f;
        }
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        f.rescale();
        return f;
    }

    // Denominator scaling: minimal exponent 0, then a rational factor
    // making the integer content 1 with a positive lex-smallest
    // coefficient; the factor is absorbed into the numerator.
    void rescale() {
        const ExponentVector shift = exp_neg(den_.min_exponents());
        if (!exp_is_zero(shift)) {
            den_ = den_.shifted(shift);
            num_ = num_.shifted(shift);
        }
        Rational scale = 1 / den_.rational_content();
        if (sign(den_.trailing_term().second) < 0)
            scale = -scale;
        if (scale != 1) {
            den_ *= scale;
            num_ *= scale;
        }
    }

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

// Evaluation of a Laurent polynomial with every variable sent to 1;
// total coefficient sum (the augmentation map).
inline Rational augmentation(const LaurentPolynomial& p) {
    Rational s = 0;
    for (const auto& [e, c] : p.terms())
        s += c;
    return s;
}

} // namespace magnus
