#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "magnus/exponent.hpp"
#include "magnus/rational.hpp"

namespace magnus {

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept in lexicographic order and never store a zero coefficient,
// so structural equality is semantic equality.
class LaurentPolynomial {
  public:
    using TermMap = std::map<ExponentVector, Rational, LexLess>;

    explicit LaurentPolynomial(std::size_t variable_count = 0)
        : vars_(variable_count) {}

    static LaurentPolynomial zero(std::size_t vars) {
        return LaurentPolynomial(vars);
    }

    static LaurentPolynomial constant(std::size_t vars, Rational c) {
        LaurentPolynomial p(vars);
        if (c != 0)
            p.terms_.emplace(exp_zero(vars), std::move(c));
        return p;
    }

    static LaurentPolynomial one(std::size_t vars) {
        return constant(vars, 1);
    }

    static LaurentPolynomial monomial(std::size_t vars, Rational c,
                                      ExponentVector e) {
        if (e.size() != vars)
            throw DimensionError("monomial exponent length != variable count");
        LaurentPolynomial p(vars);
        if (c != 0)
            p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    // The variable with the given 0-based index, as a polynomial.
    static LaurentPolynomial variable(std::size_t vars, std::size_t index) {
        if (index >= vars)
            throw DimensionError("variable index out of range");
        return monomial(vars, 1, exp_unit(vars, index));
    }

    std::size_t variable_count() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && exp_is_zero(terms_.begin()->first));
    }

    bool is_one() const {
        return terms_.size() == 1 && exp_is_zero(terms_.begin()->first) &&
               terms_.begin()->second == 1;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    // Unit of the Laurent ring up to rational scale: a single term.
    // A strict group-ring unit additionally has coefficient +-1.
    bool is_unit() const { return terms_.size() == 1; }

    Rational constant_term() const {
        auto it = terms_.find(exp_zero(vars_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExponentVector& e, const Rational& c) {
        if (e.size() != vars_)
            throw DimensionError("term exponent length != variable count");
        if (c == 0)
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r(vars_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a,
                                       const LaurentPolynomial& b) {
        a += b;
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a,
                                       const LaurentPolynomial& b) {
        a -= b;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                       const LaurentPolynomial& b) {
        a.check_vars(b);
        LaurentPolynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(exp_add(ea, eb), ca * cb);
        return r;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& o) {
        *this = *this * o;
        return *this;
    }

    LaurentPolynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [e, v] : terms_)
                v *= c;
        }
        return *this;
    }

    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) {
        a *= c;
        return a;
    }

    friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) {
        a *= c;
        return a;
    }

    // Multiplication by the monomial gamma^e: shifts every exponent.
    LaurentPolynomial shifted(const ExponentVector& e) const {
        if (e.size() != vars_)
            throw DimensionError("shift exponent length != variable count");
        LaurentPolynomial r(vars_);
        for (const auto& [t, c] : terms_)
            r.terms_.emplace(exp_add(t, e), c);
        return r;
    }

    // Group-ring involution induced by inverting group elements.
    LaurentPolynomial involution() const {
        LaurentPolynomial r(vars_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(exp_neg(e), c);
        return r;
    }

    // Componentwise minimum of the exponent vectors over all terms.
    // Undefined on the zero polynomial.
    ExponentVector min_exponents() const {
        if (terms_.empty())
            throw DomainError("min_exponents of the zero polynomial");
        ExponentVector m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < vars_; ++i)
                m[i] = std::min(m[i], e[i]);
        return m;
    }

    ExponentVector max_exponents() const {
        if (terms_.empty())
            throw DomainError("max_exponents of the zero polynomial");
        ExponentVector m = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < vars_; ++i)
                m[i] = std::max(m[i], e[i]);
        return m;
    }

    // Lex-smallest and lex-greatest terms (terms are kept sorted).
    const std::pair<const ExponentVector, Rational>& trailing_term() const {
        if (terms_.empty())
            throw DomainError("trailing_term of the zero polynomial");
        return *terms_.begin();
    }

    const std::pair<const ExponentVector, Rational>& leading_term() const {
        if (terms_.empty())
            throw DomainError("leading_term of the zero polynomial");
        return *terms_.rbegin();
    }

    // Positive rational c with (1/c) * this having coprime integer
    // coefficients. Undefined on zero.
    Rational rational_content() const {
        if (terms_.empty())
            throw DomainError("content of the zero polynomial");
        Integer num_gcd = 0;
        Integer den_lcm = 1;
        for (const auto& [e, c] : terms_) {
            num_gcd = magnus::gcd(num_gcd, abs(c.get_num()));
            den_lcm = magnus::lcm(den_lcm, c.get_den());
        }
        return Rational(num_gcd, den_lcm);
    }

    // Ring homomorphism sending variable j to the monomial with exponent
    // images[j] in a space of target_vars variables.
    LaurentPolynomial substitute(const std::vector<ExponentVector>& images,
                                 std::size_t target_vars) const {
        if (images.size() != vars_)
            throw DimensionError("substitution image count != variable count");
        for (const auto& im : images)
            if (im.size() != target_vars)
                throw DimensionError("substitution image has wrong length");
        LaurentPolynomial r(target_vars);
        for (const auto& [e, c] : terms_) {
            ExponentVector t = exp_zero(target_vars);
            for (std::size_t j = 0; j < vars_; ++j)
                if (e[j] != 0)
                    t = exp_add(t, exp_scale(images[j], e[j]));
            r.add_term(t, c);
        }
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a,
                           const LaurentPolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    friend bool operator!=(const LaurentPolynomial& a,
                           const LaurentPolynomial& b) {
        return !(a == b);
    }

    // Canonical text: terms in ascending lex order, explicit exponents.
    // Example: "1 + -1 * g2^1 g4^1". Bit-exact for equal polynomials.
    std::string text(const std::string& var_prefix = "g") const {
        if (terms_.empty())
            return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first)
                out << " + ";
            first = false;
            out << to_string(c);
            bool any = false;
            for (std::size_t i = 0; i < vars_; ++i) {
                if (e[i] == 0)
                    continue;
                out << (any ? " " : " * ") << var_prefix << (i + 1) << "^"
                    << e[i];
                any = true;
            }
        }
        return out.str();
    }

  private:
    void check_vars(const LaurentPolynomial& o) const {
        if (vars_ != o.vars_)
            throw DimensionError("polynomials over different variable counts");
    }

    std::size_t vars_;
    TermMap terms_;
};

} // namespace magnus
