#pragma once

#include <string>
#include <utility>
#include <vector>

#include "magnus/fox.hpp"
#include "magnus/homology.hpp"
#include "magnus/matrix.hpp"
#include "magnus/presentation.hpp"

namespace magnus {

// Fox-derivative blocks of an admissible presentation: row i of A / B / C
// is the derivative with respect to the i-th lower-boundary / internal /
// upper-boundary generator; column j corresponds to relation j. All
// entries are Laurent polynomials.
struct JacobianBlocks {
    FieldMatrix a; // 2g x (2g+l)
    FieldMatrix b; // l  x (2g+l)
    FieldMatrix c; // 2g x (2g+l)
};

inline JacobianBlocks assemble_blocks(const AdmissiblePresentation& p,
                                      const HomologyAssignment& h) {
    const std::size_t vars = static_cast<std::size_t>(2 * p.genus);
    const std::size_t g2 = static_cast<std::size_t>(2 * p.genus);
    const std::size_t l = static_cast<std::size_t>(p.internal_count);
    const std::size_t nrel = p.relations.size();
    JacobianBlocks blocks{FieldMatrix(g2, nrel, vars),
                          FieldMatrix(l, nrel, vars),
                          FieldMatrix(g2, nrel, vars)};
    for (std::size_t j = 0; j < nrel; ++j) {
        const Word& r = p.relations[j];
        for (std::size_t i = 0; i < g2; ++i)
            blocks.a.at(i, j) = RationalFunction::from_polynomial(
                fox_derivative(r, minus_gen(static_cast<int>(i) + 1), h));
        for (std::size_t i = 0; i < l; ++i)
            blocks.b.at(i, j) = RationalFunction::from_polynomial(
                fox_derivative(r, internal_gen(static_cast<int>(i) + 1), h));
        for (std::size_t i = 0; i < g2; ++i)
            blocks.c.at(i, j) = RationalFunction::from_polynomial(
                fox_derivative(r, plus_gen(static_cast<int>(i) + 1), h));
    }
    return blocks;
}

inline JacobianBlocks assemble_blocks(const AdmissiblePresentation& p) {
    return assemble_blocks(p, homology_classes(p));
}

// The square (2g+l) x (2g+l) torsion matrix: A stacked on B, rows indexed
// by lower-boundary then internal generators, columns by relations.
inline FieldMatrix torsion_matrix(const JacobianBlocks& blocks) {
    return FieldMatrix::stack(blocks.a, blocks.b);
}

inline FieldMatrix torsion_matrix(const AdmissiblePresentation& p) {
    return torsion_matrix(assemble_blocks(p));
}

// A Laurent polynomial split as unit * normal, where the unit is a signed
// monomial and the normal part has componentwise-minimal exponent 0 and a
// positive coefficient on its lex-smallest monomial. The integer content
// stays with the normal part.
struct NormalizedLaurent {
    LaurentPolynomial unit;   // +-gamma^e
    LaurentPolynomial normal;

    LaurentPolynomial reconstruct() const { return unit * normal; }

    bool is_trivial() const { return normal.is_one(); }

    friend bool operator==(const NormalizedLaurent& a,
                           const NormalizedLaurent& b) {
        return a.unit == b.unit && a.normal == b.normal;
    }
};

inline NormalizedLaurent normalize_unit(const LaurentPolynomial& f) {
    if (f.is_zero())
        throw DomainError("cannot split the zero polynomial as unit*normal");
    const ExponentVector e = f.min_exponents();
    LaurentPolynomial normal = f.shifted(exp_neg(e));
    Rational unit_coeff = 1;
    if (sign(normal.trailing_term().second) < 0) {
        normal = -normal;
        unit_coeff = -1;
    }
    return {LaurentPolynomial::monomial(f.variable_count(), unit_coeff, e),
            std::move(normal)};
}

// Determinant of the torsion matrix, reduced (the reduced value of a
// matrix of Laurent entries always has denominator 1) and split into
// unit and normal parts.
inline NormalizedLaurent torsion_determinant(const JacobianBlocks& blocks) {
    const RationalFunction det = determinant(torsion_matrix(blocks));
    if (det.is_zero())
        throw NotHomologyCylinderError("torsion matrix is singular");
    if (!det.is_laurent())
        throw Error("torsion determinant reduced to a proper fraction");
    return normalize_unit(det.numerator());
}

inline NormalizedLaurent torsion_determinant(const AdmissiblePresentation& p) {
    return torsion_determinant(assemble_blocks(p));
}

// The 2g x 2g Magnus matrix -C (A;B)^{-1} (I;0).
inline FieldMatrix magnus_matrix(const JacobianBlocks& blocks) {
    const std::size_t g2 = blocks.a.rows();
    const std::size_t vars = blocks.a.variable_count();
    const FieldMatrix tau = torsion_matrix(blocks);
    FieldMatrix rhs(tau.rows(), g2, vars);
    for (std::size_t i = 0; i < g2; ++i)
        rhs.at(i, i) = RationalFunction::one(vars);
    try {
        return -(blocks.c * solve(tau, rhs));
    } catch (const SingularityError&) {
        throw NotHomologyCylinderError("torsion matrix is singular");
    }
}

inline FieldMatrix magnus_matrix(const AdmissiblePresentation& p) {
    return magnus_matrix(assemble_blocks(p));
}

// Integer polynomial in one variable t, stored as coefficients of
// t^0..t^d, normalized by +-t^k so the constant term is nonzero and
// positive.
struct AlexanderPolynomial {
    std::vector<Rational> coefficients;

    std::size_t degree() const {
        std::size_t d = 0;
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            if (coefficients[i] != 0)
                d = i;
        return d;
    }

    // Coefficients read the same reversed, up to one global sign.
    bool palindromic_up_to_sign() const {
        if (coefficients.empty())
            return true;
        const std::size_t d = degree();
        bool plus = true, minus = true;
        for (std::size_t i = 0; i <= d; ++i) {
            if (coefficients[i] != coefficients[d - i])
                plus = false;
            if (coefficients[i] != -coefficients[d - i])
                minus = false;
        }
        return plus || minus;
    }

    friend bool operator==(const AlexanderPolynomial& a,
                           const AlexanderPolynomial& b) {
        const std::size_t n =
            std::max(a.coefficients.size(), b.coefficients.size());
        for (std::size_t i = 0; i < n; ++i) {
            const Rational x =
                i < a.coefficients.size() ? a.coefficients[i] : Rational(0);
            const Rational y =
                i < b.coefficients.size() ? b.coefficients[i] : Rational(0);
            if (x != y)
                return false;
        }
        return true;
    }

    std::string text() const {
        if (coefficients.empty())
            return "0";
        std::string s;
        for (std::size_t i = 0; i <= degree(); ++i) {
            if (coefficients[i] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += to_string(coefficients[i]);
            if (i > 0)
                s += " t^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }
};

// det(I - t*sigma) as a polynomial in t, unit-normalized.
inline AlexanderPolynomial alexander_polynomial(const MonodromyMatrix& s) {
    const std::size_t n = s.size();
    FieldMatrix m(n, n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPolynomial e(1);
            if (i == j)
                e.add_term(exp_zero(1), 1);
            e.add_term({1}, -Rational(static_cast<long>(s.entries[i][j])));
            m.at(i, j) = RationalFunction::from_polynomial(e);
        }
    const RationalFunction det = determinant(m);
    if (!det.is_laurent())
        throw Error("characteristic determinant reduced to a fraction");

    AlexanderPolynomial a;
    if (det.is_zero())
        return a;
    const LaurentPolynomial& poly = det.numerator();
    const std::int64_t low = poly.min_exponents()[0];
    const std::int64_t high = poly.max_exponents()[0];
    a.coefficients.assign(static_cast<std::size_t>(high - low + 1),
                          Rational(0));
    for (const auto& [e, c] : poly.terms())
        a.coefficients[static_cast<std::size_t>(e[0] - low)] = c;
    if (sign(a.coefficients[0]) < 0)
        for (auto& c : a.coefficients)
            c = -c;
    return a;
}

// det(I - t*sigma) / (1 - t), reduced: the exterior torsion of the
// abelianized coefficient system.
inline RationalFunction abelian_exterior_torsion(const MonodromyMatrix& s) {
    AlexanderPolynomial a = alexander_polynomial(s);
    LaurentPolynomial num(1);
    for (std::size_t i = 0; i < a.coefficients.size(); ++i)
        num.add_term({static_cast<std::int64_t>(i)}, a.coefficients[i]);
    LaurentPolynomial den(1);
    den.add_term({0}, 1);
    den.add_term({1}, -1);
    return RationalFunction::make(num, den);
}

// True iff f = +-gamma^e * g for some exponent vector e.
inline bool equal_up_to_unit(const RationalFunction& f,
                             const RationalFunction& g) {
    if (f.variable_count() != g.variable_count())
        throw DimensionError("values over different variable counts");
    if (f.is_zero() || g.is_zero())
        return f.is_zero() && g.is_zero();
    const RationalFunction q = f / g;
    if (!q.is_laurent() || !q.numerator().is_monomial())
        return false;
    const Rational& c = q.numerator().trailing_term().second;
    return c == 1 || c == -1;
}

inline bool equal_up_to_unit(const LaurentPolynomial& f,
                             const LaurentPolynomial& g) {
    return equal_up_to_unit(RationalFunction::from_polynomial(f),
                            RationalFunction::from_polynomial(g));
}

enum class Verdict { NotFibered, ConsistentWithFibered };

inline std::string to_string(Verdict v) {
    return v == Verdict::NotFibered ? "NOT_FIBERED"
                                    : "CONSISTENT_WITH_FIBERED";
}

// The two fibering obstructions. Both are necessary conditions, so the
// positive verdict only reports consistency.
struct FiberednessVerdict {
    bool torsion_trivial = false;
    bool magnus_integral = false;

    Verdict verdict() const {
        return (torsion_trivial && magnus_integral)
                   ? Verdict::ConsistentWithFibered
                   : Verdict::NotFibered;
    }
};

inline bool matrix_is_integral(const FieldMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_laurent())
                return false;
    return true;
}

// Bundled output of the whole pipeline.
struct InvariantReport {
    std::string name;
    int genus = 0;
    int internal_count = 0;
    HomologyAssignment classes;
    MonodromyMatrix monodromy;
    LaurentPolynomial torsion_raw;   // exact determinant value
    NormalizedLaurent torsion;       // unit * normal split
    FieldMatrix magnus;
    AlexanderPolynomial alexander;
    FiberednessVerdict fiberedness;
};

inline InvariantReport compute_report(const AdmissiblePresentation& p) {
    validate(p);
    const HomologyAssignment h = homology_classes(p);
    const JacobianBlocks blocks = assemble_blocks(p, h);

    InvariantReport rep;
    rep.name = p.name;
    rep.genus = p.genus;
    rep.internal_count = p.internal_count;
    rep.classes = h;
    rep.monodromy = homological_monodromy(h);
    rep.magnus = magnus_matrix(blocks);
    rep.torsion = torsion_determinant(blocks);
    rep.torsion_raw = rep.torsion.reconstruct();
    rep.alexander = alexander_polynomial(rep.monodromy);
    rep.fiberedness.torsion_trivial = rep.torsion.is_trivial();
    rep.fiberedness.magnus_integral = matrix_is_integral(rep.magnus);
    return rep;
}

inline FiberednessVerdict fiberedness_report(const AdmissiblePresentation& p) {
    const JacobianBlocks blocks = assemble_blocks(p);
    FiberednessVerdict v;
    v.torsion_trivial = torsion_determinant(blocks).is_trivial();
    v.magnus_integral = matrix_is_integral(magnus_matrix(blocks));
    return v;
}

} // namespace magnus
