#pragma once

#include <cstdint>
#include <vector>

#include "magnus/exponent.hpp"
#include "magnus/presentation.hpp"
#include "magnus/rational.hpp"

namespace magnus {

// First-homology class of every generator, written as an exponent vector
// in the basis given by the 2g upper-boundary generators. Those basis
// generators themselves carry the standard basis vectors.
struct HomologyAssignment {
    int genus = 0;
    int internal_count = 0;
    std::vector<ExponentVector> minus_classes;    // size 2g
    std::vector<ExponentVector> internal_classes; // size l

    ExponentVector class_of(const GeneratorRef& g) const {
        switch (g.cls) {
        case GeneratorClass::Minus:
            return minus_classes.at(static_cast<std::size_t>(g.index - 1));
        case GeneratorClass::Internal:
            return internal_classes.at(static_cast<std::size_t>(g.index - 1));
        case GeneratorClass::Plus:
        default:
            return exp_unit(static_cast<std::size_t>(2 * genus),
                            static_cast<std::size_t>(g.index - 1));
        }
    }
};

// Integer matrix of the homological monodromy: column i is the class of
// the i-th lower-boundary generator in the upper-boundary basis.
struct MonodromyMatrix {
    int genus = 0;
    std::vector<std::vector<std::int64_t>> entries; // 2g x 2g

    std::size_t size() const { return entries.size(); }

    friend bool operator==(const MonodromyMatrix& a,
                           const MonodromyMatrix& b) {
        return a.genus == b.genus && a.entries == b.entries;
    }
};

inline Integer integer_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination.
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(m[s], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        prev = m[k][k];
    }
    return sign < 0 ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

inline Integer monodromy_determinant(const MonodromyMatrix& s) {
    std::vector<std::vector<Integer>> m(s.size(),
                                        std::vector<Integer>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            m[i][j] = s.entries[i][j];
    return integer_determinant(std::move(m));
}

inline MonodromyMatrix monodromy_product(const MonodromyMatrix& a,
                                         const MonodromyMatrix& b) {
    if (a.size() != b.size())
        throw DimensionError("monodromy product shape mismatch");
    MonodromyMatrix r;
    r.genus = a.genus;
    const std::size_t n = a.size();
    r.entries.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
    return r;
}

// Abelianization of the presentation. Builds the (2g+l) x (4g+l) exponent
// sum matrix of the relations, row-reduces exactly over the rationals and
// requires the reduced echelon form [I | M]; the class of generator i is
// then -(row i of M), which must be integral.
inline HomologyAssignment homology_classes(const AdmissiblePresentation& p) {
    validate(p);
    const std::size_t nrel = p.relations.size(); // 2g + l
    const std::size_t ngen = p.generator_count(); // 4g + l
    const std::size_t rank = nrel;

    std::vector<std::vector<Rational>> m(
        nrel, std::vector<Rational>(ngen, Rational(0)));
    for (std::size_t i = 0; i < nrel; ++i)
        for (const Letter& l : p.relations[i])
            m[i][p.global_index(l.gen)] += l.sign;

    // Reduced row echelon form over Q.
    std::size_t r = 0;
    for (std::size_t c = 0; c < ngen && r < nrel; ++c) {
        std::size_t pivot = r;
        while (pivot < nrel && m[pivot][c] == 0)
            ++pivot;
        if (pivot == nrel)
            continue;
        std::swap(m[pivot], m[r]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < ngen; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < nrel; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < ngen; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }

    // Pivots must sit exactly on the first 2g+l columns.
    if (r != rank)
        throw NotHomologyCylinderError(
            "relation exponent matrix has rank " + std::to_string(r) +
            ", expected " + std::to_string(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            if (m[i][j] != (i == j ? 1 : 0))
                throw NotHomologyCylinderError(
                    "reduced relation matrix is not [I | M]: the lower and "
                    "internal generators do not span the homology");

    HomologyAssignment h;
    h.genus = p.genus;
    h.internal_count = p.internal_count;
    const std::size_t basis = static_cast<std::size_t>(2 * p.genus);
    for (std::size_t i = 0; i < rank; ++i) {
        ExponentVector cls(basis, 0);
        for (std::size_t j = 0; j < basis; ++j) {
            const Rational& q = m[i][rank + j];
            if (!is_integer(q))
                throw NonIntegralHomologyError(
                    "homology class of " +
                    generator_token(p.generator_at(i)) + " is not integral");
            if (!q.get_num().fits_slong_p())
                throw NonIntegralHomologyError(
                    "homology class entry overflows a machine integer");
            cls[j] = -static_cast<std::int64_t>(q.get_num().get_si());
        }
        if (i < static_cast<std::size_t>(2 * p.genus))
            h.minus_classes.push_back(std::move(cls));
        else
            h.internal_classes.push_back(std::move(cls));
    }
    return h;
}

// Assembles the monodromy from the lower-boundary classes and checks
// unimodularity.
inline MonodromyMatrix homological_monodromy(const HomologyAssignment& h) {
    const std::size_t n = static_cast<std::size_t>(2 * h.genus);
    if (h.minus_classes.size() != n)
        throw DimensionError("homology assignment has wrong class count");
    MonodromyMatrix s;
    s.genus = h.genus;
    s.entries.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.entries[j][i] = h.minus_classes[i][j];
    const Integer d = monodromy_determinant(s);
    if (d != 1 && d != -1)
        throw NotHomologyCylinderError(
            "homological monodromy is not unimodular (det = " + d.get_str() +
            ")");
    return s;
}

inline MonodromyMatrix homological_monodromy(const AdmissiblePresentation& p) {
    return homological_monodromy(homology_classes(p));
}

} // namespace magnus
