#include <catch2/catch_amalgamated.hpp>

#include "magnus/corpus.hpp"
#include "magnus/invariants.hpp"
#include "magnus/matrix.hpp"

#include "oracles.hpp"
#include "properties.hpp"

using namespace magnus;

namespace {

LaurentPolynomial lp(std::size_t vars,
                     std::vector<std::pair<long, ExponentVector>> terms) {
    LaurentPolynomial p(vars);
    for (auto& [c, e] : terms)
        p.add_term(e, Rational(c));
    return p;
}

RationalFunction rf(LaurentPolynomial p) {
    return RationalFunction::from_polynomial(std::move(p));
}

} // namespace

TEST_CASE("determinant on the stated examples") {
    FieldMatrix diag(2, 2, 2);
    diag.at(0, 0) = rf(lp(2, {{1, {1, 0}}}));
    diag.at(1, 1) = rf(lp(2, {{1, {0, 1}}}));
    CHECK(determinant(diag) == rf(lp(2, {{1, {1, 1}}})));

    FieldMatrix rank1(2, 2, 1);
    rank1.at(0, 0) = rf(LaurentPolynomial::one(1));
    rank1.at(0, 1) = rf(lp(1, {{1, {-1}}}));
    rank1.at(1, 0) = rf(lp(1, {{1, {1}}}));
    rank1.at(1, 1) = rf(LaurentPolynomial::one(1));
    CHECK(determinant(rank1).is_zero());

    FieldMatrix empty(0, 0, 1);
    CHECK(determinant(empty) == RationalFunction::one(1));

    FieldMatrix rect(2, 3, 1);
    CHECK_THROWS_AS(determinant(rect), DimensionError);
}

TEST_CASE("inverse on the stated examples") {
    CHECK(inverse(FieldMatrix::identity(4, 2)) ==
          FieldMatrix::identity(4, 2));

    // [[g1, 1], [0, 1]]^-1 = [[g1^-1, -g1^-1], [0, 1]].
    FieldMatrix m(2, 2, 1);
    m.at(0, 0) = rf(lp(1, {{1, {1}}}));
    m.at(0, 1) = rf(LaurentPolynomial::one(1));
    m.at(1, 1) = rf(LaurentPolynomial::one(1));
    const FieldMatrix inv = inverse(m);
    CHECK(inv.at(0, 0) == rf(lp(1, {{1, {-1}}})));
    CHECK(inv.at(0, 1) == rf(lp(1, {{-1, {-1}}})));
    CHECK(inv.at(1, 0).is_zero());
    CHECK(inv.at(1, 1) == rf(LaurentPolynomial::one(1)));
    CHECK(inv * m == FieldMatrix::identity(2, 1));
    CHECK(m * inv == FieldMatrix::identity(2, 1));
}

TEST_CASE("singular matrices raise a singularity error with a pivot "
          "location") {
    FieldMatrix s(2, 2, 1);
    s.at(0, 0) = rf(LaurentPolynomial::one(1));
    s.at(0, 1) = rf(LaurentPolynomial::one(1));
    s.at(1, 0) = rf(LaurentPolynomial::one(1));
    s.at(1, 1) = rf(LaurentPolynomial::one(1));
    try {
        inverse(s);
        FAIL("expected SingularityError");
    } catch (const SingularityError& e) {
        CHECK(e.row == 1);
        CHECK(e.col == 1);
    }
}

TEST_CASE("multiply-back check on every corpus torsion matrix") {
    for (const auto& entry : corpus()) {
        const FieldMatrix tau = torsion_matrix(entry.presentation);
        const FieldMatrix inv = inverse(tau);
        CAPTURE(entry.presentation.name);
        CHECK(inv * tau ==
              FieldMatrix::identity(tau.rows(), tau.variable_count()));
    }
}

TEST_CASE("determinant equals cofactor expansion on random sparse "
          "matrices (randomized)") {
    const auto res = testutil::det_oracle_suite(300);
    CAPTURE(res.failures);
    CHECK(res.ok());
}

TEST_CASE("solve returns the exact solution") {
    testutil::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        FieldMatrix m(3, 3, 2);
        do {
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c)
                    m.at(r, c) = rf(testutil::rand_poly(rng, 2, 2));
        } while (determinant(m).is_zero());
        FieldMatrix b(3, 2, 2);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                b.at(r, c) = rf(testutil::rand_poly(rng, 2, 2));
        const FieldMatrix x = solve(m, b);
        CHECK(m * x == b);
    }
}
