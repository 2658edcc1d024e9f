#include <catch2/catch_amalgamated.hpp>

#include "magnus/corpus.hpp"
#include "magnus/cylinders.hpp"
#include "magnus/fox.hpp"
#include "magnus/invariants.hpp"

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

} // namespace

TEST_CASE("identity cylinder invariants") {
    const InvariantReport rep1 = compute_report(identity_cylinder(1));
    CHECK(rep1.internal_count == 0);
    CHECK(rep1.magnus == FieldMatrix::identity(2, 2));
    CHECK(rep1.torsion.normal == LaurentPolynomial::one(2));
    AlexanderPolynomial sq;
    for (long c : {1L, -2L, 1L})
        sq.coefficients.push_back(Rational(c));
    CHECK(rep1.alexander == sq); // (1-t)^2

    const InvariantReport rep2 = compute_report(identity_cylinder(2));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(rep2.monodromy.entries[i][j] == (i == j ? 1 : 0));
    CHECK(rep2.fiberedness.verdict() == Verdict::ConsistentWithFibered);

    CHECK_THROWS_AS(identity_cylinder(0), AdmissibilityError);
}

TEST_CASE("mapping cylinder of the identity is the identity cylinder") {
    FreeEndomorphism id;
    id.genus = 2;
    for (int j = 1; j <= 4; ++j)
        id.images.push_back(Word{{plus_gen(j), 1}});
    const AdmissiblePresentation p = mapping_cylinder(id);
    const AdmissiblePresentation q = identity_cylinder(2);
    REQUIRE(p.relations.size() == q.relations.size());
    for (std::size_t j = 0; j < p.relations.size(); ++j)
        CHECK(p.relations[j] == q.relations[j]);
}

TEST_CASE("trefoil monodromy as a mapping cylinder: Magnus matrix equals "
          "the involuted Fox Jacobian and the knot presentation's matrix") {
    // phi: g1 -> g1 g2^-1, g2 -> g2 g1 g2^-1 realizes the trefoil matrix.
    FreeEndomorphism phi;
    phi.genus = 1;
    phi.images = {Word{{plus_gen(1), 1}, {plus_gen(2), -1}},
                  Word{{plus_gen(2), 1}, {plus_gen(1), 1},
                       {plus_gen(2), -1}}};
    const AdmissiblePresentation cyl = mapping_cylinder(phi);
    const FieldMatrix r = magnus_matrix(cyl);

    // Jacobian oracle: entries are the involuted abelianized derivatives
    // of the image words.
    HomologyAssignment basis;
    basis.genus = 1;
    basis.internal_count = 0;
    basis.minus_classes = {exp_unit(2, 0), exp_unit(2, 1)};
    FieldMatrix jac(2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            jac.at(i, j) = RationalFunction::from_polynomial(fox_derivative(
                phi.images[j], plus_gen(static_cast<int>(i) + 1), basis));
    CHECK(r == jac);

    CHECK(r == magnus_matrix(find_corpus_entry("trefoil")->presentation));
    CHECK(r == corpus_detail::trefoil_magnus());
}

TEST_CASE("mapping cylinders of random endomorphisms have sigma equal to "
          "the abelianization") {
    testutil::Rng rng(71);
    for (int i = 0; i < 30; ++i) {
        const FreeEndomorphism phi = testutil::rand_endomorphism(rng, 1);
        const MonodromyMatrix s =
            homological_monodromy(mapping_cylinder(phi));
        const auto ab = phi.abelianized();
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                CHECK(s.entries[r][c] == ab[r][c]);
    }
}

TEST_CASE("non-unimodular endomorphisms are rejected") {
    FreeEndomorphism phi;
    phi.genus = 1;
    phi.images = {Word{{plus_gen(1), 1}, {plus_gen(1), 1}},
                  Word{{plus_gen(2), 1}}};
    CHECK_THROWS_AS(mapping_cylinder(phi), NotHomologyCylinderError);
}

TEST_CASE("composition bookkeeping") {
    const AdmissiblePresentation& knot =
        find_corpus_entry("0057")->presentation;
    const AdmissiblePresentation id2 = identity_cylinder(2);

    const AdmissiblePresentation c = compose(knot, id2);
    CHECK(c.genus == 2);
    CHECK(c.internal_count == 12);
    CHECK(c.relations.size() == 16);
    CHECK_NOTHROW(validate(c));

    CHECK_THROWS_AS(compose(identity_cylinder(1), id2), DimensionError);
}

TEST_CASE("unit laws on a corpus entry") {
    const AdmissiblePresentation& knot =
        find_corpus_entry("0057")->presentation;
    const InvariantReport rep = compute_report(knot);
    const AdmissiblePresentation id2 = identity_cylinder(2);

    for (const AdmissiblePresentation& c :
         {compose(id2, knot), compose(knot, id2)}) {
        const InvariantReport crep = compute_report(c);
        CHECK(crep.magnus == rep.magnus);
        CHECK(crep.monodromy == rep.monodromy);
        CHECK(crep.torsion.normal == rep.torsion.normal);
        CHECK(crep.alexander == rep.alexander);
    }
}

TEST_CASE("composition multiplies monodromies") {
    testutil::Rng rng(72);
    for (int i = 0; i < 20; ++i) {
        const AdmissiblePresentation p =
            mapping_cylinder(testutil::rand_endomorphism(rng, 1));
        const AdmissiblePresentation q =
            mapping_cylinder(testutil::rand_endomorphism(rng, 1));
        const MonodromyMatrix expected = monodromy_product(
            homological_monodromy(p), homological_monodromy(q));
        CHECK(homological_monodromy(compose(p, q)) == expected);
    }
}

TEST_CASE("associativity of composition at the invariant level") {
    testutil::Rng rng(73);
    for (int i = 0; i < 5; ++i) {
        const AdmissiblePresentation p =
            mapping_cylinder(testutil::rand_endomorphism(rng, 1, 2));
        const AdmissiblePresentation q =
            mapping_cylinder(testutil::rand_endomorphism(rng, 1, 2));
        const AdmissiblePresentation r =
            mapping_cylinder(testutil::rand_endomorphism(rng, 1, 2));
        const InvariantReport left = compute_report(compose(compose(p, q), r));
        const InvariantReport right =
            compute_report(compose(p, compose(q, r)));
        CHECK(left.magnus == right.magnus);
        CHECK(left.monodromy == right.monodromy);
        CHECK(left.torsion.normal == right.torsion.normal);
    }
}

TEST_CASE("composing the trefoil with the identity preserves the torsion "
          "unit class") {
    const AdmissiblePresentation& trefoil =
        find_corpus_entry("trefoil")->presentation;
    const InvariantReport rep =
        compute_report(compose(trefoil, identity_cylinder(1)));
    CHECK(rep.torsion.normal == LaurentPolynomial::one(2));
    CHECK(equal_up_to_unit(rep.torsion_raw, lp(2, {{1, {0, -1}}})));
}

TEST_CASE("unit laws and monodromy multiplicativity (randomized)") {
    const auto res = testutil::cylinder_suite(60);
    CAPTURE(res.failures);
    CHECK(res.ok());
}
