#pragma once

#include <atomic>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "magnus/cylinders.hpp"
#include "magnus/invariants.hpp"
#include "magnus/presentation.hpp"

namespace magnus {

// One embedded presentation together with its published golden values.
// Torsion goldens are stored as parsed expressions and compared up to a
// group-ring unit; Magnus goldens compare exactly.
struct CorpusEntry {
    AdmissiblePresentation presentation;
    LaurentPolynomial torsion_golden;
    std::vector<long> alexander_golden; // coefficients of t^0..t^2g
    bool golden_torsion_trivial = false;
    std::optional<bool> golden_magnus_integral;
    std::optional<FieldMatrix> magnus_golden;
    struct MagnusEntryGolden {
        std::size_t row, col;
        RationalFunction value;
    };
    std::vector<MagnusEntryGolden> magnus_entry_goldens;
};

namespace corpus_detail {

inline AdmissiblePresentation
pres(std::string name, int g, int l,
     const std::vector<std::vector<std::string>>& rels) {
    AdmissiblePresentation p;
    p.name = std::move(name);
    p.genus = g;
    p.internal_count = l;
    for (const auto& r : rels)
        p.relations.push_back(parse_word(r));
    return validate(p);
}

inline LaurentPolynomial
lp(std::size_t vars,
   const std::vector<std::pair<long, ExponentVector>>& terms) {
    LaurentPolynomial p(vars);
    for (const auto& [c, e] : terms)
        p.add_term(e, Rational(c));
    return p;
}

inline RationalFunction
rf(std::size_t vars,
   const std::vector<std::pair<long, ExponentVector>>& num,
   const std::vector<std::pair<long, ExponentVector>>& den) {
    return RationalFunction::make(lp(vars, num), lp(vars, den));
}

// The 2x2 matrix shared by the trefoil cylinder and its concordant knot.
inline FieldMatrix trefoil_magnus() {
    FieldMatrix m(2, 2, 2);
    m.at(0, 0) = RationalFunction::one(2);
    m.at(0, 1) =
        RationalFunction::from_polynomial(lp(2, {{1, {0, -1}}}));
    m.at(1, 0) =
        RationalFunction::from_polynomial(lp(2, {{-1, {-1, 1}}}));
    m.at(1, 1) = RationalFunction::from_polynomial(
        lp(2, {{1, {0, 0}}, {-1, {-1, 0}}}));
    return m;
}

} // namespace corpus_detail

// The sixteen embedded presentations: the thirteen knots, the concordant
// pair's genus-1 knot, the trefoil cylinder, and the genus-2 identity
// cylinder.
inline const std::vector<CorpusEntry>& corpus() {
    using corpus_detail::lp;
    using corpus_detail::pres;
    using corpus_detail::rf;
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;

        {
            CorpusEntry e;
            e.presentation = pres(
                "0057", 2, 4,
                {{"m1", "z1", "z2", "-z1"},
                 {"m2", "z1", "-z3", "z2", "-z1"},
                 {"m3", "z4", "z2", "-z3", "z4", "z2", "-z3", "z2", "-z1"},
                 {"m4", "z4"},
                 {"p1", "z2", "-z1"},
                 {"p2", "z4", "-z3", "z2"},
                 {"p3", "-z2", "z4", "z2", "-z3", "z2", "-z1", "z4", "-z3",
                  "z2"},
                 {"p4", "-z2", "z3"}});
            e.torsion_golden = lp(4, {{1, {-2, -5, 1, -1}},
                                      {1, {-2, -4, 1, -1}},
                                      {-1, {-2, -4, 1, 0}}});
            e.alexander_golden = {1, -2, 3, -2, 1};
            e.golden_torsion_trivial = false;
            e.golden_magnus_integral = false;
            e.magnus_entry_goldens.push_back(
                {0, 2,
                 rf(4, {{1, {0, 0, 0, 1}}},
                    {{1, {0, 0, 0, 0}}, {1, {0, 1, 0, 0}},
                     {-1, {0, 1, 0, 1}}})});
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0210", 3, 6,
                {{"m1", "-z3", "z4"},
                 {"m2", "-z3", "-z3", "z2"},
                 {"m3", "-z5", "-z3", "z2"},
                 {"m4", "-z2", "z1", "-z6", "z5", "-z6", "z5"},
                 {"m5", "-z5", "z6", "-z5", "z1", "-z6", "z5", "-z6", "z5"},
                 {"m6", "-z5", "z6", "-z5", "z1", "-z3", "z5", "-z6", "z5"},
                 {"p1", "z4"},
                 {"p2", "z4", "-z3", "z2", "-z3"},
                 {"p3", "-z6", "z2", "-z3"},
                 {"p4", "z5", "-z2", "z1", "-z6", "z5"},
                 {"p5", "-z5", "z6", "-z2", "z1", "-z6", "z5"},
                 {"p6", "-z5", "z6", "-z3", "z5", "-z6", "z5"}});
            e.torsion_golden = lp(6, {{-1, {5, -6, 3, -6, 4, 7}},
                                      {1, {6, -7, 4, -6, 4, 7}},
                                      {-1, {6, -7, 4, -6, 4, 8}}});
            e.alexander_golden = {1, -1, -1, 3, -1, -1, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0214", 3, 6,
                {{"m1", "z2", "-z3", "-z2"},
                 {"m2", "z2", "-z1", "z2"},
                 {"m3", "-z5", "-z1", "z2"},
                 {"m4", "-z6", "z1", "-z3", "z5"},
                 {"m5", "-z5", "z4", "-z3", "z1", "-z3", "z5"},
                 {"m6", "-z5", "z4"},
                 {"p1", "z2", "z2", "-z3", "-z2"},
                 {"p2", "z2", "z2", "-z6"},
                 {"p3", "-z1", "z2", "-z6"},
                 {"p4", "z5", "-z3", "z1"},
                 {"p5", "-z3", "z5", "-z3", "z1"},
                 {"p6", "-z3", "z4"}});
            e.torsion_golden = lp(6, {{1, {0, -1, 0, -2, 0, -1}},
                                      {-1, {1, -1, 0, -2, 0, -1}},
                                      {1, {1, -1, 0, -1, -1, -1}}});
            e.alexander_golden = {1, -1, -1, 3, -1, -1, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0258", 2, 7,
                {{"z1", "z2", "z3", "z4"},
                 {"z1", "z2", "z4", "-z6", "-z7"},
                 {"z7", "z6", "z5"},
                 {"m1", "z7", "z6", "-z7"},
                 {"m2", "z7", "z6", "-z5", "z4", "-z6", "-z7"},
                 {"m3", "z1", "z2", "z2", "z4", "z4", "-z6", "-z7"},
                 {"m4", "z1", "z2", "z2", "-z1", "-z1"},
                 {"p1", "-z7"},
                 {"p2", "z6", "z4"},
                 {"p3", "z2", "-z1", "z4"},
                 {"p4", "z2", "-z1", "-z1"}});
            e.torsion_golden = lp(4, {{-1, {-6, 5, -12, 7}},
                                      {1, {-7, 6, -13, 8}},
                                      {-1, {-7, 6, -14, 9}}});
            e.alexander_golden = {1, -4, 5, -4, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0279", 2, 9,
                {{"z1", "z2", "z4"},
                 {"z1", "-z3", "z2", "-z9"},
                 {"z5", "-z8", "-z6"},
                 {"z6", "z7", "z8", "z9"},
                 {"-z2", "z3", "z2", "-z5"},
                 {"m1", "z5", "z8", "z2", "-z9", "-z5"},
                 {"m2", "z5", "-z6", "-z5"},
                 {"m3", "-z9", "-z6", "-z5"},
                 {"m4", "-z2", "z3", "z1", "z2", "z2"},
                 {"p1", "z5", "z2", "-z9", "-z5"},
                 {"p2", "z5", "z9", "-z6"},
                 {"p3", "-z2", "-z6"},
                 {"p4", "-z2", "z1", "z2", "z2"}});
            e.torsion_golden = lp(4, {{-1, {0, -5, 2, 5}},
                                      {1, {-1, -5, 2, 5}},
                                      {1, {0, -5, 2, 6}}});
            e.alexander_golden = {1, -6, 11, -6, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0382", 2, 4,
                {{"m1", "z2", "-z1", "z3", "-z2"},
                 {"m2", "z2", "-z3", "z2", "-z1", "-z1", "z4", "-z2"},
                 {"m3", "-z4", "-z1", "z4", "-z2"},
                 {"m4", "z2", "z2", "-z1", "z4"},
                 {"p1", "z3", "-z2"},
                 {"p2", "z2", "-z1", "-z1", "z4", "-z1"},
                 {"p3", "-z1"},
                 {"p4", "z4", "z2", "-z1", "z4"}});
            e.torsion_golden = lp(4, {{1, {-1, -1, 0, -1}},
                                      {1, {-1, 0, -2, -1}},
                                      {-1, {-1, 0, -1, -1}}});
            e.alexander_golden = {1, -5, 7, -5, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0394", 2, 4,
                {{"m1", "-z1", "-z2", "z3"},
                 {"m2", "-z3", "z4", "z2", "z3", "-z2", "z1"},
                 {"m3", "z4", "z2", "z3", "-z2", "z1"},
                 {"m4", "z4"},
                 {"p1", "-z2", "z3"},
                 {"p2", "-z3", "z1", "-z3", "z4", "z2", "z3", "-z2"},
                 {"p3", "z2", "z3", "-z2"},
                 {"p4", "z2", "z4"}});
            e.torsion_golden = lp(4, {{1, {-1, -1, -2, -1}},
                                      {1, {-2, -1, -1, -1}},
                                      {-1, {-1, -1, -1, -1}}});
            e.alexander_golden = {1, -6, 11, -6, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0464", 2, 10,
                {{"z1", "z2", "z6", "z7"},
                 {"z2", "z9", "z7"},
                 {"z3", "z4", "z5", "-z10"},
                 {"z4", "z5", "z8"},
                 {"z1", "z2", "-z3", "-z2"},
                 {"z8", "z6", "-z8", "-z9"},
                 {"m1", "z2", "z10", "-z5", "-z9", "-z2"},
                 {"m2", "z2", "z10", "-z5", "-z3", "-z2"},
                 {"m3", "z2", "-z8", "-z2"},
                 {"m4", "z2", "z1"},
                 {"p1", "z2", "-z9", "-z2"},
                 {"p2", "z2", "-z5", "-z2"},
                 {"p3", "-z1", "-z8", "-z9", "-z2", "z1"},
                 {"p4", "-z1", "-z7", "z1"}});
            e.torsion_golden = lp(4, {{-1, {3, 0, -1, 3}},
                                      {-1, {2, 0, 0, 4}},
                                      {1, {3, 0, 0, 4}}});
            e.alexander_golden = {1, -4, 5, -4, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0483", 2, 9,
                {{"-z8", "z1", "z4", "z9", "-z4"},
                 {"z5", "z6", "-z7", "-z6", "z8"},
                 {"z2", "z3", "-z2", "z1"},
                 {"-z3", "z2", "z3", "-z5"},
                 {"z4", "-z9", "-z4", "z3"},
                 {"m1", "z1", "-z2", "-z1"},
                 {"m2", "z1", "-z4", "-z8"},
                 {"m3", "-z6"},
                 {"m4", "-z6", "z3"},
                 {"p1", "-z4", "-z2"},
                 {"p2", "-z4"},
                 {"p3", "z5", "-z6", "z8"},
                 {"p4", "-z8", "z3"}});
            e.torsion_golden = lp(4, {{1, {-1, 0, -1, -2}},
                                      {-1, {-2, 1, -1, -2}},
                                      {-1, {-1, 0, -1, -1}}});
            e.alexander_golden = {1, -4, 5, -4, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0535", 2, 10,
                {{"z1", "z2", "z3"},
                 {"z2", "z6", "-z7"},
                 {"-z10", "z4", "z5", "-z8", "z7"},
                 {"z1", "z10", "z9"},
                 {"z2", "z3", "-z2", "-z4"},
                 {"z2", "-z6", "-z2", "-z5"},
                 {"m1", "-z10"},
                 {"m2", "-z10", "-z1", "-z3", "-z1", "z10"},
                 {"m3", "-z7", "-z1", "z10"},
                 {"m4", "z6", "-z3", "z7"},
                 {"p1", "-z7", "z9"},
                 {"p2", "-z7", "-z1", "-z3", "z10", "z7"},
                 {"p3", "-z7", "z3", "z10", "z7"},
                 {"p4", "-z7", "z6", "-z3", "z7"}});
            e.torsion_golden = lp(4, {{-1, {-11, -6, -6, -15}},
                                      {1, {-10, -5, -6, -15}},
                                      {-1, {-10, -5, -6, -14}}});
            e.alexander_golden = {1, -7, 11, -7, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0650", 2, 11,
                {{"z2", "z3", "-z1", "z4", "z1"},
                 {"z2", "z6", "-z8", "-z6", "-z11"},
                 {"z1", "-z5", "-z1", "z4"},
                 {"z3", "z6", "-z9", "-z6"},
                 {"z9", "-z8", "z7", "z8"},
                 {"z8", "z7", "-z10", "-z7"},
                 {"z10", "-z6", "z11", "z6"},
                 {"m1", "z2", "-z6", "-z2"},
                 {"m2", "z2", "z7", "-z6", "-z2"},
                 {"m3", "z6", "z8", "-z6", "-z2"},
                 {"m4", "z2", "z3", "-z1"},
                 {"p1", "z11", "-z6", "-z2"},
                 {"p2", "z2", "-z3", "-z2"},
                 {"p3", "z1", "z6", "z8", "-z6"},
                 {"p4", "-z1"}});
            e.torsion_golden = lp(4, {{1, {-1, -3, -2, -2}},
                                      {-1, {-1, -3, -1, -1}},
                                      {1, {-1, -2, -1, -1}}});
            e.alexander_golden = {1, -4, 7, -4, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0801", 2, 9,
                {{"-z1", "z6", "z7", "-z8", "-z9"},
                 {"z3", "z4", "z9", "-z6"},
                 {"z2", "z4", "z5"},
                 {"z2", "z6", "-z7", "-z6"},
                 {"z2", "-z3", "-z2", "z1"},
                 {"m1", "z6", "z7", "-z8", "z6"},
                 {"m2", "z1", "z2", "z8", "-z7", "-z6"},
                 {"m3", "z9", "-z6", "-z2"},
                 {"m4", "-z5", "-z9", "-z5"},
                 {"p1", "z6", "z9"},
                 {"p2", "z6", "z2", "z6", "-z9", "-z6"},
                 {"p3", "z5", "z9", "-z6"},
                 {"p4", "z4", "-z9", "-z5"}});
            e.torsion_golden = lp(4, {{-1, {2, 0, 2, 1}},
                                      {1, {2, 1, 2, 1}},
                                      {-1, {2, 1, 3, 2}}});
            e.alexander_golden = {1, -5, 7, -5, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "0815", 2, 11,
                {{"z1", "z9", "z6"},
                 {"z1", "-z2", "-z4"},
                 {"z4", "-z11", "z5"},
                 {"-z10", "-z5", "z6", "z7", "z8"},
                 {"-z8", "-z6", "z9", "z6"},
                 {"-z7", "-z6", "z3", "z6"},
                 {"z4", "-z3", "-z4", "z10"},
                 {"m1", "z4", "-z3", "-z4"},
                 {"m2", "z4", "z11"},
                 {"m3", "z9"},
                 {"m4", "-z2", "-z9"},
                 {"p1", "-z2", "-z3", "-z4"},
                 {"p2", "z11", "z1"},
                 {"p3", "z9", "-z3", "z1"},
                 {"p4", "z9", "-z2", "-z9"}});
            e.torsion_golden = lp(4, {{-1, {3, 5, 0, -6}},
                                      {1, {2, 4, 0, -5}},
                                      {1, {3, 5, 0, -5}}});
            e.alexander_golden = {1, -2, 1, -2, 1};
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres(
                "concordance", 1, 9,
                {{"z1", "z2", "z3"},
                 {"z1", "z9", "z8"},
                 {"z4", "z5", "-z4", "-z2"},
                 {"-z4", "z5", "-z3", "-z5"},
                 {"z3", "z6", "-z3", "z4"},
                 {"z7", "z5", "z8", "-z5"},
                 {"-z7", "z9", "z7", "-z5"},
                 {"m1", "z1", "z7", "-z4", "z2", "-z5", "z3", "-z8", "z5"},
                 {"m2", "-z8", "z7", "-z4", "-z1"},
                 {"p1", "z7", "-z4", "z2", "-z5", "z3", "-z8", "z5"},
                 {"p2", "z7", "-z4", "-z1"}});
            e.torsion_golden = lp(2, {{3, {0, 0}},
                                      {-1, {-1, 0}},
                                      {-1, {1, 0}},
                                      {-1, {1, -1}},
                                      {1, {2, -1}},
                                      {1, {-2, 1}},
                                      {-1, {-1, 1}}});
            e.alexander_golden = {1, -1, 1};
            e.golden_torsion_trivial = false;
            e.golden_magnus_integral = true;
            e.magnus_golden = corpus_detail::trefoil_magnus();
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = pres("trefoil", 1, 3,
                                  {{"z1", "z2", "z3"},
                                   {"m1", "-z3"},
                                   {"m2", "-z3", "-z1"},
                                   {"p1", "z2"},
                                   {"p2", "-z1"}});
            e.torsion_golden = lp(2, {{1, {0, -1}}});
            e.alexander_golden = {1, -1, 1};
            e.golden_torsion_trivial = true;
            e.golden_magnus_integral = true;
            e.magnus_golden = corpus_detail::trefoil_magnus();
            v.push_back(std::move(e));
        }

        {
            CorpusEntry e;
            e.presentation = identity_cylinder(2);
            e.torsion_golden = lp(4, {{1, {0, 0, 0, 0}}});
            e.alexander_golden = {1, -4, 6, -4, 1};
            e.golden_torsion_trivial = true;
            e.golden_magnus_integral = true;
            e.magnus_golden = FieldMatrix::identity(4, 4);
            v.push_back(std::move(e));
        }

        return v;
    }();
    return entries;
}

inline const CorpusEntry* find_corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.presentation.name == name)
            return &e;
    return nullptr;
}

// Result of diffing one computed report against its golden values.
struct CorpusCheck {
    std::string name;
    bool pass = false;
    std::vector<std::string> failures;
    InvariantReport report;
};

inline CorpusCheck check_entry(const CorpusEntry& entry) {
    CorpusCheck out;
    out.name = entry.presentation.name;
    try {
        out.report = compute_report(entry.presentation);
    } catch (const Error& e) {
        out.failures.push_back(std::string("computation failed: ") +
                               e.what());
        return out;
    }
    const InvariantReport& rep = out.report;
    const std::size_t vars = static_cast<std::size_t>(2 * rep.genus);

    if (!equal_up_to_unit(rep.torsion_raw, entry.torsion_golden))
        out.failures.push_back("torsion determinant differs from the stored "
                               "value by more than a unit");

    AlexanderPolynomial golden_alex;
    for (long c : entry.alexander_golden)
        golden_alex.coefficients.push_back(Rational(c));
    if (!(rep.alexander == golden_alex))
        out.failures.push_back("alexander polynomial mismatch: computed " +
                               rep.alexander.text());
    if (!rep.alexander.palindromic_up_to_sign())
        out.failures.push_back("alexander polynomial is not palindromic");

    if (rep.fiberedness.torsion_trivial != entry.golden_torsion_trivial)
        out.failures.push_back("torsion triviality flag mismatch");
    if (entry.golden_magnus_integral &&
        rep.fiberedness.magnus_integral != *entry.golden_magnus_integral)
        out.failures.push_back("magnus integrality flag mismatch");

    if (entry.magnus_golden && !(rep.magnus == *entry.magnus_golden))
        out.failures.push_back("magnus matrix differs from the stored value");
    for (const auto& g : entry.magnus_entry_goldens)
        if (rep.magnus.at(g.row, g.col) != g.value)
            out.failures.push_back(
                "magnus entry (" + std::to_string(g.row + 1) + "," +
                std::to_string(g.col + 1) + ") mismatch: computed " +
                rep.magnus.at(g.row, g.col).text());

    // Convention cross-checks tying the twisted and untwisted levels.
    const std::vector<ExponentVector> to_one(vars, exp_zero(vars));
    const FieldMatrix magnus_at_one = rep.magnus.specialize(to_one, vars);
    for (std::size_t i = 0; i < vars; ++i)
        for (std::size_t j = 0; j < vars; ++j) {
            const RationalFunction expect = RationalFunction::constant(
                vars, Rational(static_cast<long>(
                          rep.monodromy.entries[i][j])));
            if (magnus_at_one.at(i, j) != expect) {
                out.failures.push_back("magnus matrix at gamma -> 1 does not "
                                       "equal the homological monodromy");
                i = vars;
                break;
            }
        }

    const Rational aug = augmentation(rep.torsion_raw);
    if (aug != 1 && aug != -1)
        out.failures.push_back(
            "torsion matrix specialized at gamma -> 1 has determinant " +
            to_string(aug) + ", expected +-1");

    out.pass = out.failures.empty();
    return out;
}

// Runs corpus entries, optionally restricted to one name, with at most
// TORSION_THREADS workers (default: hardware concurrency). Results come
// back in corpus order.
inline std::vector<CorpusCheck>
run_corpus(const std::string& only_name = std::string()) {
    std::vector<const CorpusEntry*> todo;
    for (const auto& e : corpus())
        if (only_name.empty() || e.presentation.name == only_name)
            todo.push_back(&e);

    std::size_t workers = std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 2;
    if (const char* env = std::getenv("TORSION_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1)
            workers = static_cast<std::size_t>(n);
    }
    workers = std::min(workers, todo.size());

    std::vector<CorpusCheck> results(todo.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < todo.size(); ++i)
            results[i] = check_entry(*todo[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= todo.size())
                    return;
                results[i] = check_entry(*todo[i]);
            }
        });
    for (auto& t : pool)
        t.join();
    return results;
}

} // namespace magnus
