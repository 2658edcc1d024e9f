#pragma once

#include <string>
#include <vector>

#include "magnus/homology.hpp"
#include "magnus/presentation.hpp"

namespace magnus {

// Endomorphism of the free group on the 2g surface generators, given by
// the image word of each generator. Images are written in upper-boundary
// letters (the surface generators of the mapping cylinder's top face).
struct FreeEndomorphism {
    int genus = 0;
    std::vector<Word> images; // size 2g, words in plus-letters

    // Exponent-sum matrix: column j is the abelianization of images[j].
    std::vector<std::vector<std::int64_t>> abelianized() const {
        const std::size_t n = static_cast<std::size_t>(2 * genus);
        std::vector<std::vector<std::int64_t>> m(
            n, std::vector<std::int64_t>(n, 0));
        for (std::size_t j = 0; j < n; ++j)
            for (const Letter& l : images[j]) {
                if (l.gen.cls != GeneratorClass::Plus || l.gen.index < 1 ||
                    l.gen.index > 2 * genus)
                    throw IndexError("endomorphism image must use the 2g "
                                     "surface letters");
                m[static_cast<std::size_t>(l.gen.index - 1)][j] += l.sign;
            }
        return m;
    }
};

// The unit of the monoid: l = 0 and relations m_j p_j^{-1}.
inline AdmissiblePresentation identity_cylinder(int genus) {
    if (genus < 1)
        throw AdmissibilityError("genus must be at least 1");
    AdmissiblePresentation p;
    p.name = "identity" + std::to_string(genus);
    p.genus = genus;
    p.internal_count = 0;
    for (int j = 1; j <= 2 * genus; ++j)
        p.relations.push_back(
            {{minus_gen(j), +1}, {plus_gen(j), -1}});
    return p;
}

// Mapping cylinder of an endomorphism: l = 0 and relations
// m_j * (image of generator j)^{-1}.
inline AdmissiblePresentation mapping_cylinder(const FreeEndomorphism& phi) {
    if (phi.genus < 1)
        throw AdmissibilityError("genus must be at least 1");
    if (phi.images.size() != static_cast<std::size_t>(2 * phi.genus))
        throw DimensionError("endomorphism needs exactly 2g image words");
    const auto m = phi.abelianized();
    std::vector<std::vector<Integer>> mi(m.size(),
                                         std::vector<Integer>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            mi[i][j] = m[i][j];
    const Integer d = integer_determinant(std::move(mi));
    if (d != 1 && d != -1)
        throw NotHomologyCylinderError(
            "endomorphism abelianization is not unimodular (det = " +
            d.get_str() + ")");

    AdmissiblePresentation p;
    p.name = "cylinder";
    p.genus = phi.genus;
    p.internal_count = 0;
    for (int j = 1; j <= 2 * phi.genus; ++j) {
        Word r{{minus_gen(j), +1}};
        const Word inv = inverse(phi.images[static_cast<std::size_t>(j - 1)]);
        r.insert(r.end(), inv.begin(), inv.end());
        p.relations.push_back(std::move(r));
    }
    return p;
}

// Monoid product: glues the lower face of `left` to the upper face of
// `right`. The result keeps `left`'s upper generators and `right`'s lower
// generators; everything else becomes internal, with 2g identification
// relations equating right's upper generator k with left's lower
// generator k.
inline AdmissiblePresentation compose(const AdmissiblePresentation& left,
                                      const AdmissiblePresentation& right) {
    if (left.genus != right.genus)
        throw DimensionError("composition of cylinders of different genus");
    const int g2 = 2 * left.genus;
    const int lp = left.internal_count;
    const int lq = right.internal_count;

    // Internal block layout: left minus (2g), left internal (lp),
    // right internal (lq), right plus (2g).
    const int off_left_minus = 0;
    const int off_left_internal = g2;
    const int off_right_internal = g2 + lp;
    const int off_right_plus = g2 + lp + lq;

    auto map_left = [&](const GeneratorRef& g) -> GeneratorRef {
        switch (g.cls) {
        case GeneratorClass::Minus:
            return internal_gen(off_left_minus + g.index);
        case GeneratorClass::Internal:
            return internal_gen(off_left_internal + g.index);
        case GeneratorClass::Plus:
        default:
            return plus_gen(g.index);
        }
    };
    auto map_right = [&](const GeneratorRef& g) -> GeneratorRef {
        switch (g.cls) {
        case GeneratorClass::Minus:
            return minus_gen(g.index);
        case GeneratorClass::Internal:
            return internal_gen(off_right_internal + g.index);
        case GeneratorClass::Plus:
        default:
            return internal_gen(off_right_plus + g.index);
        }
    };

    AdmissiblePresentation p;
    p.name = left.name.empty() || right.name.empty()
                 ? "composed"
                 : left.name + "*" + right.name;
    p.genus = left.genus;
    p.internal_count = 2 * g2 + lp + lq;
    for (const Word& r : left.relations) {
        Word w;
        w.reserve(r.size());
        for (const Letter& l : r)
            w.push_back({map_left(l.gen), l.sign});
        p.relations.push_back(std::move(w));
    }
    for (const Word& r : right.relations) {
        Word w;
        w.reserve(r.size());
        for (const Letter& l : r)
            w.push_back({map_right(l.gen), l.sign});
        p.relations.push_back(std::move(w));
    }
    for (int k = 1; k <= g2; ++k)
        p.relations.push_back({{internal_gen(off_right_plus + k), +1},
                               {internal_gen(off_left_minus + k), -1}});
    return p;
}

} // namespace magnus
