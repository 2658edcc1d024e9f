#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "magnus/word.hpp"

namespace magnus {

// Marked group presentation of deficiency 2g: generators ordered as the 2g
// lower-boundary generators, l internal generators and 2g upper-boundary
// generators, with 2g + l relator words.
struct AdmissiblePresentation {
    std::string name;
    int genus = 0;
    int internal_count = 0;
    std::vector<Word> relations;

    std::size_t generator_count() const {
        return static_cast<std::size_t>(4 * genus + internal_count);
    }

    // Global generator order: Minus, Internal, Plus (0-based).
    std::size_t global_index(const GeneratorRef& g) const {
        switch (g.cls) {
        case GeneratorClass::Minus:
            return static_cast<std::size_t>(g.index - 1);
        case GeneratorClass::Internal:
            return static_cast<std::size_t>(2 * genus + g.index - 1);
        case GeneratorClass::Plus:
        default:
            return static_cast<std::size_t>(2 * genus + internal_count +
                                            g.index - 1);
        }
    }

    GeneratorRef generator_at(std::size_t global) const {
        const int g2 = 2 * genus;
        if (global < static_cast<std::size_t>(g2))
            return minus_gen(static_cast<int>(global) + 1);
        if (global < static_cast<std::size_t>(g2 + internal_count))
            return internal_gen(static_cast<int>(global) - g2 + 1);
        return plus_gen(static_cast<int>(global) - g2 - internal_count + 1);
    }

    bool in_range(const GeneratorRef& g) const {
        if (g.index < 1)
            return false;
        if (g.cls == GeneratorClass::Internal)
            return g.index <= internal_count;
        return g.index <= 2 * genus;
    }
};

// Structural check: deficiency-2g relation count and in-range generator
// references. Returns its argument on success.
inline const AdmissiblePresentation&
validate(const AdmissiblePresentation& p) {
    if (p.genus < 1)
        throw AdmissibilityError("genus must be at least 1");
    if (p.internal_count < 0)
        throw AdmissibilityError("internal generator count must be >= 0");
    const std::size_t expected =
        static_cast<std::size_t>(2 * p.genus + p.internal_count);
    if (p.relations.size() != expected)
        throw AdmissibilityError(
            "expected " + std::to_string(expected) + " relations, got " +
            std::to_string(p.relations.size()));
    for (std::size_t j = 0; j < p.relations.size(); ++j)
        for (const Letter& l : p.relations[j]) {
            if (l.sign != 1 && l.sign != -1)
                throw AdmissibilityError("letter sign must be +1 or -1");
            if (!p.in_range(l.gen))
                throw IndexError("generator " + generator_token(l.gen) +
                                 " out of range in relation " +
                                 std::to_string(j + 1));
        }
    return p;
}

} // namespace magnus
