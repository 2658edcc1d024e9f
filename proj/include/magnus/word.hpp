#pragma once

#include <string>
#include <vector>

#include "magnus/errors.hpp"

namespace magnus {

// The three generator families of an admissible presentation, in their
// global order: the 2g lower-boundary generators, the l internal
// generators, the 2g upper-boundary generators.
enum class GeneratorClass { Minus, Internal, Plus };

struct GeneratorRef {
    GeneratorClass cls;
    int index; // 1-based within the class

    friend bool operator==(const GeneratorRef& a, const GeneratorRef& b) {
        return a.cls == b.cls && a.index == b.index;
    }
    friend bool operator!=(const GeneratorRef& a, const GeneratorRef& b) {
        return !(a == b);
    }
};

inline GeneratorRef minus_gen(int index) {
    return {GeneratorClass::Minus, index};
}
inline GeneratorRef internal_gen(int index) {
    return {GeneratorClass::Internal, index};
}
inline GeneratorRef plus_gen(int index) {
    return {GeneratorClass::Plus, index};
}

struct Letter {
    GeneratorRef gen;
    int sign; // +1 or -1

    Letter inverse() const { return {gen, -sign}; }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.sign == b.sign;
    }
};

// A word in the free group on the presentation's generators. Stored
// verbatim; no free reduction is performed.
using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back(it->inverse());
    return r;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Token syntax: m<k>, z<k>, p<k>, with prefix '-' for an inverse letter.
inline Letter parse_token(const std::string& token) {
    std::string t = token;
    int sign = 1;
    if (!t.empty() && t[0] == '-') {
        sign = -1;
        t = t.substr(1);
    }
    if (t.size() < 2)
        throw TokenError("unrecognized generator token '" + token + "'");
    GeneratorClass cls;
    switch (t[0]) {
    case 'm':
        cls = GeneratorClass::Minus;
        break;
    case 'z':
        cls = GeneratorClass::Internal;
        break;
    case 'p':
        cls = GeneratorClass::Plus;
        break;
    default:
        throw TokenError("unrecognized generator token '" + token + "'");
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9')
            throw TokenError("unrecognized generator token '" + token + "'");
    long idx = 0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        idx = idx * 10 + (t[i] - '0');
        if (idx > 1000000)
            throw TokenError("generator index too large in '" + token + "'");
    }
    if (idx < 1)
        throw TokenError("unrecognized generator token '" + token + "'");
    return {{cls, static_cast<int>(idx)}, sign};
}

inline std::string generator_token(const GeneratorRef& g) {
    char c = 'z';
    if (g.cls == GeneratorClass::Minus)
        c = 'm';
    else if (g.cls == GeneratorClass::Plus)
        c = 'p';
    return std::string(1, c) + std::to_string(g.index);
}

inline std::string letter_token(const Letter& l) {
    return (l.sign < 0 ? "-" : "") + generator_token(l.gen);
}

inline Word parse_word(const std::vector<std::string>& tokens) {
    Word w;
    w.reserve(tokens.size());
    for (const auto& t : tokens)
        w.push_back(parse_token(t));
    return w;
}

inline std::vector<std::string> word_tokens(const Word& w) {
    std::vector<std::string> r;
    r.reserve(w.size());
    for (const auto& l : w)
        r.push_back(letter_token(l));
    return r;
}

} // namespace magnus
