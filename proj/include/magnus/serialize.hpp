#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "magnus/invariants.hpp"
#include "magnus/presentation.hpp"

namespace magnus {

using nlohmann::json;

namespace detail {

inline std::pair<int, int> line_column(const std::string& text,
                                       std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace detail

// Presentation file schema:
//   {"name": str, "genus": int, "z_count": int,
//    "relations": [["m1", "z2", "-p1", ...], ...]}
inline AdmissiblePresentation parse_presentation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = detail::line_column(text, e.byte);
        throw ParseError(std::string("malformed JSON: ") + e.what(), line,
                         col);
    }
    if (!doc.is_object())
        throw ParseError("presentation document must be a JSON object");
    for (const char* key : {"genus", "z_count", "relations"})
        if (!doc.contains(key))
            throw ParseError(std::string("missing field '") + key + "'");
    if (!doc["genus"].is_number_integer() ||
        !doc["z_count"].is_number_integer())
        throw ParseError("'genus' and 'z_count' must be integers");
    if (!doc["relations"].is_array())
        throw ParseError("'relations' must be an array of token lists");

    AdmissiblePresentation p;
    p.name = doc.value("name", std::string());
    p.genus = doc["genus"].get<int>();
    p.internal_count = doc["z_count"].get<int>();
    for (const auto& rel : doc["relations"]) {
        if (!rel.is_array())
            throw ParseError("each relation must be an array of tokens");
        Word w;
        for (const auto& tok : rel) {
            if (!tok.is_string())
                throw ParseError("relation tokens must be strings");
            w.push_back(parse_token(tok.get<std::string>()));
        }
        p.relations.push_back(std::move(w));
    }
    validate(p);
    return p;
}

inline AdmissiblePresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open presentation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
}

inline json presentation_to_json(const AdmissiblePresentation& p) {
    json rels = json::array();
    for (const Word& w : p.relations)
        rels.push_back(word_tokens(w));
    return json{{"name", p.name},
                {"genus", p.genus},
                {"z_count", p.internal_count},
                {"relations", rels}};
}

inline json exponent_to_json(const ExponentVector& e) {
    json a = json::array();
    for (auto x : e)
        a.push_back(x);
    return a;
}

inline json alexander_to_json(const AlexanderPolynomial& a) {
    json out = json::array();
    for (const auto& c : a.coefficients) {
        if (is_integer(c) && c.get_num().fits_slong_p())
            out.push_back(c.get_num().get_si());
        else
            out.push_back(to_string(c));
    }
    return out;
}

inline json report_to_json(const InvariantReport& rep) {
    json classes = json::object();
    for (int i = 1; i <= 2 * rep.genus; ++i)
        classes[generator_token(minus_gen(i))] =
            exponent_to_json(rep.classes.class_of(minus_gen(i)));
    for (int i = 1; i <= rep.internal_count; ++i)
        classes[generator_token(internal_gen(i))] =
            exponent_to_json(rep.classes.class_of(internal_gen(i)));
    for (int i = 1; i <= 2 * rep.genus; ++i)
        classes[generator_token(plus_gen(i))] =
            exponent_to_json(rep.classes.class_of(plus_gen(i)));

    json monodromy = json::array();
    for (const auto& row : rep.monodromy.entries)
        monodromy.push_back(row);

    json magnus = json::array();
    for (std::size_t i = 0; i < rep.magnus.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rep.magnus.cols(); ++j)
            row.push_back(
                json{{"num", rep.magnus.at(i, j).numerator().text()},
                     {"den", rep.magnus.at(i, j).denominator().text()}});
        magnus.push_back(row);
    }

    return json{
        {"name", rep.name},
        {"genus", rep.genus},
        {"z_count", rep.internal_count},
        {"homology_classes", classes},
        {"monodromy", monodromy},
        {"torsion_det",
         json{{"unit", rep.torsion.unit.text()},
              {"normal", rep.torsion.normal.text()}}},
        {"magnus", magnus},
        {"alexander", alexander_to_json(rep.alexander)},
        {"verdict",
         json{{"torsion_trivial", rep.fiberedness.torsion_trivial},
              {"magnus_integral", rep.fiberedness.magnus_integral},
              {"verdict", to_string(rep.fiberedness.verdict())}}}};
}

inline json verdict_to_json(const FiberednessVerdict& v) {
    return json{{"torsion_trivial", v.torsion_trivial},
                {"magnus_integral", v.magnus_integral},
                {"verdict", to_string(v.verdict())}};
}

} // namespace magnus
