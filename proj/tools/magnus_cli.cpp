// Command-line front end: computes torsion, Magnus matrix, homological
// monodromy, Alexander polynomial and fibering verdicts from admissible
// presentation files, and replays the embedded corpus against its stored
// golden values.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "magnus/magnus.hpp"
#include "magnus/serialize.hpp"

namespace {

using namespace magnus;

void print_matrix(std::ostream& out, const FieldMatrix& m,
                  const std::string& label) {
    out << label << " (" << m.rows() << "x" << m.cols() << "):\n";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << "  (" << (i + 1) << "," << (j + 1)
                << ") = " << m.at(i, j).text() << "\n";
}

void print_report(std::ostream& out, const InvariantReport& rep) {
    out << "presentation " << (rep.name.empty() ? "(unnamed)" : rep.name)
        << ": genus " << rep.genus << ", " << rep.internal_count
        << " internal generators\n";
    out << "homology classes:\n";
    for (int i = 1; i <= 2 * rep.genus; ++i) {
        LaurentPolynomial mono = LaurentPolynomial::monomial(
            static_cast<std::size_t>(2 * rep.genus), 1,
            rep.classes.class_of(minus_gen(i)));
        out << "  m" << i << " -> " << mono.text() << "\n";
    }
    for (int i = 1; i <= rep.internal_count; ++i) {
        LaurentPolynomial mono = LaurentPolynomial::monomial(
            static_cast<std::size_t>(2 * rep.genus), 1,
            rep.classes.class_of(internal_gen(i)));
        out << "  z" << i << " -> " << mono.text() << "\n";
    }
    out << "homological monodromy:\n";
    for (const auto& row : rep.monodromy.entries) {
        out << "  [";
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << "]\n";
    }
    out << "torsion determinant = " << rep.torsion_raw.text() << "\n";
    out << "  unit   = " << rep.torsion.unit.text() << "\n";
    out << "  normal = " << rep.torsion.normal.text() << "\n";
    print_matrix(out, rep.magnus, "magnus matrix");
    out << "alexander polynomial = " << rep.alexander.text()
        << (rep.alexander.palindromic_up_to_sign() ? "" :
            "  [warning: not palindromic]")
        << "\n";
    out << "verdict: " << to_string(rep.fiberedness.verdict())
        << " (torsion trivial: "
        << (rep.fiberedness.torsion_trivial ? "yes" : "no")
        << ", magnus integral: "
        << (rep.fiberedness.magnus_integral ? "yes" : "no") << ")\n";
}

int cmd_compute(const std::string& file, bool as_json) {
    const InvariantReport rep = compute_report(load_presentation(file));
    if (as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        print_report(std::cout, rep);
    return 0;
}

int cmd_fiberedness(const std::string& file, bool as_json) {
    const FiberednessVerdict v = fiberedness_report(load_presentation(file));
    if (as_json)
        std::cout << verdict_to_json(v).dump(2) << "\n";
    else
        std::cout << to_string(v.verdict()) << " (torsion trivial: "
                  << (v.torsion_trivial ? "yes" : "no")
                  << ", magnus integral: "
                  << (v.magnus_integral ? "yes" : "no") << ")\n";
    return 0;
}

int cmd_alexander(const std::string& file, bool as_json) {
    const AdmissiblePresentation p = load_presentation(file);
    const AlexanderPolynomial a =
        alexander_polynomial(homological_monodromy(p));
    if (as_json)
        std::cout << json{{"alexander", alexander_to_json(a)}}.dump(2)
                  << "\n";
    else
        std::cout << a.text() << "\n";
    return 0;
}

int cmd_corpus(const std::string& name, bool as_json) {
    const std::vector<CorpusCheck> checks = run_corpus(name);
    if (!name.empty() && checks.empty()) {
        std::cerr << "no corpus entry named '" << name << "'\n";
        return 1;
    }
    bool all_pass = true;
    if (as_json) {
        json out = json::array();
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            json item{{"name", c.name}, {"pass", c.pass}};
            if (!c.failures.empty())
                item["failures"] = c.failures;
            if (c.pass)
                item["report"] = report_to_json(c.report);
            out.push_back(std::move(item));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL");
            if (c.pass)
                std::cout << "  torsion = " << c.report.torsion_raw.text()
                          << "  [" << to_string(c.report.fiberedness.verdict())
                          << "]";
            std::cout << "\n";
            for (const auto& f : c.failures)
                std::cout << "    " << f << "\n";
        }
        std::cout << (all_pass ? "all entries match the stored values\n"
                               : "golden-value mismatch\n");
    }
    return all_pass ? 0 : 2;
}

int cmd_compose(const std::string& file_a, const std::string& file_b,
                const std::string& out_path, bool as_json) {
    const AdmissiblePresentation product =
        compose(load_presentation(file_a), load_presentation(file_b));
    const json doc = presentation_to_json(product);
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write '" << out_path << "'\n";
        return 1;
    }
    out << doc.dump(2) << "\n";
    if (as_json)
        std::cout << json{{"written", out_path},
                          {"genus", product.genus},
                          {"z_count", product.internal_count}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "wrote " << out_path << " (genus " << product.genus
                  << ", " << product.internal_count
                  << " internal generators)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of homology cylinders from admissible "
                 "presentations: torsion, Magnus matrix, homological "
                 "monodromy, Alexander polynomial, fibering obstructions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string file, file_b, out_path, name;

    auto* compute = app.add_subcommand("compute",
                                       "full invariant report for a "
                                       "presentation file");
    compute->add_option("file", file, "presentation JSON file")->required();

    auto* corpus_cmd = app.add_subcommand("corpus",
                                          "run embedded presentations "
                                          "against stored golden values");
    corpus_cmd->add_option("--name", name, "run a single entry");

    auto* fib = app.add_subcommand("fiberedness",
                                   "fibering-obstruction verdict only");
    fib->add_option("file", file, "presentation JSON file")->required();

    auto* alex = app.add_subcommand("alexander",
                                    "Alexander polynomial only");
    alex->add_option("file", file, "presentation JSON file")->required();

    auto* comp = app.add_subcommand("compose",
                                    "monoid product of two presentations");
    comp->add_option("fileA", file, "left factor")->required();
    comp->add_option("fileB", file_b, "right factor")->required();
    comp->add_option("-o,--output", out_path, "output file (stdout when "
                                              "omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(compute))
            return cmd_compute(file, as_json);
        if (app.got_subcommand(corpus_cmd))
            return cmd_corpus(name, as_json);
        if (app.got_subcommand(fib))
            return cmd_fiberedness(file, as_json);
        if (app.got_subcommand(alex))
            return cmd_alexander(file, as_json);
        if (app.got_subcommand(comp))
            return cmd_compose(file, file_b, out_path, as_json);
    } catch (const magnus::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
