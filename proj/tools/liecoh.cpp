#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liecoh/liecoh.hpp"

namespace {

enum Exit { ok = 0, input_error = 1, usage_error = 2 };

std::vector<liecoh::Rational> parse_samples(const std::string& text) {
    std::vector<liecoh::Rational> out;
    std::stringstream items(text);
    for (std::string item; std::getline(items, item, ',');) out.push_back(liecoh::parse_rational(item));
    if (out.empty()) throw liecoh::invalid_input("empty sample list");
    return out;
}

int emit(const liecoh::Report& r, bool as_json) {
    std::cout << (as_json ? r.json_text() : r.text);
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lie algebra cohomology, rigidity classes and deformation audits.\n"
                 "SOURCE is an algebra/family file or catalog:<key>."};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print the JSON report instead of text");

    std::string source, coefficients = "trivial:1", subalgebra, samples = "1,1/2,-1,2", claim, key, out_path;
    std::optional<std::size_t> degree;
    bool representatives = false;

    auto* check = app.add_subcommand("check", "Jacobi status, series, center, nilpotency index");
    check->add_option("source", source, "Algebra file")->required();

    auto* coh = app.add_subcommand("cohomology", "Dimensions of H^p(g, V)");
    coh->add_option("source", source, "Algebra file")->required();
    coh->add_option("--degree", degree, "Single degree p");
    coh->add_option("--coefficients", coefficients, "trivial:m | adjoint | abelianization")->capture_default_str();
    coh->add_flag("--representatives", representatives, "List class representatives in the cochain layout");

    auto* cls = app.add_subcommand("classify", "Rigidity class from H^2(g, g/[g,g])");
    cls->add_option("source", source, "Algebra file")->required();

    auto* pair = app.add_subcommand("pair", "Long exact sequence of a pair (g, h)");
    pair->add_option("source", source, "Algebra file")->required();
    pair->add_option("--subalgebra", subalgebra, "Indices i,j,... (1-based) or vectors (a,b,..),(c,d,..)")->required();
    std::string pair_coefficients = "abelianization";
    pair->add_option("--coefficients", pair_coefficients, "trivial:m | adjoint | abelianization")
        ->capture_default_str();

    auto* deform = app.add_subcommand("deform", "Audit a one-parameter family");
    deform->add_option("source", source, "Family file")->required();
    deform->add_option("--samples", samples, "Comma-separated rationals, e.g. --samples=1,1/2,-1")
        ->capture_default_str();
    deform->add_option("--claim", claim, "nilpotent[(k)] | solvable-non-nilpotent[(l)] | non-solvable");

    auto* audit = app.add_subcommand("audit-table1", "Computed H^2(g, g/[g,g]) against the claimed table");

    auto* em = app.add_subcommand("emit", "Write a catalog entry in the file grammar");
    em->add_option("key", key, "Catalog key, e.g. h5, heisenberg(3), family:n4_t")->required();
    em->add_option("out", out_path, "Output path, '-' for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*check) return emit(liecoh::cmd_check(source), as_json);
        if (*coh) return emit(liecoh::cmd_cohomology(source, degree, coefficients, representatives), as_json);
        if (*cls) return emit(liecoh::cmd_classify(source), as_json);
        if (*pair) return emit(liecoh::cmd_pair(source, subalgebra, pair_coefficients), as_json);
        if (*deform) {
            const auto c = deform->count("--claim") ? std::optional<std::string>(claim) : std::nullopt;
            return emit(liecoh::cmd_deform(source, parse_samples(samples), c), as_json);
        }
        if (*audit) return emit(liecoh::cmd_audit_table1(), as_json);
        if (*em) return emit(liecoh::cmd_emit(key, out_path), as_json);
    } catch (const liecoh::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    return usage_error;
}
