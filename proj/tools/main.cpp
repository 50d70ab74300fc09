// Command-line front end: one subcommand per generating-function formula,
// plus the brute-force oracles for ad-hoc cross-checking.
//
// Exit codes: 0 success, 2 unparseable input, 3 validation failure,
// 4 integrality failure, 1 anything else (including --check mismatches).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "confchi/combinatorics.hpp"
#include "confchi/equivariant.hpp"
#include "confchi/errors.hpp"
#include "confchi/formulas.hpp"
#include "confchi/json_io.hpp"
#include "confchi/oracle.hpp"
#include "confchi/series.hpp"

using nlohmann::json;

namespace {

struct SeriesOptions {
    std::string input_path;
    int order = 10;
    std::string format = "table";
    bool check = false;
};

json load_json(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return json::parse(buffer.str());
    }
    std::ifstream in(path);
    if (!in) {
        throw confchi::ParseError("cannot open input file '" + path + "'");
    }
    return json::parse(in);
}

std::string render_series(const confchi::EgfSeries& e, const std::string& format) {
    if (format == "json") {
        return confchi::series_to_json(e).dump() + "\n";
    }
    if (format == "series") {
        return confchi::to_pretty_string(e) + "\n";
    }
    std::string out = "n\tc_n\tchi\n";
    for (int n = 0; n <= e.order(); ++n) {
        out += std::to_string(n) + "\t" + confchi::format_rational(e.coeff(n)) + "\t" +
               confchi::chi_coefficient(e, n).str() + "\n";
    }
    return out;
}

// Redundant evaluation route for the stratified product: negative exponents
// go through an explicit series inversion instead of the generalized
// binomial expansion.
confchi::EgfSeries theorem_via_inverse(const confchi::StratifiedSpace& space, int order) {
    confchi::EgfSeries acc = confchi::EgfSeries::one(order);
    for (const confchi::Stratum& s : space.strata) {
        if (s.chi_c >= 0) {
            acc = acc * confchi::binomial_series(*s.sheaf_rank, s.chi_c, order);
        } else {
            acc = acc * confchi::inverse(
                            confchi::binomial_series(*s.sheaf_rank, -s.chi_c, order));
        }
    }
    return acc;
}

struct CheckReport {
    bool ok = true;
    std::vector<std::string> lines;

    void record(const std::string& what, bool passed) {
        ok = ok && passed;
        lines.emplace_back(std::string("check: ") + what + (passed ? ": agree" : ": MISMATCH"));
    }
};

void attach_series_options(CLI::App* cmd, SeriesOptions& opts, bool needs_input) {
    if (needs_input) {
        cmd->add_option("input", opts.input_path, "input JSON file, or - for stdin")
            ->required();
    }
    cmd->add_option("--order", opts.order, "truncation order")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "json", "series"}))
        ->capture_default_str();
    cmd->add_flag("--check", opts.check, "also run the matching oracle and report agreement");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "confchi: exponential generating functions for Euler characteristics of\n"
        "configuration spaces on stratified spaces, in exact rational arithmetic"};
    app.require_subcommand(1);

    SeriesOptions theorem_opts;
    auto* cmd_theorem = app.add_subcommand(
        "egf-theorem",
        "product over strata of (1 + sheaf_rank*t)^chi_c from a stratified-space JSON");
    attach_series_options(cmd_theorem, theorem_opts, true);

    SeriesOptions corollary_opts;
    auto* cmd_corollary = app.add_subcommand(
        "egf-corollary",
        "EGF of chi(F(X,n)) via dualizing ranks from a stratified-space JSON");
    attach_series_options(cmd_corollary, corollary_opts, true);

    SeriesOptions gal_opts;
    auto* cmd_gal = app.add_subcommand(
        "gal", "cell-by-cell EGF of chi(F(X,n)) from a simplicial-complex JSON");
    attach_series_options(cmd_gal, gal_opts, true);

    SeriesOptions getzler_opts;
    std::int64_t getzler_chi = 0;
    auto* cmd_getzler =
        app.add_subcommand("getzler", "(1+t)^chi_c, the compactly supported EGF");
    cmd_getzler->add_option("--chi-c", getzler_chi, "compactly supported Euler characteristic")
        ->required();
    attach_series_options(cmd_getzler, getzler_opts, false);

    SeriesOptions manifold_opts;
    std::int64_t manifold_chi = 0;
    std::string manifold_parity;
    auto* cmd_manifold = app.add_subcommand("manifold", "EGF of chi(F(M,n)) for a manifold");
    cmd_manifold->add_option("--chi", manifold_chi, "Euler characteristic of the manifold")
        ->required();
    cmd_manifold->add_option("--parity", manifold_parity, "parity of dim(M)")
        ->check(CLI::IsMember({"even", "odd"}))
        ->required();
    attach_series_options(cmd_manifold, manifold_opts, false);

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force cross-checks");
    cmd_oracle->require_subcommand(1);
    std::int64_t oracle_chi = 0;
    int oracle_k = 0;
    int oracle_n = 0;
    int oracle_m = 0;
    auto* cmd_inversion = cmd_oracle->add_subcommand(
        "inversion", "chi_c(F(X,k)) by signed-Stirling inversion from chi_c(X)");
    cmd_inversion->add_option("--chi-c", oracle_chi)->required();
    cmd_inversion->add_option("--k", oracle_k)->check(CLI::NonNegativeNumber)->required();
    auto* cmd_diagonal = cmd_oracle->add_subcommand(
        "diagonal", "check chi_c(X)^n against the sum over set partitions");
    cmd_diagonal->add_option("--chi-c", oracle_chi)->required();
    cmd_diagonal->add_option("--n", oracle_n)->required();
    auto* cmd_injections =
        cmd_oracle->add_subcommand("injections", "count injective maps {1..n} -> {1..m}");
    cmd_injections->add_option("--m", oracle_m)->required();
    cmd_injections->add_option("--n", oracle_n)->required();

    auto* cmd_equivariant = app.add_subcommand(
        "equivariant",
        "S_n-equivariant characteristic as a multiple of the regular representation");
    std::string equivariant_input;
    std::int64_t equivariant_chi_f = 0;
    int equivariant_n = 0;
    cmd_equivariant->add_option("--n", equivariant_n, "number of points")
        ->check(CLI::PositiveNumber)
        ->required();
    auto* opt_chi_f =
        cmd_equivariant->add_option("--chi-f", equivariant_chi_f, "chi(F(X,n)) directly");
    cmd_equivariant
        ->add_option("input", equivariant_input,
                     "stratified-space JSON; chi(F(X,n)) is computed from it")
        ->excludes(opt_chi_f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        std::string output;
        CheckReport report;

        if (cmd_theorem->parsed()) {
            const auto space = confchi::space_from_json(load_json(theorem_opts.input_path));
            const auto e = confchi::egf_theorem(space, theorem_opts.order);
            if (theorem_opts.check) {
                report.record("inverse-path recomputation",
                              theorem_via_inverse(space, theorem_opts.order) == e);
            }
            output = render_series(e, theorem_opts.format);
        } else if (cmd_corollary->parsed()) {
            const auto space = confchi::space_from_json(load_json(corollary_opts.input_path));
            const auto e = confchi::egf_corollary(space, corollary_opts.order);
            if (corollary_opts.check) {
                confchi::StratifiedSpace dualized = space;
                for (confchi::Stratum& s : dualized.strata) {
                    s.sheaf_rank = confchi::dualizing_rank(s);
                }
                report.record("inverse-path recomputation",
                              theorem_via_inverse(dualized, corollary_opts.order) == e);
                bool divisible = true;
                for (int n = 1; n <= e.order(); ++n) {
                    divisible = divisible &&
                                confchi::chi_coefficient(e, n) % confchi::factorial(n) == 0;
                }
                report.record("n! divides chi(F(X,n))", divisible);
            }
            output = render_series(e, corollary_opts.format);
        } else if (cmd_gal->parsed()) {
            const auto X = confchi::complex_from_json(load_json(gal_opts.input_path));
            const auto e = confchi::egf_gal(X, gal_opts.order);
            if (gal_opts.check) {
                report.record(
                    "dualizing route on the cell stratification",
                    confchi::egf_corollary(confchi::cell_stratification(X), gal_opts.order) ==
                        e);
            }
            output = render_series(e, gal_opts.format);
        } else if (cmd_getzler->parsed()) {
            const auto e = confchi::egf_getzler(getzler_chi, getzler_opts.order);
            if (getzler_opts.check) {
                bool agree = true;
                for (int k = 0; k <= e.order(); ++k) {
                    agree = agree && confchi::chi_config_by_inversion(getzler_chi, k) ==
                                         confchi::chi_coefficient(e, k);
                }
                report.record("signed-Stirling inversion", agree);
            }
            output = render_series(e, getzler_opts.format);
        } else if (cmd_manifold->parsed()) {
            const auto parity =
                manifold_parity == "even" ? confchi::Parity::even : confchi::Parity::odd;
            const auto e = confchi::egf_manifold(manifold_chi, parity, manifold_opts.order);
            if (manifold_opts.check) {
                bool agree = true;
                for (int n = 0; n <= e.order(); ++n) {
                    agree = agree && confchi::manifold_chi_product(manifold_chi, parity, n) ==
                                         confchi::chi_coefficient(e, n);
                }
                report.record("characteristic product form", agree);
            }
            output = render_series(e, manifold_opts.format);
        } else if (cmd_oracle->parsed()) {
            if (cmd_inversion->parsed()) {
                output = confchi::chi_config_by_inversion(oracle_chi, oracle_k).str() + "\n";
            } else if (cmd_diagonal->parsed()) {
                const bool holds = confchi::diagonal_identity_check(oracle_chi, oracle_n);
                output = holds ? "true\n" : "false\n";
                report.ok = holds;
            } else {
                output = confchi::count_injections(oracle_m, oracle_n).str() + "\n";
            }
        } else if (cmd_equivariant->parsed()) {
            confchi::BigInt chi_f = equivariant_chi_f;
            if (!equivariant_input.empty()) {
                const auto space = confchi::space_from_json(load_json(equivariant_input));
                const auto e = confchi::egf_corollary(space, equivariant_n);
                chi_f = confchi::chi_coefficient(e, equivariant_n);
            } else if (opt_chi_f->count() == 0) {
                throw confchi::ParseError("equivariant needs either --chi-f or an input file");
            }
            const auto ec = confchi::equivariant_character(chi_f, equivariant_n);
            output = confchi::equivariant_to_json(ec).dump() + "\n";
        }

        std::fputs(output.c_str(), stdout);
        for (const std::string& line : report.lines) {
            std::fprintf(stderr, "%s\n", line.c_str());
        }
        return report.ok ? 0 : 1;
    } catch (const json::parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const confchi::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const confchi::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const confchi::IntegralityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
