// Command-line front end: single checks, the full sweep, raw partition counts,
// and series expansion for inspection.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "qgordon/construction_checks.hpp"
#include "qgordon/identity_checks.hpp"
#include "qgordon/sweep.hpp"

using namespace qgordon;

namespace {

int finish(const std::vector<CheckReport>& reports, const SuiteConfig& cfg) {
    if (cfg.output == SuiteConfig::Output::Json)
        std::cout << render_json(reports, cfg);
    else
        std::cout << render_text(reports, cfg);
    return exit_code(reports);
}

ProductVariant parse_variant(const std::string& v) {
    if (v == "even") return ProductVariant::Even;
    if (v == "odd" || v == "odd-overline") return ProductVariant::OddOverline;
    throw ParamDomain("unknown variant '" + v + "' (expected even or odd)");
}

int run_verify(const std::string& check, const GordonParams& p, const std::string& variant,
               long order, long xorder, long nmax, long term_n, long modulus,
               const SuiteConfig& cfg) {
    std::vector<CheckReport> reports;
    if (check == "theorem") {
        p.validate();
        reports.push_back(check_theorem(p, parse_variant(variant), order));
    } else if (check == "counts_vs_series" || check == "counts-vs-series") {
        p.validate();
        reports.push_back(check_counts_vs_series(p, parse_variant(variant), xorder, xorder));
    } else if (check == "functional_eqs" || check == "functional-eqs") {
        p.validate();
        reports.push_back(check_functional_eqs(p, xorder, xorder, nmax));
    } else if (check == "count_recurrences" || check == "count-recurrences") {
        p.validate();
        reports.push_back(check_count_recurrences(p, nmax));
    } else if (check == "oracle_equiv" || check == "oracle-equiv") {
        p.validate();
        auto pv = parse_variant(variant);
        ConstraintSet c = pv == ProductVariant::Even ? even_constraints(p) : odd_constraints(p);
        BiSeries dp = dp_genfun(c, nmax, nmax);
        auto table = brute_table(c, nmax);
        CheckReport r = make_report("oracle_equiv", p, variant, nmax, nmax, std::nullopt);
        for (long n = 0; n <= nmax && r.pass; ++n)
            for (long m = 0; m <= nmax && r.pass; ++m)
                if (dp.coeff(m, n) != table[n][m])
                    fold(r, BiMismatch{m, n, table[n][m], dp.coeff(m, n)});
        reports.push_back(r);
    } else if (check == "legacy") {
        static const std::map<std::string, LegacyTheorem> kThm = {
            {"t2_1", LegacyTheorem::T2_1},
            {"t2_2", LegacyTheorem::T2_2},
            {"t2_2_overline", LegacyTheorem::T2_2_Overline},
            {"t2_3", LegacyTheorem::T2_3}};
        auto it = kThm.find(variant);
        if (it == kThm.end())
            throw ParamDomain("legacy check needs --variant t2_1|t2_2|t2_2_overline|t2_3");
        reports.push_back(check_legacy(it->second, p.k, p.a, order));
    } else if (check == "jtp") {
        reports.push_back(check_jtp(p.a, modulus, order));
    } else if (check == "negative_control" || check == "negative-control") {
        reports.push_back(negative_control(p, order));
    } else if (check == "matrix_adjugate" || check == "matrix-adjugate") {
        auto fam = variant == "beta" ? MatrixFamily::Beta : MatrixFamily::Alpha;
        reports.push_back(check_matrix_adjugate(p.d, p.e, term_n, fam, xorder, order));
    } else if (check == "simplified_recurrences" || check == "simplified-recurrences") {
        p.validate();
        reports.push_back(check_simplified_recurrences(p, nmax, xorder, order));
    } else if (check == "iterated_forms" || check == "iterated-forms") {
        p.validate();
        reports.push_back(check_iterated_forms(p, nmax, xorder, order));
    } else if (check == "initial_conditions" || check == "initial-conditions") {
        p.validate_relaxed();
        reports.push_back(check_initial_conditions(p, nmax, xorder, order));
    } else if (check == "q_relations" || check == "q-relations") {
        reports.push_back(check_q_relations(p.k, p.a, xorder, xorder));
    } else {
        throw ParamDomain("unknown check id '" + check + "'");
    }
    return finish(reports, cfg);
}

int run_expand(const std::string& what, const GordonParams& p, const std::string& variant,
               long order, long xorder, long modulus) {
    if (what == "product") {
        p.validate();
        std::cout << product_rhs(p, parse_variant(variant), order).str() << "\n";
    } else if (what == "theta") {
        std::cout << theta_sum(p.a, modulus, order).str() << "\n";
    } else if (what == "series-c") {
        p.validate();
        std::cout << series_C(p, XSub::keep(), xorder, order).str() << "\n";
    } else if (what == "series-t") {
        p.validate();
        std::cout << series_T(p, XSub::keep(), xorder, order).str() << "\n";
    } else if (what == "q") {
        std::cout << q_series(p.k, p.a, XSub::keep(), xorder, order).str() << "\n";
    } else {
        throw ParamDomain("unknown expansion '" + what + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series verification of Gordon-style partition identities"};
    app.require_subcommand(1);

    GordonParams p;
    std::string variant = "even";
    std::string check_id, expand_what;
    long order = 50, xorder = 30, nmax = 6, term_n = 1, modulus = 5;
    bool json = false, no_timing = false;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--d", p.d, "divisibility parameter d");
        cmd->add_option("--k", p.k, "pair-bound parameter k");
        cmd->add_option("--e", p.e, "residue parameter e");
        cmd->add_option("--a", p.a, "initial-bound parameter a");
        cmd->add_option("--f", p.f, "initial-bound residue f");
        cmd->add_option("--order", order, "q truncation order");
        cmd->add_option("--xorder", xorder, "x truncation order");
        cmd->add_flag("--json", json, "emit the JSON report");
        cmd->add_flag("--no-timing", no_timing, "zero elapsed fields");
    };

    auto* verify = app.add_subcommand("verify", "run one check");
    verify->add_option("check", check_id, "check identifier")->required();
    add_params(verify);
    verify->add_option("--variant", variant, "even | odd | t2_1 | t2_2 | t2_2_overline | t2_3");
    verify->add_option("--nmax", nmax, "term-identity / recurrence depth");
    verify->add_option("--term-n", term_n, "summation index for the matrix check");
    verify->add_option("--modulus", modulus, "theta modulus for the jtp check");

    SuiteConfig cfg;
    auto* sweep = app.add_subcommand("sweep", "run the configured checks over the grid");
    sweep->add_option("--max-d", cfg.max_d, "largest divisibility parameter");
    sweep->add_option("--max-k", cfg.max_k, "largest pair-bound parameter");
    sweep->add_option("--order", cfg.order_n, "q order for theorem comparisons");
    sweep->add_option("--xorder", cfg.order_m, "order for bivariate comparisons");
    sweep->add_option("--nmax", cfg.n_max_terms, "term-identity depth");
    std::string checks_csv;
    sweep->add_option("--checks", checks_csv, "comma-separated check subset");
    long jobs = 0;
    sweep->add_option("--jobs", jobs, "parallel workers (QGORDON_JOBS overrides default 1)");
    sweep->add_flag("--json", json, "emit the JSON report");
    sweep->add_flag("--no-timing", no_timing, "zero elapsed fields");

    auto* count = app.add_subcommand("count", "exhaustive constrained partition count");
    long cnt_n = 0;
    long parts = -1;
    ConstraintSet cs;
    std::string parity = "none";
    count->add_option("--n", cnt_n, "weight")->required();
    count->add_option("--parts", parts, "number of parts (omit for any)");
    count->add_option("--pair-bound", cs.pair_bound, "K in f_i + f_{i+1} < K")->required();
    count->add_option("--initial-bound", cs.initial_bound, "A in f_1 < A")->required();
    count->add_option("--divisor", cs.divisor, "divisor d");
    count->add_option("--parity", parity, "even | odd | none");

    auto* expand = app.add_subcommand("expand", "print a series expansion");
    expand->add_option("what", expand_what, "product | theta | series-c | series-t | q")
        ->required();
    add_params(expand);
    expand->add_option("--variant", variant, "product variant: even | odd");
    expand->add_option("--modulus", modulus, "theta modulus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        SuiteConfig out_cfg;
        out_cfg.output = json ? SuiteConfig::Output::Json : SuiteConfig::Output::Text;
        out_cfg.no_timing = no_timing;
        if (verify->parsed())
            return run_verify(check_id, p, variant, order, xorder, nmax, term_n, modulus,
                              out_cfg);
        if (sweep->parsed()) {
            cfg.output = out_cfg.output;
            cfg.no_timing = no_timing;
            if (jobs > 0) {
                cfg.parallel = static_cast<int>(jobs);
            } else if (const char* env = std::getenv("QGORDON_JOBS")) {
                cfg.parallel = std::max(1, std::atoi(env));
            }
            std::stringstream ss(checks_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) cfg.checks.insert(item);
            return finish(run_sweep(cfg), cfg);
        }
        if (count->parsed()) {
            if (parity == "even")
                cs.parity = ParityClass::EvenParts;
            else if (parity == "odd")
                cs.parity = ParityClass::OddParts;
            else if (parity == "none")
                cs.parity = ParityClass::None;
            else
                throw ParamDomain("unknown parity '" + parity + "'");
            std::optional<long> m = parts >= 0 ? std::optional<long>(parts) : kAnyParts;
            std::cout << brute_count(cnt_n, m, cs) << "\n";
            return 0;
        }
        if (expand->parsed()) return run_expand(expand_what, p, variant, order, xorder, modulus);
    } catch (const ParamDomain& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
