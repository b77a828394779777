#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "aqcodes/commands.hpp"

namespace {

using aqcodes::RunConfig;

void add_family_flags(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--q", cfg.q, "odd prime power q (codes live over GF(q^2))");
    sub.add_option("--construction", cfg.construction, "family: I, Ir, II, II2, III+ or III-")
        ->check(CLI::IsMember({"I", "Ir", "II", "II2", "III+", "III-"}));
    sub.add_option("--lambda", cfg.lambda, "lambda for II/II2 (or Ir)");
    sub.add_option("--r", cfg.r, "r for Ir, or the constacyclic order for explicit codes");
}

void add_code_flags(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--s", cfg.s, "index s (the larger defining set)");
    sub.add_option("--t", cfg.t, "index t");
    sub.add_option("--n", cfg.n, "length, for an explicit code");
    sub.add_option("--eta", cfg.eta, "eta = w^ETA, default (q^2-1)/r");
    sub.add_option("--members", cfg.members, "defining set Z (or Z1), comma separated")->delimiter(',');
}

void add_budget_flags(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--budget-enum", cfg.budget.enumeration, "codeword enumeration cap")->check(CLI::PositiveNumber);
    sub.add_option("--budget-mds", cfg.budget.mds, "MDS column-subset search cap")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal asymmetric quantum codes from constacyclic codes over GF(q^2)"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "text";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out, "write the document to PATH instead of stdout");
    };

    auto* family = app.add_subcommand("family", "enumerate a family and print its table");
    add_family_flags(*family, cfg);
    common(family);

    auto* verify = app.add_subcommand("verify-tables", "regenerate the six tables and two worked examples");
    verify->add_flag("--deep", cfg.deep, "also verify exact distances and the oracle for q <= 9 tables");
    verify->add_option("--fixtures", cfg.fixtures, "fixture directory")->check(CLI::ExistingDirectory);
    add_budget_flags(*verify, cfg);
    common(verify);

    auto* info = app.add_subcommand("code-info", "report on one constacyclic code");
    add_family_flags(*info, cfg);
    add_code_flags(*info, cfg);
    add_budget_flags(*info, cfg);
    common(info);

    auto* dual = app.add_subcommand("dual-check", "Hermitian dual containment of one code or a pair");
    add_family_flags(*dual, cfg);
    add_code_flags(*dual, cfg);
    dual->add_option("--members2", cfg.members2, "second defining set Z2, comma separated")->delimiter(',');
    common(dual);

    auto* cross = app.add_subcommand("crosscheck", "oracle, algebra and lemma sweeps, or one family instance");
    add_family_flags(*cross, cfg);
    cross->add_option("--s", cfg.s, "index s (single-instance mode)");
    cross->add_option("--t", cfg.t, "index t (defaults to s)");
    cross->add_option("--q-max", cfg.q_max, "largest q for the lemma sweep")->check(CLI::Range(3, 1000));
    cross->add_option("--oracle-q-max", cfg.oracle_q_max, "largest q for oracle and algebra sweeps")
        ->check(CLI::Range(3, 49));
    common(cross);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : aqcodes::kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? aqcodes::TableFormat::Json : aqcodes::TableFormat::Text;
    const auto result = aqcodes::run_command(cfg);
    if (!result.error.empty()) std::cerr << result.error;
    if (cfg.out && result.exit_code != aqcodes::kExitUsage) {
        std::ofstream out(*cfg.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << *cfg.out << "\n";
            return aqcodes::kExitUsage;
        }
        out << result.document;
    } else {
        std::cout << result.document;
    }
    return result.exit_code;
}
