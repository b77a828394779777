#pragma once

// Command implementations behind the CLI. Each returns an exit code and the
// document to print: 0 success, 1 a family statement failed computationally,
// 2 a usage or constraint error.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqcodes/aqecc.hpp"
#include "aqcodes/report.hpp"
#include "aqcodes/verification.hpp"

#ifndef AQCODES_DEFAULT_FIXTURE_DIR
#define AQCODES_DEFAULT_FIXTURE_DIR "data/tables"
#endif

namespace aqcodes {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    std::optional<i64> q;
    std::optional<std::string> construction;
    std::optional<i64> lambda;
    std::optional<i64> r;
    std::optional<i64> s;
    std::optional<i64> t;
    // Explicit code description for code-info / dual-check.
    std::optional<i64> n;
    std::optional<i64> eta;
    std::optional<std::vector<i64>> members;
    std::optional<std::vector<i64>> members2;

    TableFormat format = TableFormat::Text;
    bool deep = false;
    DistanceBudget budget;
    std::optional<std::string> out;
    std::string fixtures = AQCODES_DEFAULT_FIXTURE_DIR;
    i64 q_max = 49;
    i64 oracle_q_max = 9;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string document;  // stdout or --out
    std::string error;     // stderr
};

/// Thrown for bad flag combinations.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline i64 require(const std::optional<i64>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required flag ") + flag);
    return *v;
}

inline FamilySpec family_from(const RunConfig& cfg) {
    if (!cfg.construction) throw UsageError("missing required flag --construction");
    const auto c = parse_construction(*cfg.construction);
    if (!c) throw UsageError("unknown construction '" + *cfg.construction + "' (expected I, Ir, II, II2, III+ or III-)");
    return make_family(*c, require(cfg.q, "--q"), cfg.lambda, cfg.r);
}

/// The explicit (q, n, r, eta, members) description, r defaulting to 2 and
/// eta to w^{(q^2-1)/r}.
inline ConstacyclicCode explicit_code(const RunConfig& cfg, const std::vector<i64>& members) {
    const i64 q = require(cfg.q, "--q");
    if (q < 2 || !is_prime_power(q)) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
    const i64 n = require(cfg.n, "--n");
    const i64 r = cfg.r.value_or(2);
    if (n < 1 || r < 1) throw UsageError("n and r must be positive");
    if ((q * q - 1) % r != 0) throw UsageError("r = " + std::to_string(r) + " must divide q^2 - 1");
    const CosetContext ctx(q, n, r);
    return {DefiningSet::from_members(ctx, members), cfg.eta.value_or((q * q - 1) / r)};
}

inline std::string sweep_line(const SweepResult& r) {
    std::string line = std::string(r.passed() ? "PASS" : "FAIL") + "  " + r.name + ": " + std::to_string(r.checked) +
                       " checked, " + std::to_string(r.failures.size()) + " failures";
    if (r.partial()) line += ", " + std::to_string(r.skipped) + " skipped (partial)";
    line += "\n";
    for (const auto& f : r.failures) line += "      " + f + "\n";
    return line;
}

inline nlohmann::json read_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("fixture missing: " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FixtureError("fixture corrupt: " + path.string() + ": " + e.what());
    }
}

}  // namespace detail

inline CommandResult cmd_family(const RunConfig& cfg) {
    const auto spec = detail::family_from(cfg);
    const auto list = enumerate_family(spec);
    const bool all_optimal = std::all_of(list.begin(), list.end(), [](const AqeccParams& p) { return p.optimal; });
    return {all_optimal ? kExitOk : kExitClaimFailed, emit_table(list, cfg.format)};
}

inline const std::vector<std::string>& table_fixture_names() {
    static const std::vector<std::string> names{"table1", "table2", "table3", "table4", "table5", "table6"};
    return names;
}

inline const std::vector<std::string>& example_fixture_names() {
    static const std::vector<std::string> names{"example_q23", "example_q17"};
    return names;
}

inline CommandResult cmd_verify_tables(const RunConfig& cfg) {
    const std::filesystem::path dir(cfg.fixtures);
    std::vector<FixtureCheck> tables;
    std::vector<FixtureCheck> examples;
    std::vector<FixtureCheck> deep;
    for (const auto& name : table_fixture_names()) {
        const auto doc = detail::read_fixture(dir / (name + ".json"));
        tables.push_back(check_table_fixture(name, doc));
        if (cfg.deep) {
            const auto spec = fixture_family(doc);
            if (spec.q <= 9) deep.push_back(deep_check_family(name, spec, cfg.budget));
        }
    }
    for (const auto& name : example_fixture_names())
        examples.push_back(check_example_fixture(name, detail::read_fixture(dir / (name + ".json"))));

    const auto count = [](const std::vector<FixtureCheck>& v) {
        return std::count_if(v.begin(), v.end(), [](const FixtureCheck& c) { return c.passed; });
    };
    const bool ok = count(tables) == static_cast<long>(tables.size()) &&
                    count(examples) == static_cast<long>(examples.size()) &&
                    count(deep) == static_cast<long>(deep.size());
    std::string summary = std::to_string(count(tables)) + "/" + std::to_string(tables.size()) + " tables, " +
                          std::to_string(count(examples)) + "/" + std::to_string(examples.size()) + " examples";
    if (cfg.deep) summary += ", " + std::to_string(count(deep)) + "/" + std::to_string(deep.size()) + " deep";
    summary += ok ? " PASS" : " FAIL";

    if (cfg.format == TableFormat::Json) {
        nlohmann::json doc{{"passed", ok}, {"summary", summary}};
        for (const auto& [key, list] : {std::pair{"tables", &tables}, {"examples", &examples}, {"deep", &deep}}) {
            auto& arr = doc[key] = nlohmann::json::array();
            for (const auto& c : *list) arr.push_back(to_json(c));
        }
        return {ok ? kExitOk : kExitClaimFailed, dump_json(doc)};
    }
    std::ostringstream os;
    for (const auto* list : {&tables, &examples})
        for (const auto& c : *list) os << c.name << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.detail << "\n";
    for (const auto& c : deep) os << "deep " << c.name << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.detail << "\n";
    os << summary << "\n";
    return {ok ? kExitOk : kExitClaimFailed, os.str()};
}

/// Either a family code (--construction, --q, --s or --t) or an explicit
/// description (--q, --n, --r, --eta, --members).
inline ConstacyclicCode code_from(const RunConfig& cfg) {
    if (cfg.construction) {
        const auto spec = detail::family_from(cfg);
        const auto index = cfg.s ? cfg.s : cfg.t;
        return ConstacyclicCode::from_family_extended(spec, detail::require(index, "--s or --t"));
    }
    if (!cfg.members) throw UsageError("code-info needs --construction with --s/--t, or --n with --members");
    return detail::explicit_code(cfg, *cfg.members);
}

inline CommandResult cmd_code_info(const RunConfig& cfg) {
    const auto code = code_from(cfg);
    const auto rep = analyze_code(code, cfg.budget);
    if (cfg.format == TableFormat::Json) return {kExitOk, dump_json(to_json(rep))};
    return {kExitOk, to_text(rep)};
}

namespace detail {

/// Runs the inner-product oracle when the instance is small enough.
inline std::optional<bool> oracle_if_feasible(const ConstacyclicCode& a, const ConstacyclicCode& b, i64 q_max) {
    if (a.q() > q_max) return std::nullopt;
    try {
        return hermitian_inner_product_oracle(a, b);
    } catch (const SplittingFieldTooLarge&) {
        return std::nullopt;
    }
}

inline nlohmann::json optional_json(const std::optional<bool>& b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); }

inline std::string yes_no(const std::optional<bool>& b) { return !b ? "not run" : *b ? "yes" : "no"; }

}  // namespace detail

/// C1^{perp H} in C2 for an explicit or family pair; with a single code,
/// whether it is dual-containing.
inline CommandResult cmd_dual_check(const RunConfig& cfg) {
    std::optional<ConstacyclicCode> c1;
    std::optional<ConstacyclicCode> c2;
    if (cfg.construction) {
        const auto spec = detail::family_from(cfg);
        const i64 s = detail::require(cfg.s, "--s");
        c2 = ConstacyclicCode::from_family_extended(spec, s);
        c1 = ConstacyclicCode::from_family_extended(spec, cfg.t.value_or(s));
    } else {
        if (!cfg.members) throw UsageError("dual-check needs --construction with --s [--t], or --n with --members");
        c1 = detail::explicit_code(cfg, *cfg.members);
        c2 = detail::explicit_code(cfg, cfg.members2.value_or(*cfg.members));
    }
    detail::require_hermitian(c1->context());
    const bool contained = hermitian_dual_contained_in(c1->defining_set(), c2->defining_set());
    const auto oracle = detail::oracle_if_feasible(*c1, *c2, cfg.oracle_q_max);
    const auto dual = hermitian_dual_defining_set(c1->defining_set());
    const bool disagreement = oracle && *oracle != contained;

    if (cfg.format == TableFormat::Json) {
        nlohmann::json doc{{"z1", to_json(c1->defining_set())},
                           {"z2", to_json(c2->defining_set())},
                           {"z1_hermitian_dual", to_json(dual)},
                           {"contained", contained},
                           {"z1_dual_containing", is_dual_containing(c1->defining_set())},
                           {"oracle", detail::optional_json(oracle)}};
        return {disagreement ? kExitClaimFailed : kExitOk, dump_json(doc)};
    }
    std::ostringstream os;
    os << "Z1           " << DefiningSet::join(c1->defining_set().members()) << "\n";
    os << "Z2           " << DefiningSet::join(c2->defining_set().members()) << "\n";
    os << "Z1 dual      " << dual.size() << " elements\n";
    os << "C1^perpH in C2  " << (contained ? "yes" : "no") << "\n";
    os << "C1 dual-containing  " << (is_dual_containing(c1->defining_set()) ? "yes" : "no") << "\n";
    os << "oracle       " << detail::yes_no(oracle) << (disagreement ? "  DISAGREES" : "") << "\n";
    return {disagreement ? kExitClaimFailed : kExitOk, os.str()};
}

/// Single instance (--construction --q --s [--t]): containment of the family
/// pair, also outside the stated range. Otherwise the oracle, algebra, lemma
/// and coset-structure sweeps.
inline CommandResult cmd_crosscheck(const RunConfig& cfg) {
    if (cfg.construction) {
        const auto spec = detail::family_from(cfg);
        const i64 s = detail::require(cfg.s, "--s");
        const i64 t = cfg.t.value_or(s);
        if (t > s) throw UsageError("need t <= s");
        const bool in_range = t >= spec.min_index && s <= spec.max_index;
        const auto cs = ConstacyclicCode::from_family_extended(spec, s);
        const auto ct = ConstacyclicCode::from_family_extended(spec, t);
        const bool contained = hermitian_dual_contained_in(ct.defining_set(), cs.defining_set());
        const auto oracle = detail::oracle_if_feasible(ct, cs, cfg.oracle_q_max);
        const bool failed = (in_range && !contained) || (oracle && *oracle != contained);
        const int code = failed ? kExitClaimFailed : kExitOk;
        if (cfg.format == TableFormat::Json) {
            nlohmann::json doc{{"family", label(spec)}, {"s", s}, {"t", t}, {"in_range", in_range},
                               {"range", {spec.min_index, spec.max_index}}, {"contained", contained},
                               {"oracle", detail::optional_json(oracle)}};
            return {code, dump_json(doc)};
        }
        std::ostringstream os;
        os << label(spec) << "  s=" << s << " t=" << t << "  (stated range " << spec.min_index << ".."
           << spec.max_index << (in_range ? "" : ", outside") << ")\n";
        os << "containment  " << (contained ? "PASS" : "FAIL") << "\n";
        os << "oracle       " << detail::yes_no(oracle) << "\n";
        return {code, os.str()};
    }

    const auto small = odd_prime_powers(3, cfg.oracle_q_max);
    std::vector<i64> third;
    for (i64 q : odd_prime_powers(3, cfg.q_max))
        if ((q * q + 1) % 5 == 0) third.push_back(q);
    const std::vector<SweepResult> sweeps{oracle_sweep(small), algebra_sweep(cfg.oracle_q_max), lemma_sweep(cfg.q_max),
                                          coset_structure_sweep(third)};
    const bool ok = std::all_of(sweeps.begin(), sweeps.end(), [](const SweepResult& r) { return r.passed(); });
    i64 disagreements = 0;
    for (const auto& r : sweeps) disagreements += static_cast<i64>(r.failures.size());
    if (cfg.format == TableFormat::Json) {
        nlohmann::json doc{{"passed", ok}, {"disagreements", disagreements}, {"sweeps", nlohmann::json::array()}};
        for (const auto& r : sweeps) doc["sweeps"].push_back(to_json(r));
        return {ok ? kExitOk : kExitClaimFailed, dump_json(doc)};
    }
    std::ostringstream os;
    for (const auto& r : sweeps) os << detail::sweep_line(r);
    os << disagreements << " disagreements\n";
    return {ok ? kExitOk : kExitClaimFailed, os.str()};
}

/// Dispatch with the exit-code contract applied to exceptions.
inline CommandResult run_command(const RunConfig& cfg) {
    try {
        if (cfg.command == "family") return cmd_family(cfg);
        if (cfg.command == "verify-tables") return cmd_verify_tables(cfg);
        if (cfg.command == "code-info") return cmd_code_info(cfg);
        if (cfg.command == "dual-check") return cmd_dual_check(cfg);
        if (cfg.command == "crosscheck") return cmd_crosscheck(cfg);
        return {kExitUsage, "", "error: unknown command '" + cfg.command + "'\n"};
    } catch (const ClaimFailure& e) {
        return {kExitClaimFailed, "", std::string("claim failed: ") + e.what() + "\n"};
    } catch (const FixtureError& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::out_of_range& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const SplittingFieldTooLarge& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace aqcodes
