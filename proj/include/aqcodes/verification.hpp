#pragma once

// Computational checks of the family statements: containment lemmas,
// coset structure, optimality, algebraic soundness, exact distances, the
// inner-product oracle, and golden comparison against table fixtures.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqcodes/aqecc.hpp"
#include "aqcodes/codes.hpp"
#include "aqcodes/cosets.hpp"
#include "aqcodes/family.hpp"

namespace aqcodes {

struct SweepResult {
    std::string name;
    i64 checked = 0;
    i64 skipped = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    bool partial() const { return skipped > 0; }
    void fail(std::string what) { failures.push_back(std::move(what)); }
};

inline nlohmann::json to_json(const SweepResult& r) {
    return {{"name", r.name}, {"checked", r.checked}, {"skipped", r.skipped}, {"failures", r.failures},
            {"passed", r.passed()}, {"partial", r.partial()}};
}

inline std::vector<i64> odd_prime_powers(i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 q = std::max<i64>(lo, 3); q <= hi; ++q)
        if (q % 2 == 1 && is_prime_power(q)) out.push_back(q);
    return out;
}

inline std::string label(const FamilySpec& spec) {
    std::string s = std::string(construction_id(spec.construction)) + " q=" + std::to_string(spec.q);
    if (spec.construction == Construction::GeneralRI) s += " r=" + std::to_string(spec.r);
    if (spec.construction == Construction::LambdaQPlusOne || spec.construction == Construction::TwoLambdaQPlusOne)
        s += " lambda=" + std::to_string(spec.lambda);
    return s;
}

/// Every family defining set inside its stated range is dual-containing.
inline SweepResult lemma_sweep(i64 q_max) {
    SweepResult res{"containment lemmas, q <= " + std::to_string(q_max)};
    for (i64 q : odd_prime_powers(3, q_max))
        for (const auto& spec : valid_families(q))
            for (i64 i = spec.min_index; i <= spec.max_index; ++i) {
                ++res.checked;
                if (!is_dual_containing(family_defining_set(spec, i)))
                    res.fail(label(spec) + " index " + std::to_string(i) + ": not dual-containing");
            }
    return res;
}

/// Cosets of Omega for n = (q^2+1)/5, r = q+1: C_k and C_{k+n(q+1)/2} are
/// singletons, every other coset is {k-(q+1)j, k+(q+1)j}, and they
/// partition Omega. Returns the first discrepancy.
inline std::optional<std::string> third_coset_structure(i64 q) {
    if ((q * q + 1) % 5 != 0) return "n = (q^2+1)/5 is not an integer for q = " + std::to_string(q);
    const i64 n = (q * q + 1) / 5;
    const CosetContext ctx(q, n, q + 1);
    const i64 rn = ctx.modulus();
    const i64 k = (q * q + 1) / 2;
    const i64 k2 = mod(k + n * (q + 1) / 2, rn);
    i64 singletons = 0;
    i64 covered = 0;
    for (const auto& c : omega_cosets(ctx)) {
        covered += static_cast<i64>(c.size());
        if (c.size() == 1) {
            if (c[0] != mod(k, rn) && c[0] != k2) return "unexpected singleton coset {" + std::to_string(c[0]) + "}";
            ++singletons;
        } else if (c.size() == 2) {
            // {k - (q+1)j, k + (q+1)j}: the two members sum to 2k mod rn.
            if (mod(c[0] + c[1] - 2 * k, rn) != 0)
                return "coset " + DefiningSet::join(c) + " is not of the form k -/+ (q+1)j";
        } else {
            return "coset of size " + std::to_string(c.size()) + " containing " + std::to_string(c[0]);
        }
    }
    if (singletons != 2) return std::to_string(singletons) + " singleton cosets instead of 2";
    if (covered != n) return "cosets cover " + std::to_string(covered) + " of " + std::to_string(n) + " Omega elements";
    if (mod(k, rn) % (q + 1) != 1 || k2 % (q + 1) != 1) return "k or k + n(q+1)/2 is not in Omega";
    return std::nullopt;
}

inline SweepResult coset_structure_sweep(const std::vector<i64>& qs) {
    SweepResult res{"third-construction coset structure"};
    for (i64 q : qs) {
        ++res.checked;
        if (auto e = third_coset_structure(q)) res.fail("q=" + std::to_string(q) + ": " + *e);
    }
    return res;
}

/// Every code of every family generator meets the asymmetric Singleton bound.
inline SweepResult optimality_sweep(i64 q_max) {
    SweepResult res{"optimality, q <= " + std::to_string(q_max)};
    for (i64 q : odd_prime_powers(3, q_max))
        for (const auto& spec : valid_families(q)) {
            try {
                for (const auto& p : enumerate_family(spec)) {
                    ++res.checked;
                    if (singleton_margin(p) != 0 || !p.optimal)
                        res.fail(label(spec) + ": " + notation(p) + " has Singleton margin " +
                                 std::to_string(singleton_margin(p)));
                }
            } catch (const ClaimFailure& e) {
                res.fail(label(spec) + ": " + e.what());
            }
        }
    return res;
}

/// g | x^n - eta, coefficients in GF(q^2), deg g + k = n, and the roots of g
/// among delta^Omega are exactly Z.
inline SweepResult algebra_sweep(i64 q_max) {
    SweepResult res{"generator polynomials, q <= " + std::to_string(q_max)};
    for (i64 q : odd_prime_powers(3, q_max))
        for (const auto& spec : valid_families(q))
            for (i64 i = spec.min_index; i <= spec.max_index; ++i) {
                const auto code = ConstacyclicCode::from_family(spec, i);
                const std::string where = label(spec) + " index " + std::to_string(i) + ": ";
                try {
                    const auto sf = splitting_field(code);
                    const auto g = generator_polynomial(code, sf);
                    ++res.checked;
                    if (poly::degree(g) + code.dimension() != code.length()) res.fail(where + "deg g + k != n");
                    if (!divides_x_n_minus_eta(code, g)) res.fail(where + "g does not divide x^n - eta");
                    if (defining_set_from_generator(code, g, sf) != code.defining_set().members())
                        res.fail(where + "roots of g differ from Z");
                } catch (const SplittingFieldTooLarge&) {
                    ++res.skipped;
                } catch (const std::logic_error& e) {
                    ++res.checked;
                    res.fail(where + e.what());
                }
            }
    return res;
}

/// Exact minimum distance equals n - k + 1 for every family code whose
/// distance can be settled by search within the budget. Codes settled only by
/// the bounds sandwich are counted as skipped.
inline SweepResult distance_sweep(const std::vector<i64>& qs, const DistanceBudget& budget) {
    SweepResult res{"exact minimum distance (search)"};
    for (i64 q : qs)
        for (const auto& spec : valid_families(q))
            for (i64 i = spec.min_index; i <= spec.max_index; ++i) {
                const auto code = ConstacyclicCode::from_family(spec, i);
                const auto d = min_distance_exact(code, budget);
                // A dependent column set found by the search lowers the upper bound.
                const bool refuted = d.upper < code.singleton_bound();
                if (d.strategy == DistanceStrategy::Bounds && !refuted) {
                    ++res.skipped;
                    continue;
                }
                ++res.checked;
                if (!d.exact || *d.exact != code.singleton_bound())
                    res.fail(label(spec) + " index " + std::to_string(i) + ": distance " +
                             (d.exact ? std::to_string(*d.exact) : "unknown") + ", expected " +
                             std::to_string(code.singleton_bound()));
            }
    return res;
}

/// Indices used to draw oracle pairs: the stated range plus one index past
/// it, so that non-containing pairs are exercised too.
inline std::vector<i64> oracle_indices(const FamilySpec& spec) {
    std::vector<i64> out;
    for (i64 i = spec.min_index; i <= std::min(spec.max_index + 1, spec.structural_max_index()); ++i) out.push_back(i);
    return out;
}

/// Generator-matrix Hermitian oracle against the coset criterion on every
/// ordered pair of family defining sets.
inline SweepResult oracle_sweep(const std::vector<i64>& qs) {
    SweepResult res{"Hermitian inner-product oracle"};
    i64 negatives = 0;
    for (i64 q : qs)
        for (const auto& spec : valid_families(q)) {
            std::vector<ConstacyclicCode> codes;
            std::vector<i64> idx = oracle_indices(spec);
            for (i64 i : idx) codes.push_back(ConstacyclicCode::from_family_extended(spec, i));
            for (std::size_t a = 0; a < codes.size(); ++a)
                for (std::size_t b = 0; b < codes.size(); ++b) {
                    if (codes[a].is_zero_code() || codes[b].is_zero_code()) {
                        ++res.skipped;
                        continue;
                    }
                    ++res.checked;
                    const bool combinatorial = hermitian_dual_contained_in(codes[a].defining_set(), codes[b].defining_set());
                    const bool oracle = hermitian_inner_product_oracle(codes[a], codes[b]);
                    negatives += oracle ? 0 : 1;
                    if (combinatorial != oracle)
                        res.fail(label(spec) + " (" + std::to_string(idx[a]) + ", " + std::to_string(idx[b]) +
                                 "): cosets say " + (combinatorial ? "contained" : "not contained") + ", oracle says " +
                                 (oracle ? "contained" : "not contained"));
                }
        }
    res.name += " (" + std::to_string(res.checked - negatives) + " contained, " + std::to_string(negatives) + " not)";
    return res;
}

struct FixtureCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline nlohmann::json to_json(const FixtureCheck& c) {
    return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

/// Thrown for fixture documents that are missing fields or malformed.
class FixtureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline FamilySpec fixture_family(const nlohmann::json& doc) {
    try {
        const auto c = parse_construction(doc.at("construction").get<std::string>());
        if (!c) throw FixtureError("unknown construction '" + doc.at("construction").get<std::string>() + "'");
        std::optional<i64> lambda;
        std::optional<i64> r;
        if (doc.contains("lambda") && !doc["lambda"].is_null()) lambda = doc["lambda"].get<i64>();
        if (doc.contains("r") && !doc["r"].is_null()) r = doc["r"].get<i64>();
        return make_family(*c, doc.at("q").get<i64>(), lambda, r);
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError(std::string("malformed fixture: ") + e.what());
    }
}

/// Regenerates a table's family and compares it entry by entry, in the
/// fixture's order (by t, then s).
inline FixtureCheck check_table_fixture(const std::string& name, const nlohmann::json& doc) {
    FixtureCheck out{name};
    const FamilySpec spec = fixture_family(doc);
    std::vector<std::string> expected;
    try {
        for (const auto& e : doc.at("codes")) expected.push_back(e.get<std::string>());
        if (doc.contains("count") && doc["count"].get<std::size_t>() != expected.size())
            throw FixtureError("fixture count " + doc["count"].dump() + " disagrees with its " +
                               std::to_string(expected.size()) + " entries");
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError(std::string("malformed fixture: ") + e.what());
    }
    auto computed = enumerate_family(spec);
    std::stable_sort(computed.begin(), computed.end(), [](const AqeccParams& a, const AqeccParams& b) {
        return std::pair(a.provenance->t, a.provenance->s) < std::pair(b.provenance->t, b.provenance->s);
    });
    const std::string head = label(spec) + " n=" + std::to_string(spec.n);
    for (std::size_t i = 0; i < std::min(expected.size(), computed.size()); ++i) {
        const std::string got = notation(computed[i]);
        if (got != expected[i]) {
            out.detail = head + ": entry " + std::to_string(i + 1) + " differs: fixture " + expected[i] + ", computed " +
                         got + " (s=" + std::to_string(computed[i].provenance->s) +
                         " t=" + std::to_string(computed[i].provenance->t) + ")";
            return out;
        }
        if (!computed[i].optimal) {
            out.detail = head + ": entry " + std::to_string(i + 1) + " " + got + " is not optimal";
            return out;
        }
    }
    if (expected.size() != computed.size()) {
        out.detail = head + ": fixture has " + std::to_string(expected.size()) + " codes, computed " +
                     std::to_string(computed.size());
        return out;
    }
    out.passed = true;
    out.detail = head + ": " + std::to_string(computed.size()) + "/" + std::to_string(expected.size()) + " codes match";
    return out;
}

/// Exact distances of a table family's classical codes and the oracle on each
/// containment pair; used by verify-tables --deep.
inline FixtureCheck deep_check_family(const std::string& name, const FamilySpec& spec, const DistanceBudget& budget) {
    FixtureCheck out{name};
    i64 searched = 0;
    i64 bounded = 0;
    std::vector<ConstacyclicCode> codes;
    for (i64 i = spec.min_index; i <= spec.max_index; ++i) {
        codes.push_back(ConstacyclicCode::from_family(spec, i));
        const auto d = min_distance_exact(codes.back(), budget);
        if (!d.exact || *d.exact != codes.back().designed_distance() || !d.mds()) {
            out.detail = label(spec) + " index " + std::to_string(i) + ": minimum distance " +
                         (d.exact ? std::to_string(*d.exact) : "unknown") + ", designed " +
                         std::to_string(codes.back().designed_distance());
            return out;
        }
        (d.strategy == DistanceStrategy::Bounds ? bounded : searched) += 1;
    }
    for (std::size_t s = 0; s < codes.size(); ++s)
        for (std::size_t t = 0; t <= s; ++t)
            if (!hermitian_inner_product_oracle(codes[t], codes[s])) {
                out.detail = label(spec) + ": oracle rejects containment at s=" + std::to_string(spec.min_index + static_cast<i64>(s)) +
                             " t=" + std::to_string(spec.min_index + static_cast<i64>(t));
                return out;
            }
    out.passed = true;
    out.detail = label(spec) + ": " + std::to_string(searched) + " distances by search, " + std::to_string(bounded) +
                 " by bounds, oracle confirms all containments";
    return out;
}

/// A worked example: both defining sets, both classical parameter strings,
/// and the quantum code with its optimality flag.
inline FixtureCheck check_example_fixture(const std::string& name, const nlohmann::json& doc) {
    FixtureCheck out{name};
    const FamilySpec spec = fixture_family(doc);
    try {
        std::vector<ConstacyclicCode> codes;
        for (const char* key : {"c1", "c2"}) {
            const auto& part = doc.at(key);
            const i64 index = part.at("index").get<i64>();
            const auto code = ConstacyclicCode::from_family(spec, index);
            const auto members = part.at("members").get<std::vector<i64>>();
            if (code.defining_set().members() != members) {
                out.detail = std::string(key) + " defining set " + DefiningSet::join(code.defining_set().members()) +
                             " differs from fixture " + DefiningSet::join(members);
                return out;
            }
            const auto d = min_distance_exact(code);
            const std::string params = "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) +
                                       "," + (d.exact ? std::to_string(*d.exact) : "?") + "]_" +
                                       std::to_string(code.base_field().order());
            if (params != part.at("params").get<std::string>() || !d.mds()) {
                out.detail = std::string(key) + " parameters " + params + (d.mds() ? "" : " (not MDS)") +
                             " differ from fixture " + part.at("params").get<std::string>();
                return out;
            }
            if (doc.contains("eta_exponent") && code.eta_exponent() != doc["eta_exponent"].get<i64>()) {
                out.detail = std::string(key) + " eta exponent " + std::to_string(code.eta_exponent()) + " differs";
                return out;
            }
            codes.push_back(code);
        }
        const auto p = css_combine(codes[0], codes[1]);
        const auto want = doc.at("quantum").get<std::string>();
        if (notation(p) != want || p.optimal != doc.at("optimal").get<bool>()) {
            out.detail = "quantum code " + notation(p) + (p.optimal ? " optimal" : " not optimal") + ", fixture " + want;
            return out;
        }
        out.passed = true;
        out.detail = label(spec) + ": " + notation(p) + (p.optimal ? " optimal" : "");
    } catch (const nlohmann::json::exception& e) {
        throw FixtureError(std::string("malformed fixture: ") + e.what());
    }
    return out;
}

}  // namespace aqcodes
