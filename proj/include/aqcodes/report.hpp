#pragma once

// JSON and text reports for defining sets and single codes.

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "aqcodes/codes.hpp"
#include "aqcodes/cosets.hpp"

namespace aqcodes {

inline nlohmann::json to_json(const DefiningSet& z) {
    const auto& ctx = z.context();
    return {{"q", ctx.q()}, {"n", ctx.n()}, {"r", ctx.r()}, {"members", z.members()}};
}

/// Coefficients low to high; a nonzero coefficient w^e is written as e, zero as "0".
inline nlohmann::json poly_to_json(const Poly& g) {
    auto out = nlohmann::json::array();
    for (const auto& c : g) {
        if (c.is_zero())
            out.push_back("0");
        else
            out.push_back(c.log());
    }
    return out;
}

inline std::string poly_to_string(const Poly& g) {
    if (g.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = g.size(); i-- > 0;) {
        if (g[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = g[i].is_one();
        if (!unit || i == 0) os << (unit ? "1" : "w^" + std::to_string(g[i].log()));
        if (i > 0) os << (unit ? "" : "*") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

struct CodeReport {
    const ConstacyclicCode* code;
    std::optional<SplittingField> splitting;
    std::optional<Poly> generator;
    DistanceResult distance;
    std::optional<bool> dual_containing;  // unset when r does not divide q + 1
    std::optional<std::string> note;
};

/// Builds everything the report needs. An oversized splitting field degrades
/// to the bounds-only distance without a generator polynomial.
inline CodeReport analyze_code(const ConstacyclicCode& code, const DistanceBudget& budget) {
    if (code.is_zero_code()) throw std::invalid_argument("defining set is all of Omega: the zero code has no distance");
    CodeReport rep{&code, std::nullopt, std::nullopt, {}, std::nullopt, std::nullopt};
    if (code.context().supports_hermitian()) rep.dual_containing = is_dual_containing(code.defining_set());
    try {
        rep.splitting = splitting_field(code);
        rep.generator = generator_polynomial(code, *rep.splitting);
        rep.distance = min_distance_exact(code, budget);
    } catch (const SplittingFieldTooLarge& e) {
        rep.note = e.what();
        rep.distance = min_distance_exact(code, DistanceBudget{0, 0});
    }
    return rep;
}

inline nlohmann::json to_json(const CodeReport& rep) {
    const auto& code = *rep.code;
    const auto& base = code.base_field();
    nlohmann::json j{{"n", code.length()},
                     {"k", code.dimension()},
                     {"designed_distance", code.designed_distance()},
                     {"defining_set", to_json(code.defining_set())},
                     {"eta_exponent", code.eta_exponent()},
                     {"field", {{"p", base.characteristic()}, {"m", base.degree()}, {"modulus", base.modulus()}}},
                     {"mds", rep.distance.mds()},
                     {"distance_strategy", strategy_name(rep.distance.strategy)},
                     {"budget_exhausted", rep.distance.budget_exhausted},
                     {"dual_containing", rep.dual_containing ? nlohmann::json(*rep.dual_containing) : nlohmann::json(nullptr)}};
    if (rep.distance.exact)
        j["distance_exact"] = *rep.distance.exact;
    else
        j["distance_bounds"] = {rep.distance.lower, rep.distance.upper};
    j["generator_poly"] = rep.generator ? poly_to_json(*rep.generator) : nlohmann::json(nullptr);
    j["splitting_degree"] = rep.splitting ? nlohmann::json(rep.splitting->degree) : nlohmann::json(nullptr);
    if (rep.note) j["note"] = *rep.note;
    return j;
}

inline std::string code_notation(const ConstacyclicCode& code, const DistanceResult& d) {
    const std::string dist = d.exact ? std::to_string(*d.exact)
                                     : std::to_string(d.lower) + ".." + std::to_string(d.upper);
    return "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "," + dist + "]_" +
           std::to_string(code.base_field().order());
}

inline std::string to_text(const CodeReport& rep) {
    const auto& code = *rep.code;
    const auto& base = code.base_field();
    std::ostringstream os;
    os << "code             " << code_notation(code, rep.distance) << (rep.distance.mds() ? "  MDS" : "") << "\n";
    os << "field            GF(" << base.characteristic() << "^" << base.degree() << "), w primitive\n";
    os << "eta              w^" << code.eta_exponent() << "  (r = " << code.context().r() << ")\n";
    os << "defining set     " << DefiningSet::join(code.defining_set().members()) << "  mod "
       << code.context().modulus() << "\n";
    if (rep.splitting)
        os << "splitting field  GF(" << base.characteristic() << "^" << rep.splitting->field->degree()
           << "), m = " << rep.splitting->degree << "\n";
    if (rep.generator) os << "generator        " << poly_to_string(*rep.generator) << "\n";
    os << "designed dist.   " << code.designed_distance() << "\n";
    os << "min distance     ";
    if (rep.distance.exact)
        os << *rep.distance.exact;
    else
        os << "in [" << rep.distance.lower << ", " << rep.distance.upper << "]";
    os << "  (" << strategy_name(rep.distance.strategy) << (rep.distance.budget_exhausted ? ", budget exhausted" : "")
       << ")\n";
    os << "dual-containing  " << (!rep.dual_containing ? "n/a (r does not divide q + 1)" : *rep.dual_containing ? "yes" : "no")
       << "\n";
    if (rep.note) os << "note             " << *rep.note << "\n";
    return os.str();
}

}  // namespace aqcodes
