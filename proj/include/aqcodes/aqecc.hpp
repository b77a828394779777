#pragma once

// CSS combination of nested constacyclic codes into asymmetric quantum code
// parameters [[n, k, dz/dx]]_{q^2}, optimality, and the family generators.

#include <map>
#include <optional>
#include <regex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "aqcodes/codes.hpp"
#include "aqcodes/cosets.hpp"
#include "aqcodes/family.hpp"

namespace aqcodes {

/// A family statement failed computationally (not a usage error).
class ClaimFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Provenance {
    Construction construction;
    i64 s;
    i64 t;
    i64 lambda;
    i64 r;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct AqeccParams {
    i64 q;
    i64 n;
    i64 k;
    i64 dz;
    i64 dx;
    bool optimal;
    std::optional<Provenance> provenance;

    friend bool operator==(const AqeccParams&, const AqeccParams&) = default;
};

/// (n - dz - dx + 2) - k; zero exactly for optimal codes.
inline i64 singleton_margin(const AqeccParams& p) { return (p.n - p.dz - p.dx + 2) - p.k; }

/// [[n, k1 + k2 - n, d(C2)/d(C1)]] from C1^{perp H} in C2. Distances are the
/// designed (BCH) distances of the classical codes, i.e. purity is assumed.
inline AqeccParams css_combine(const ConstacyclicCode& c1, const ConstacyclicCode& c2) {
    if (!(c1.context() == c2.context()) || c1.eta_exponent() != c2.eta_exponent())
        throw std::invalid_argument("css: codes must share q, n and eta");
    if (c1.is_zero_code() || c2.is_zero_code()) throw std::invalid_argument("css: zero code has no parameters");
    if (!hermitian_dual_contained_in(c1.defining_set(), c2.defining_set()))
        throw std::invalid_argument("css: C1^{perp H} is not contained in C2");
    const i64 n = c1.length();
    const i64 k = c1.dimension() + c2.dimension() - n;
    if (k <= 0) throw std::invalid_argument("css: quantum dimension k1 + k2 - n = " + std::to_string(k) + " is not positive");
    AqeccParams p{c1.q(), n, k, c2.designed_distance(), c1.designed_distance(), false, std::nullopt};
    p.optimal = singleton_margin(p) == 0;
    return p;
}

/// Every (s, t) with min <= t <= s <= max, sorted by (s, t). C1 is the code
/// for index t and C2 the code for index s, so dz = d(C_s) >= dx = d(C_t).
/// Pairs whose quantum dimension would be zero are left out (only I at q = 3
/// and II with lambda = 1 reach it). Throws ClaimFailure if an in-range
/// instance is not dual-containing.
inline std::vector<AqeccParams> enumerate_family(const FamilySpec& spec) {
    std::map<i64, ConstacyclicCode> codes;
    for (i64 i = spec.min_index; i <= spec.max_index; ++i) {
        auto code = ConstacyclicCode::from_family(spec, i);
        if (!is_dual_containing(code.defining_set()))
            throw ClaimFailure("construction " + std::string(construction_id(spec.construction)) + ", q = " +
                               std::to_string(spec.q) + ": defining set for index " + std::to_string(i) +
                               " is not dual-containing");
        codes.emplace(i, std::move(code));
    }
    std::vector<AqeccParams> out;
    for (i64 s = spec.min_index; s <= spec.max_index; ++s)
        for (i64 t = spec.min_index; t <= s; ++t) {
            const auto& c1 = codes.at(t);
            const auto& c2 = codes.at(s);
            if (!hermitian_dual_contained_in(c1.defining_set(), c2.defining_set()))
                throw ClaimFailure("containment C1^{perp H} in C2 failed at s = " + std::to_string(s) +
                                   ", t = " + std::to_string(t));
            if (c1.dimension() + c2.dimension() <= spec.n) continue;
            AqeccParams p = css_combine(c1, c2);
            p.provenance = Provenance{spec.construction, s, t, spec.lambda, spec.r};
            out.push_back(p);
        }
    return out;
}

/// "[[n,k,dz/dx]]_Q" with Q = q^2.
inline std::string notation(const AqeccParams& p) {
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.dz) + "/" +
           std::to_string(p.dx) + "]]_" + std::to_string(p.q * p.q);
}

struct QuantumTuple {
    i64 n;
    i64 k;
    i64 dz;
    i64 dx;
    i64 field_order;  // q^2

    friend auto operator<=>(const QuantumTuple&, const QuantumTuple&) = default;
};

inline QuantumTuple tuple_of(const AqeccParams& p) { return {p.n, p.k, p.dz, p.dx, p.q * p.q}; }

inline QuantumTuple parse_notation(const std::string& s) {
    static const std::regex re(R"(\s*\[\[(\d+),(\d+),(\d+)/(\d+)\]\]_(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("malformed code notation: '" + s + "'");
    return {std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3]), std::stoll(m[4]), std::stoll(m[5])};
}

inline nlohmann::json to_json(const AqeccParams& p) {
    nlohmann::json j{{"q", p.q}, {"n", p.n}, {"k", p.k}, {"dz", p.dz}, {"dx", p.dx}, {"optimal", p.optimal},
                     {"purity_assumed", true}};
    if (p.provenance) {
        j["family"] = std::string(construction_id(p.provenance->construction));
        j["s"] = p.provenance->s;
        j["t"] = p.provenance->t;
    } else {
        j["family"] = nullptr;
        j["s"] = nullptr;
        j["t"] = nullptr;
    }
    return j;
}

enum class TableFormat { Text, Json };

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

/// Deterministic table, ordered by (s, t).
inline std::string emit_table(std::span<const AqeccParams> list, TableFormat format) {
    if (list.empty()) throw std::invalid_argument("emit_table: empty code list");
    std::vector<AqeccParams> sorted(list.begin(), list.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const AqeccParams& a, const AqeccParams& b) {
        const auto key = [](const AqeccParams& p) {
            return p.provenance ? std::pair{p.provenance->s, p.provenance->t} : std::pair{i64{0}, i64{0}};
        };
        return key(a) < key(b);
    });
    const AqeccParams& head = sorted.front();
    if (format == TableFormat::Json) {
        nlohmann::json doc{{"q", head.q}, {"n", head.n}, {"count", sorted.size()}};
        if (head.provenance) {
            doc["construction"] = std::string(construction_id(head.provenance->construction));
            doc["lambda"] = head.provenance->lambda;
            doc["r"] = head.provenance->r;
        }
        auto& codes = doc["codes"] = nlohmann::json::array();
        for (const auto& p : sorted) codes.push_back(to_json(p));
        return dump_json(doc);
    }
    std::ostringstream os;
    os << "# ";
    if (head.provenance) os << "construction " << construction_id(head.provenance->construction) << "  ";
    os << "q=" << head.q << "  n=" << head.n;
    if (head.provenance) os << "  r=" << head.provenance->r;
    if (head.provenance && head.provenance->lambda > 0) os << "  lambda=" << head.provenance->lambda;
    os << "  codes=" << sorted.size() << "\n";
    for (const auto& p : sorted) {
        os << notation(p);
        if (p.provenance) os << "  s=" << p.provenance->s << " t=" << p.provenance->t;
        os << (p.optimal ? "  optimal" : "  NOT-OPTIMAL") << "\n";
    }
    return os.str();
}

}  // namespace aqcodes
