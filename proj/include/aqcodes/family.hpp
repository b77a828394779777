#pragma once

// The six constacyclic code families and their hypotheses.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aqcodes/arith.hpp"

namespace aqcodes {

/// A family hypothesis (parity, divisibility, congruence, range) failed.
class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Construction {
    NegacyclicI,      // n = (q^2-1)/2, r = 2
    GeneralRI,        // n = lambda(q-1), r = (q+1)/lambda even, r != 2
    LambdaQPlusOne,   // n = lambda(q+1), lambda odd, negacyclic
    TwoLambdaQPlusOne,// n = 2 lambda(q+1), q = 1 mod 4, negacyclic
    ThirdPlus,        // n = (q^2+1)/5, q = 20m+3 or 20m+7
    ThirdMinus,       // n = (q^2+1)/5, q = 20m-3 or 20m-7
};

inline constexpr Construction kAllConstructions[] = {
    Construction::NegacyclicI,       Construction::GeneralRI, Construction::LambdaQPlusOne,
    Construction::TwoLambdaQPlusOne, Construction::ThirdPlus, Construction::ThirdMinus,
};

inline std::string_view construction_id(Construction c) {
    switch (c) {
        case Construction::NegacyclicI: return "I";
        case Construction::GeneralRI: return "Ir";
        case Construction::LambdaQPlusOne: return "II";
        case Construction::TwoLambdaQPlusOne: return "II2";
        case Construction::ThirdPlus: return "III+";
        case Construction::ThirdMinus: return "III-";
    }
    return "?";
}

inline std::optional<Construction> parse_construction(std::string_view id) {
    for (auto c : kAllConstructions)
        if (construction_id(c) == id) return c;
    return std::nullopt;
}

/// Constructions I and II index defining sets by a coset count (1-based);
/// Construction III by the largest offset j of C_{k-(q+1)j} (0-based).
inline bool is_third_construction(Construction c) {
    return c == Construction::ThirdPlus || c == Construction::ThirdMinus;
}

struct FamilySpec {
    Construction construction;
    i64 q;
    i64 lambda;  // 0 for Construction III
    i64 r;
    i64 n;
    i64 eta_exponent;  // eta = w^eta_exponent in GF(q^2)
    i64 min_index;
    i64 max_index;

    /// Size of the defining set for a given s or t.
    i64 defining_set_size(i64 index) const { return is_third_construction(construction) ? 2 * index + 1 : index; }
    /// Designed distance of the classical code for a given s or t.
    i64 designed_distance(i64 index) const { return defining_set_size(index) + 1; }
    /// Largest index with a well-formed (proper) defining set.
    i64 structural_max_index() const { return is_third_construction(construction) ? n / 2 - 1 : n - 1; }
    /// Number of (s, t) pairs with min <= t <= s <= max.
    i64 pair_count() const {
        const i64 w = max_index - min_index + 1;
        return w * (w + 1) / 2;
    }
};

namespace detail {

[[noreturn]] inline void violated(Construction c, const std::string& what) {
    throw ConstraintError("construction " + std::string(construction_id(c)) + ": " + what);
}

inline void require_odd_prime_power(Construction c, i64 q) {
    if (!is_prime_power(q)) violated(c, "q = " + std::to_string(q) + " must be a prime power");
    if (q % 2 == 0) violated(c, "q = " + std::to_string(q) + " must be odd");
}

inline void require_odd_divisor(Construction c, i64 lambda, i64 of, const std::string& of_name) {
    if (lambda < 1) violated(c, "λ must be positive");
    if (lambda % 2 == 0) violated(c, "λ must be odd");
    if (of % lambda != 0) violated(c, "λ = " + std::to_string(lambda) + " must divide " + of_name);
}

// q = 20m + a with m >= 1, for one of the listed offsets.
inline bool has_form(i64 q, i64 offset) {
    const i64 rest = q - offset;
    return rest % 20 == 0 && rest / 20 >= 1;
}

}  // namespace detail

/// Validates a family's hypotheses and derives n, r, eta and the (s, t)
/// range. `lambda` and `r` are only consulted where the family has them.
inline FamilySpec make_family(Construction c, i64 q, std::optional<i64> lambda = std::nullopt,
                              std::optional<i64> r = std::nullopt) {
    using detail::violated;
    detail::require_odd_prime_power(c, q);
    const i64 field_group = q * q - 1;
    FamilySpec spec{c, q, 0, 2, 0, field_group / 2, 1, 0};
    switch (c) {
        case Construction::NegacyclicI:
            if (r && *r != 2) violated(c, "r must be 2 (negacyclic)");
            if (lambda && *lambda != (q + 1) / 2) violated(c, "λ must equal (q+1)/2");
            spec.lambda = (q + 1) / 2;
            spec.n = field_group / 2;
            spec.max_index = q - 1;
            break;
        case Construction::GeneralRI: {
            if (!r && !lambda) violated(c, "needs r or λ");
            if (r && (*r < 1 || (q + 1) % *r != 0)) violated(c, "r = " + std::to_string(*r) + " must divide q+1");
            if (lambda && (*lambda < 1 || (q + 1) % *lambda != 0))
                violated(c, "λ = " + std::to_string(*lambda) + " must divide q+1");
            const i64 rv = r ? *r : (q + 1) / *lambda;
            if (lambda && *lambda * rv != q + 1) violated(c, "λ must equal (q+1)/r");
            if (rv % 2 != 0) violated(c, "r = " + std::to_string(rv) + " must be even");
            if (rv == 2) violated(c, "r must differ from 2 (use construction I)");
            spec.r = rv;
            spec.lambda = (q + 1) / rv;
            spec.n = spec.lambda * (q - 1);
            spec.eta_exponent = spec.lambda * (q - 1);
            spec.max_index = (q - 1) / 2;
            break;
        }
        case Construction::LambdaQPlusOne:
            if (!lambda) violated(c, "needs λ");
            if (r && *r != 2) violated(c, "r must be 2 (negacyclic)");
            detail::require_odd_divisor(c, *lambda, q - 1, "q-1");
            spec.lambda = *lambda;
            spec.n = *lambda * (q + 1);
            spec.max_index = (q - 1) / 2 + *lambda;
            break;
        case Construction::TwoLambdaQPlusOne:
            if (!lambda) violated(c, "needs λ");
            if (r && *r != 2) violated(c, "r must be 2 (negacyclic)");
            if (q % 4 != 1) violated(c, "q = " + std::to_string(q) + " must be 1 mod 4");
            detail::require_odd_divisor(c, *lambda, q - 1, "q-1");
            spec.lambda = *lambda;
            spec.n = 2 * *lambda * (q + 1);
            spec.max_index = (q - 1) / 2 + 2 * *lambda;
            break;
        case Construction::ThirdPlus:
        case Construction::ThirdMinus: {
            const bool plus = c == Construction::ThirdPlus;
            const bool ok = plus ? (detail::has_form(q, 3) || detail::has_form(q, 7))
                                 : (detail::has_form(q, -3) || detail::has_form(q, -7));
            if (!ok)
                violated(c, "q = " + std::to_string(q) + (plus ? " must be 20m+3 or 20m+7" : " must be 20m-3 or 20m-7") +
                                " with m a positive integer");
            if (r && *r != q + 1) violated(c, "r must be q+1");
            spec.r = q + 1;
            spec.n = (q * q + 1) / 5;
            spec.eta_exponent = q - 1;
            spec.min_index = 0;
            spec.max_index = plus ? (q + 1) / 4 : (q - 1) / 4;
            break;
        }
    }
    if (std::gcd(q, spec.n) != 1) violated(c, "gcd(q, n) must be 1");
    return spec;
}

/// Every family instance whose hypotheses hold for q, in construction order
/// and then by increasing r (Ir) or lambda (II, II2).
inline std::vector<FamilySpec> valid_families(i64 q) {
    std::vector<FamilySpec> out;
    if (!is_prime_power(q) || q % 2 == 0) return out;
    auto attempt = [&](Construction c, std::optional<i64> lambda, std::optional<i64> r) {
        try {
            out.push_back(make_family(c, q, lambda, r));
        } catch (const ConstraintError&) {
        }
    };
    attempt(Construction::NegacyclicI, std::nullopt, std::nullopt);
    for (i64 r = 4; r <= q + 1; r += 2)
        if ((q + 1) % r == 0) attempt(Construction::GeneralRI, std::nullopt, r);
    for (i64 lambda = 1; lambda <= q - 1; lambda += 2)
        if ((q - 1) % lambda == 0) attempt(Construction::LambdaQPlusOne, lambda, std::nullopt);
    for (i64 lambda = 1; lambda <= q - 1; lambda += 2)
        if ((q - 1) % lambda == 0) attempt(Construction::TwoLambdaQPlusOne, lambda, std::nullopt);
    attempt(Construction::ThirdPlus, std::nullopt, std::nullopt);
    attempt(Construction::ThirdMinus, std::nullopt, std::nullopt);
    return out;
}

}  // namespace aqcodes
