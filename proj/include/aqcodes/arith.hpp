#pragma once

// Integer helpers shared by the field, coset and code layers.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aqcodes {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Least nonnegative residue of a modulo m (m > 0).
constexpr i64 mod(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

constexpr i64 powmod(i64 base, u64 exp, i64 m) {
    i64 result = 1 % m;
    base = mod(base, m);
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

constexpr bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

struct PrimePower {
    i64 p;
    int e;
};

/// Decomposes q = p^e, or nullopt when q is not a prime power.
inline std::optional<PrimePower> as_prime_power(i64 q) {
    if (q < 2) return std::nullopt;
    const auto f = prime_factors(q);
    if (f.size() != 1) return std::nullopt;
    int e = 0;
    for (i64 x = q; x > 1; x /= f[0]) ++e;
    return PrimePower{f[0], e};
}

inline bool is_prime_power(i64 q) { return as_prime_power(q).has_value(); }

/// Overflow-checked integer power; nullopt past `cap`.
inline std::optional<i64> ipow_capped(i64 base, int exp, i64 cap = std::numeric_limits<i64>::max()) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return std::nullopt;
        r *= base;
    }
    if (r > cap) return std::nullopt;
    return r;
}

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
inline i64 multiplicative_order(i64 a, i64 m) {
    if (m == 1) return 1;
    if (std::gcd(mod(a, m), m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
    i64 order = 1;
    i64 x = mod(a, m);
    while (x != 1) {
        x = mulmod(x, a, m);
        ++order;
    }
    return order;
}

/// Modular inverse of a modulo m; requires gcd(a, m) = 1.
inline i64 inverse_mod(i64 a, i64 m) {
    i64 old_r = mod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        const i64 quot = old_r / r;
        old_r = std::exchange(r, old_r - quot * r);
        old_s = std::exchange(s, old_s - quot * s);
    }
    if (old_r != 1) throw std::invalid_argument("inverse_mod: not invertible");
    return mod(old_s, m);
}

/// Binomial coefficient saturating at u64 max.
inline u64 binomial_saturating(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    constexpr auto kMax = std::numeric_limits<u64>::max();
    for (i64 i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (r > kMax) return kMax;
    }
    return static_cast<u64>(r);
}

inline u64 saturating_mul(u64 a, u64 b) {
    if (a != 0 && b > std::numeric_limits<u64>::max() / a) return std::numeric_limits<u64>::max();
    return a * b;
}

}  // namespace aqcodes
