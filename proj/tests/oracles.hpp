#pragma once

// Test-only reference computations. Nothing here calls into the coset or
// code layers; they are brute-force restatements of the definitions.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "aqcodes/arith.hpp"

namespace oracle {

using aqcodes::i64;

/// Orbit of j under multiplication by q^2 mod rn, by repeated multiplication.
inline std::set<i64> orbit(i64 j, i64 q, i64 rn) {
    std::set<i64> out;
    i64 x = j % rn;
    while (out.insert(x).second) x = (x * (q * q % rn)) % rn;
    return out;
}

inline std::set<i64> omega(i64 n, i64 r) {
    std::set<i64> out;
    for (i64 i = 0; i < n; ++i) out.insert((1 + i * r) % (r * n));
    return out;
}

inline i64 neg_q_times(i64 z, i64 q, i64 rn) { return (((-q * z) % rn) + rn) % rn; }

/// No z in Z has -qz mod rn in Z.
inline bool dual_containing(const std::set<i64>& z, i64 q, i64 rn) {
    for (i64 x : z)
        if (z.contains(neg_q_times(x, q, rn))) return false;
    return true;
}

/// Structure of the q^2-cyclotomic cosets of Omega for n = (q^2+1)/5,
/// r = q+1, k = (q^2+1)/2: C_k and C_{k+n(q+1)/2} are singletons,
/// C_{k-(q+1)j} = {k-(q+1)j, k+(q+1)j} for 1 <= j <= n/2-1, and together
/// they partition Omega. Returns an empty string on success.
inline std::string third_construction_coset_structure(i64 q) {
    const i64 n = (q * q + 1) / 5;
    const i64 r = q + 1;
    const i64 rn = r * n;
    const i64 k = (q * q + 1) / 2;
    const auto om = omega(n, r);
    std::set<i64> covered;
    auto expect = [&](std::set<i64> want, i64 rep) -> std::string {
        const auto got = orbit(rep, q, rn);
        if (got != want) return "coset of " + std::to_string(rep) + " has unexpected shape";
        for (i64 x : got) {
            if (!om.contains(x)) return std::to_string(x) + " not in Omega";
            if (!covered.insert(x).second) return "cosets overlap at " + std::to_string(x);
        }
        return {};
    };
    if (auto e = expect({k % rn}, k); !e.empty()) return e;
    const i64 other = (k + n * (q + 1) / 2) % rn;
    if (auto e = expect({other}, other); !e.empty()) return e;
    for (i64 j = 1; j <= n / 2 - 1; ++j) {
        const i64 lo = aqcodes::mod(k - (q + 1) * j, rn);
        const i64 hi = aqcodes::mod(k + (q + 1) * j, rn);
        if (auto e = expect({lo, hi}, lo); !e.empty()) return e;
    }
    if (covered != om) return "cosets do not cover Omega";
    return {};
}

}  // namespace oracle
