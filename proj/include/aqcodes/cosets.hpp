#pragma once

// q^2-cyclotomic cosets modulo rn, the root index set
// Omega = {1 + ir : 0 <= i < n}, defining sets and their Hermitian duals.
// Residues are always kept as least nonnegative residues mod rn.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqcodes/arith.hpp"
#include "aqcodes/family.hpp"

namespace aqcodes {

class CosetContext {
public:
    CosetContext(i64 q, i64 n, i64 r) : q_(q), n_(n), r_(r) {
        if (q < 2) throw std::invalid_argument("coset context: q must be at least 2");
        if (n < 1) throw std::invalid_argument("coset context: n must be positive");
        if (r < 1) throw std::invalid_argument("coset context: r must be positive");
        if (std::gcd(q, n) != 1) throw std::invalid_argument("coset context: gcd(q, n) must be 1");
        if (std::gcd(q, r) != 1) throw std::invalid_argument("coset context: gcd(q, r) must be 1");
        modulus_ = r * n;
        multiplier_ = mulmod(q, q, modulus_);
    }

    i64 q() const { return q_; }
    i64 n() const { return n_; }
    i64 r() const { return r_; }
    /// rn
    i64 modulus() const { return modulus_; }
    /// q^2 mod rn
    i64 multiplier() const { return multiplier_; }

    bool in_omega(i64 z) const { return z >= 0 && z < modulus_ && z % r_ == 1 % r_; }
    /// 1 + ir mod rn
    i64 omega_element(i64 i) const { return mod(1 + mod(i, n_) * r_, modulus_); }
    /// Inverse of omega_element on Omega.
    i64 omega_index(i64 z) const {
        if (!in_omega(z)) throw std::invalid_argument("residue " + std::to_string(z) + " is not in Omega");
        return mod(z - 1, modulus_) / r_;
    }
    /// The Hermitian dual only stays inside Omega when r | q + 1.
    bool supports_hermitian() const { return (q_ + 1) % r_ == 0; }

    friend bool operator==(const CosetContext&, const CosetContext&) = default;

private:
    i64 q_;
    i64 n_;
    i64 r_;
    i64 modulus_ = 1;
    i64 multiplier_ = 0;
};

/// C_j = {j q^{2k} mod rn : k >= 0}, sorted.
inline std::vector<i64> cyclotomic_coset(i64 j, const CosetContext& ctx) {
    if (j < 0 || j >= ctx.modulus()) throw std::out_of_range("cyclotomic_coset: residue out of range");
    std::vector<i64> orbit{j};
    for (i64 x = mulmod(j, ctx.multiplier(), ctx.modulus()); x != j; x = mulmod(x, ctx.multiplier(), ctx.modulus()))
        orbit.push_back(x);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

/// Omega in index order 1, 1 + r, 1 + 2r, ...
inline std::vector<i64> omega_set(const CosetContext& ctx) {
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(ctx.n()));
    for (i64 i = 0; i < ctx.n(); ++i) out.push_back(ctx.omega_element(i));
    return out;
}

/// Distinct cosets of Omega, ordered by their smallest member.
inline std::vector<std::vector<i64>> omega_cosets(const CosetContext& ctx) {
    std::set<i64> seen;
    std::vector<std::vector<i64>> out;
    auto omega = omega_set(ctx);
    std::sort(omega.begin(), omega.end());
    for (i64 z : omega) {
        if (seen.contains(z)) continue;
        auto c = cyclotomic_coset(z, ctx);
        seen.insert(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

class DefiningSet {
public:
    /// Validates that `members` lies in Omega and is a union of full cosets.
    static DefiningSet from_members(const CosetContext& ctx, std::vector<i64> members) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        std::vector<i64> outside;
        for (i64 z : members)
            if (!ctx.in_omega(z)) outside.push_back(z);
        if (!outside.empty()) throw std::invalid_argument("defining set: residues outside Omega: " + join(outside));
        std::set<i64> missing;
        for (i64 z : members)
            for (i64 x : cyclotomic_coset(z, ctx))
                if (!std::binary_search(members.begin(), members.end(), x)) missing.insert(x);
        if (!missing.empty())
            throw std::invalid_argument("defining set: not closed under q^2-cyclotomic cosets, missing " +
                                        join({missing.begin(), missing.end()}));
        return DefiningSet(ctx, std::move(members));
    }

    /// Union of the cosets of the given representatives.
    static DefiningSet union_of_cosets(const CosetContext& ctx, const std::vector<i64>& representatives) {
        std::vector<i64> members;
        for (i64 j : representatives) {
            const i64 z = mod(j, ctx.modulus());
            if (!ctx.in_omega(z)) throw std::invalid_argument("defining set: representative " + std::to_string(z) + " outside Omega");
            const auto c = cyclotomic_coset(z, ctx);
            members.insert(members.end(), c.begin(), c.end());
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        return DefiningSet(ctx, std::move(members));
    }

    static DefiningSet empty(const CosetContext& ctx) { return DefiningSet(ctx, {}); }
    static DefiningSet all(const CosetContext& ctx) {
        auto omega = omega_set(ctx);
        std::sort(omega.begin(), omega.end());
        return DefiningSet(ctx, std::move(omega));
    }

    const CosetContext& context() const { return ctx_; }
    const std::vector<i64>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(i64 z) const { return std::binary_search(members_.begin(), members_.end(), mod(z, ctx_.modulus())); }

    friend bool operator==(const DefiningSet&, const DefiningSet&) = default;

    static std::string join(const std::vector<i64>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
        return s + "}";
    }

private:
    DefiningSet(const CosetContext& ctx, std::vector<i64> members) : ctx_(ctx), members_(std::move(members)) {}

    CosetContext ctx_;
    std::vector<i64> members_;
};

inline CosetContext family_context(const FamilySpec& spec) { return {spec.q, spec.n, spec.r}; }

/// Representatives of the family's defining set for index s (or t), without
/// checking the family range. Constructions I/II: 1 + r(j-1) for
/// j = 1..index. Construction III: k - (q+1)j for j = 0..index, k = (q^2+1)/2.
inline std::vector<i64> family_representatives(const FamilySpec& spec, i64 index) {
    std::vector<i64> reps;
    if (is_third_construction(spec.construction)) {
        const i64 center = (spec.q * spec.q + 1) / 2;
        for (i64 j = 0; j <= index; ++j) reps.push_back(center - (spec.q + 1) * j);
    } else {
        for (i64 j = 1; j <= index; ++j) reps.push_back(1 + spec.r * (j - 1));
    }
    return reps;
}

/// Family defining set for any index up to the structural maximum; outside
/// the family range the result need not be dual-containing.
inline DefiningSet family_defining_set_extended(const FamilySpec& spec, i64 index) {
    const i64 lo = is_third_construction(spec.construction) ? 0 : 1;
    if (index < lo || index > spec.structural_max_index())
        throw std::out_of_range("family defining set: index " + std::to_string(index) + " out of [" +
                                std::to_string(lo) + ", " + std::to_string(spec.structural_max_index()) + "]");
    return DefiningSet::union_of_cosets(family_context(spec), family_representatives(spec, index));
}

/// Family defining set for index s (or t) inside the family's stated range.
inline DefiningSet family_defining_set(const FamilySpec& spec, i64 index) {
    if (index < spec.min_index || index > spec.max_index)
        throw ConstraintError("construction " + std::string(construction_id(spec.construction)) + ": index " +
                              std::to_string(index) + " outside [" + std::to_string(spec.min_index) + ", " +
                              std::to_string(spec.max_index) + "]");
    return family_defining_set_extended(spec, index);
}

namespace detail {
inline void require_hermitian(const CosetContext& ctx) {
    if (!ctx.supports_hermitian())
        throw std::invalid_argument("Hermitian dual requires r | q + 1 (r = " + std::to_string(ctx.r()) +
                                    ", q = " + std::to_string(ctx.q()) + ")");
}
inline i64 conjugate_residue(const CosetContext& ctx, i64 z) { return mulmod(-ctx.q(), z, ctx.modulus()); }
}  // namespace detail

/// Z^{perp H} = {z in Omega : -qz mod rn not in Z}
inline DefiningSet hermitian_dual_defining_set(const DefiningSet& z) {
    const auto& ctx = z.context();
    detail::require_hermitian(ctx);
    std::vector<i64> out;
    for (i64 x : omega_set(ctx))
        if (!z.contains(detail::conjugate_residue(ctx, x))) out.push_back(x);
    return DefiningSet::from_members(ctx, std::move(out));
}

/// C^{perp H} is contained in C iff no z in Z has -qz mod rn in Z.
inline bool is_dual_containing(const DefiningSet& z) {
    detail::require_hermitian(z.context());
    return std::none_of(z.members().begin(), z.members().end(),
                        [&](i64 x) { return z.contains(detail::conjugate_residue(z.context(), x)); });
}

/// C1 is a subcode of C2 iff Z2 is contained in Z1.
inline bool is_subcode(const DefiningSet& z1, const DefiningSet& z2) {
    if (!(z1.context() == z2.context())) throw std::invalid_argument("is_subcode: defining sets from different contexts");
    return std::includes(z1.members().begin(), z1.members().end(), z2.members().begin(), z2.members().end());
}

/// C1^{perp H} is contained in C2 iff no z in Z2 has -qz mod rn in Z1.
inline bool hermitian_dual_contained_in(const DefiningSet& z1, const DefiningSet& z2) {
    if (!(z1.context() == z2.context()))
        throw std::invalid_argument("dual containment: defining sets from different contexts");
    detail::require_hermitian(z1.context());
    return std::none_of(z2.members().begin(), z2.members().end(),
                        [&](i64 x) { return z1.contains(detail::conjugate_residue(z1.context(), x)); });
}

/// Length of the longest cyclic run of consecutive Omega indices i with
/// 1 + ir in Z; n when Z is all of Omega.
inline i64 longest_root_run(const DefiningSet& z) {
    const auto& ctx = z.context();
    const i64 n = ctx.n();
    if (static_cast<i64>(z.size()) == n) return n;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (i64 x : z.members()) hit[static_cast<std::size_t>(ctx.omega_index(x))] = true;
    i64 best = 0;
    i64 run = 0;
    // Two passes cover runs that wrap around index n-1 -> 0.
    for (i64 i = 0; i < 2 * n; ++i) {
        run = hit[static_cast<std::size_t>(i % n)] ? run + 1 : 0;
        best = std::max(best, run);
    }
    return std::min(best, n);
}

}  // namespace aqcodes
