#pragma once

// eta-constacyclic codes over GF(q^2) described by their defining sets.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqcodes/arith.hpp"
#include "aqcodes/cosets.hpp"
#include "aqcodes/family.hpp"
#include "aqcodes/field.hpp"
#include "aqcodes/matrix.hpp"
#include "aqcodes/polynomial.hpp"

namespace aqcodes {

using poly::Poly;

/// The splitting field of x^n - eta is beyond the table cap; only
/// combinatorial (bounds-only) results are available.
class SplittingFieldTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// d = L + 1 for the longest cyclic run L of consecutive roots
/// delta^{1+ir}; 1 for the empty set. Undefined for the zero code (Z = Omega).
inline i64 bch_designed_distance(const DefiningSet& z) {
    if (static_cast<i64>(z.size()) == z.context().n())
        throw std::domain_error("designed distance: zero code (Z = Omega) has no minimum distance");
    return longest_root_run(z) + 1;
}

class ConstacyclicCode {
public:
    /// The code with defining set `z` in F_{q^2}[x]/(x^n - eta), eta = w^eta_exponent.
    ConstacyclicCode(DefiningSet z, i64 eta_exponent) : z_(std::move(z)) {
        const auto& ctx = z_.context();
        base_ = gf::quadratic_field(ctx.q());
        const i64 group = base_->group_order();
        eta_exponent_ = mod(eta_exponent, group);
        if (group % ctx.r() != 0)
            throw std::invalid_argument("code: r = " + std::to_string(ctx.r()) + " does not divide q^2 - 1");
        const i64 eta_order = group / std::gcd(eta_exponent_, group);
        if (eta_order != ctx.r())
            throw std::invalid_argument("code: eta = w^" + std::to_string(eta_exponent_) + " has order " +
                                        std::to_string(eta_order) + ", expected r = " + std::to_string(ctx.r()));
    }

    static ConstacyclicCode from_family(const FamilySpec& spec, i64 index) {
        return {family_defining_set(spec, index), spec.eta_exponent};
    }
    static ConstacyclicCode from_family_extended(const FamilySpec& spec, i64 index) {
        return {family_defining_set_extended(spec, index), spec.eta_exponent};
    }

    const gf::Field& base_field() const { return *base_; }
    std::shared_ptr<const gf::Field> base_field_ptr() const { return base_; }
    const CosetContext& context() const { return z_.context(); }
    const DefiningSet& defining_set() const { return z_; }
    i64 q() const { return context().q(); }
    i64 length() const { return context().n(); }
    i64 dimension() const { return length() - static_cast<i64>(z_.size()); }
    bool is_zero_code() const { return dimension() == 0; }
    i64 eta_exponent() const { return eta_exponent_; }
    gf::Element eta() const { return base_->from_log(eta_exponent_); }
    i64 designed_distance() const { return bch_designed_distance(z_); }
    /// n - k + 1
    i64 singleton_bound() const { return length() - dimension() + 1; }

private:
    DefiningSet z_;
    std::shared_ptr<const gf::Field> base_;
    i64 eta_exponent_ = 0;
};

/// GF(q^{2m}) holding a primitive rn-th root of unity delta with delta^n = eta.
struct SplittingField {
    std::shared_ptr<const gf::Field> field;
    gf::Embedding embedding;
    int degree;  // m, over GF(q^2)
    i64 delta_log;  // delta = w_ext^delta_log
    gf::Element delta;
};

/// m is the multiplicative order of q^2 mod rn, times `degree_multiple`.
/// delta = w_ext^{a (Q-1)/(rn)} for the least a coprime to rn with
/// delta^n = eta; a = 1 whenever eta = w^{(q^2-1)/r} and m = 1.
inline SplittingField splitting_field(const ConstacyclicCode& code, int degree_multiple = 1) {
    const auto& ctx = code.context();
    const auto& base = code.base_field();
    const i64 rn = ctx.modulus();
    if (degree_multiple < 1) throw std::invalid_argument("splitting field: degree multiple must be positive");
    const i64 m = multiplicative_order(ctx.multiplier(), rn) * degree_multiple;
    const i64 p = base.characteristic();
    const i64 total_degree = static_cast<i64>(base.degree()) * m;
    if (!ipow_capped(p, static_cast<int>(std::min<i64>(total_degree, 64)), gf::kMaxFieldOrder))
        throw SplittingFieldTooLarge("splitting field GF(" + std::to_string(p) + "^" + std::to_string(total_degree) +
                                     ") exceeds the table cap");
    auto ext = gf::get_field(p, static_cast<int>(total_degree));
    gf::Embedding emb(code.base_field_ptr(), ext);
    const i64 group = ext->group_order();
    if (group % rn != 0) throw std::logic_error("splitting field: rn does not divide |GF(Q)*|");
    const i64 stride = group / rn;
    const gf::Element eta = emb(code.eta());
    for (i64 a = 1; a < std::max<i64>(2, rn); ++a) {
        if (std::gcd(a, rn) != 1) continue;
        const gf::Element delta = ext->from_log(a * stride);
        if (delta.pow(ctx.n()) == eta) return {ext, emb, static_cast<int>(m), mod(a * stride, group), delta};
    }
    throw std::logic_error("splitting field: no primitive rn-th root delta with delta^n = eta");
}

/// g(x) = prod_{j in Z} (x - delta^j), brought back to GF(q^2).
inline Poly generator_polynomial(const ConstacyclicCode& code, const SplittingField& sf) {
    const auto& ext = *sf.field;
    Poly g{ext.one()};
    for (i64 j : code.defining_set().members()) g = poly::mul(g, Poly{-sf.delta.pow(j), ext.one()});
    Poly out;
    out.reserve(g.size());
    for (const auto& c : g) {
        if (!sf.embedding.in_image(c))
            throw std::logic_error("generator polynomial: coefficient outside GF(q^2); wrong delta choice");
        out.push_back(*sf.embedding.restrict(c));
    }
    return out;
}

inline Poly generator_polynomial(const ConstacyclicCode& code) {
    return generator_polynomial(code, splitting_field(code));
}

/// Remainder of (x^n - eta) by g is zero.
inline bool divides_x_n_minus_eta(const ConstacyclicCode& code, const Poly& g) {
    const auto target = poly::x_n_minus(code.base_field(), static_cast<std::size_t>(code.length()), code.eta());
    return poly::divmod(target, g).remainder.empty();
}

/// {j in Omega : g(delta^j) = 0}, sorted.
inline std::vector<i64> defining_set_from_generator(const ConstacyclicCode& code, const Poly& g,
                                                    const SplittingField& sf) {
    Poly lifted;
    for (const auto& c : g) lifted.push_back(sf.embedding(c));
    std::vector<i64> roots;
    for (i64 j : omega_set(code.context()))
        if (poly::eval(lifted, sf.delta.pow(j)).is_zero()) roots.push_back(j);
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Rows x^i g(x), 0 <= i < k.
inline Matrix generator_matrix(const ConstacyclicCode& code, const Poly& g) {
    const auto n = static_cast<std::size_t>(code.length());
    const auto k = static_cast<std::size_t>(code.dimension());
    Matrix m(code.base_field(), k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < g.size(); ++j) m(i, i + j) = g[j];
    return m;
}

inline Matrix generator_matrix(const ConstacyclicCode& code) { return generator_matrix(code, generator_polynomial(code)); }

/// Operation caps for the exact-distance strategies.
struct DistanceBudget {
    std::uint64_t enumeration = 10'000'000;  // codewords, q^{2k}
    std::uint64_t mds = 1'000'000'000;       // C(n, w) w^3 with w = min(k, n-k)
};

enum class DistanceStrategy { Enumeration, MdsCertificate, Bounds };

inline const char* strategy_name(DistanceStrategy s) {
    switch (s) {
        case DistanceStrategy::Enumeration: return "enumeration";
        case DistanceStrategy::MdsCertificate: return "mds-certificate";
        case DistanceStrategy::Bounds: return "bounds";
    }
    return "?";
}

struct DistanceResult {
    DistanceStrategy strategy;
    i64 lower;  // BCH bound
    i64 upper;  // Singleton bound, tightened to n-k when MDS fails
    std::optional<i64> exact;
    bool budget_exhausted = false;
    i64 singleton = 0;  // n - k + 1

    bool mds() const { return exact.has_value() && *exact == singleton; }
};

namespace detail {

inline i64 enumerate_min_weight(const Matrix& g) {
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    const Field& f = g.field();
    const auto elements = f.elements();
    const std::size_t size = elements.size();
    i64 best = static_cast<i64>(n) + 1;
    // Minimum over messages whose highest nonzero digit is 1; weight is
    // invariant under scaling.
    for (std::size_t top = 0; top < k; ++top) {
        std::vector<Element> word = g.row(top);
        std::vector<std::size_t> digit(top, 0);
        for (;;) {
            const auto w = static_cast<i64>(std::count_if(word.begin(), word.end(), [](const Element& e) { return !e.is_zero(); }));
            best = std::min(best, w);
            std::size_t i = 0;
            for (; i < top; ++i) {
                const Element before = elements[digit[i]];
                digit[i] = (digit[i] + 1) % size;
                const Element delta = elements[digit[i]] - before;
                for (std::size_t c = 0; c < n; ++c) word[c] += delta * g(i, c);
                if (digit[i] != 0) break;
            }
            if (i == top) break;
        }
    }
    return best;
}

}  // namespace detail

/// Exact minimum distance by (a) enumeration, (b) MDS certification, or
/// (c) the [BCH, Singleton] sandwich, whichever fits the budget first.
inline DistanceResult min_distance_exact(const ConstacyclicCode& code, const DistanceBudget& budget = {}) {
    if (code.is_zero_code()) throw std::domain_error("minimum distance: zero code");
    const i64 n = code.length();
    const i64 k = code.dimension();
    DistanceResult result{DistanceStrategy::Bounds, code.designed_distance(), code.singleton_bound(), std::nullopt};
    result.singleton = code.singleton_bound();

    const auto q2 = static_cast<std::uint64_t>(code.base_field().order());
    std::uint64_t words = 1;
    for (i64 i = 0; i < k; ++i) words = saturating_mul(words, q2);
    const i64 w = std::min(k, n - k);
    const std::uint64_t mds_cost = saturating_mul(binomial_saturating(n, w), saturating_mul(static_cast<std::uint64_t>(w * w), static_cast<std::uint64_t>(w)));

    if (words <= budget.enumeration || mds_cost <= budget.mds) {
        const Matrix g = generator_matrix(code);
        if (words <= budget.enumeration) {
            result.strategy = DistanceStrategy::Enumeration;
            result.exact = detail::enumerate_min_weight(g);
            result.lower = result.upper = *result.exact;
            return result;
        }
        const Matrix check = [&] {
            if (k <= n - k) return g;
            auto h = systematic_parity_check(g);
            if (!h) throw std::logic_error("minimum distance: generator matrix has no systematic form");
            return *h;
        }();
        switch (all_column_subsets_independent(check, budget.mds)) {
            case SubsetSearch::AllIndependent:
                result.strategy = DistanceStrategy::MdsCertificate;
                result.exact = n - k + 1;
                result.lower = result.upper = n - k + 1;
                return result;
            case SubsetSearch::DependentFound:
                result.upper = n - k;
                break;
            case SubsetSearch::BudgetExhausted:
                result.budget_exhausted = true;
                break;
        }
    }
    if (result.lower == result.upper) result.exact = result.lower;
    return result;
}

/// Basis of C^{perp H}: the null space of the generator matrix with every
/// entry raised to the q-th power.
inline Matrix hermitian_dual_basis(const ConstacyclicCode& c) {
    const Matrix g = generator_matrix(c);
    Matrix conj(g.field(), g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) conj(i, j) = g(i, j).pow(c.q());
    return nullspace(conj);
}

/// <x, y>_H = sum x_i y_i^q vanishes for every row x of a and row y of b.
inline bool hermitian_orthogonal(const Matrix& a, const Matrix& b, i64 q) {
    if (a.cols() != b.cols()) throw std::invalid_argument("oracle: vectors of different lengths");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) {
            gf::Element acc = a.field().zero();
            for (std::size_t c = 0; c < a.cols(); ++c) acc += a(i, c) * b(j, c).pow(q);
            if (!acc.is_zero()) return false;
        }
    return true;
}

/// Independent check of C_A^{perp H} in C_B from generator matrices alone:
/// it holds iff C_A^{perp H} is orthogonal to C_B^{perp H}.
inline bool hermitian_inner_product_oracle(const ConstacyclicCode& a, const ConstacyclicCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("oracle: codes have different lengths");
    if (a.q() != b.q()) throw std::invalid_argument("oracle: codes over different fields");
    return hermitian_orthogonal(hermitian_dual_basis(a), hermitian_dual_basis(b), a.q());
}

}  // namespace aqcodes
