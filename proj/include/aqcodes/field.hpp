#pragma once

// Table-driven arithmetic in GF(p^m).
//
// Nonzero elements are stored as discrete logarithms to a fixed primitive
// element w. Multiplication is exponent addition; addition goes through a
// Zech-logarithm table, Z(e) = log(1 + w^e).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aqcodes/arith.hpp"

namespace aqcodes::gf {

/// Largest field order backed by tables.
inline constexpr i64 kMaxFieldOrder = i64{1} << 24;

class Field;

class Element {
public:
    static constexpr std::uint32_t kZeroLog = 0xFFFFFFFFU;

    /// Unbound element; any arithmetic on it throws.
    Element() = default;

    const Field& field() const {
        if (field_ == nullptr) throw std::logic_error("element is not bound to a field");
        return *field_;
    }
    const Field* field_ptr() const { return field_; }

    bool is_zero() const { return log_ == kZeroLog; }
    bool is_one() const { return log_ == 0; }

    /// Exponent e with element = w^e; throws for zero.
    std::uint32_t log() const {
        if (is_zero()) throw std::domain_error("log of zero");
        return log_;
    }
    std::uint32_t raw_log() const { return log_; }

    Element operator-() const;
    Element inverse() const;
    Element pow(i64 k) const;

    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator/(const Element& a, const Element& b);

    friend bool operator==(const Element& a, const Element& b) {
        return a.field_ == b.field_ && a.log_ == b.log_;
    }

private:
    friend class Field;
    Element(const Field* f, std::uint32_t log) : field_(f), log_(log) {}

    const Field* field_ = nullptr;
    std::uint32_t log_ = kZeroLog;
};

namespace detail {

// Dense polynomials over the prime field GF(p), coefficients low-to-high.
using PrimePoly = std::vector<i64>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly poly_rem(PrimePoly a, const PrimePoly& f, i64 p) {
    trim(a);
    const auto df = static_cast<std::ptrdiff_t>(f.size()) - 1;
    const i64 lead_inv = inverse_mod(f.back(), p);
    while (static_cast<std::ptrdiff_t>(a.size()) - 1 >= df && !a.empty()) {
        const i64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i) a[shift + i] = mod(a[shift + i] - c * f[i], p);
        trim(a);
    }
    return a;
}

inline PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, i64 p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
    return poly_rem(std::move(r), f, p);
}

inline PrimePoly poly_powmod(PrimePoly base, u64 e, const PrimePoly& f, i64 p) {
    PrimePoly result = poly_rem({1}, f, p);
    base = poly_rem(std::move(base), f, p);
    while (e != 0) {
        if (e & 1U) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1U;
    }
    return result;
}

inline PrimePoly poly_gcd(PrimePoly a, PrimePoly b, i64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = poly_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

}  // namespace detail

/// Ben-Or irreducibility test for a monic f over GF(p).
inline bool is_irreducible(const std::vector<i64>& f, i64 p) {
    const auto m = static_cast<int>(f.size()) - 1;
    if (m < 1) return false;
    if (m == 1) return true;
    const detail::PrimePoly x{0, 1};
    detail::PrimePoly h = x;
    for (int i = 1; i <= m / 2; ++i) {
        h = detail::poly_powmod(h, static_cast<u64>(p), f, p);
        detail::PrimePoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = mod(diff[1] - 1, p);
        detail::trim(diff);
        if (diff.empty()) return false;
        if (detail::poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

/// True when x generates the unit group of GF(p)[x]/(f), i.e. f is primitive.
inline bool is_primitive_modulus(const std::vector<i64>& f, i64 p) {
    const auto m = static_cast<int>(f.size()) - 1;
    const auto order = ipow_capped(p, m);
    if (!order) return false;
    const i64 group = *order - 1;
    const detail::PrimePoly x{0, 1};
    const detail::PrimePoly one{1};
    if (detail::poly_powmod(x, static_cast<u64>(group), f, p) != one) return false;
    for (const i64 l : prime_factors(group))
        if (detail::poly_powmod(x, static_cast<u64>(group / l), f, p) == one) return false;
    return true;
}

class Field {
public:
    /// Builds GF(p^m) on the first primitive monic modulus, ordering
    /// candidates lexicographically by their coefficient list c0, c1, ...
    Field(i64 p, int m) : p_(p), m_(m) {
        if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw std::invalid_argument("field: extension degree must be positive");
        const auto order = ipow_capped(p, m, kMaxFieldOrder);
        if (!order)
            throw std::invalid_argument("field: order " + std::to_string(p) + "^" + std::to_string(m) +
                                        " exceeds table cap 2^24");
        order_ = static_cast<std::uint32_t>(*order);
        group_ = order_ - 1;
        modulus_ = find_modulus();
        if (!is_irreducible(modulus_, p_)) throw std::logic_error("field: selected modulus is reducible");
        build_tables();
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    i64 characteristic() const { return p_; }
    int degree() const { return m_; }
    std::uint32_t order() const { return order_; }
    /// Order of the multiplicative group, p^m - 1.
    std::uint32_t group_order() const { return group_; }
    /// Monic modulus, coefficients low-to-high (leading 1 included).
    const std::vector<i64>& modulus() const { return modulus_; }

    Element zero() const { return {this, Element::kZeroLog}; }
    Element one() const { return {this, 0}; }
    Element primitive() const { return from_log(1); }
    Element from_log(i64 e) const { return {this, static_cast<std::uint32_t>(mod(e, group_))}; }

    /// Element from its polynomial-basis integer sum c_i p^i.
    Element from_int(std::uint32_t v) const {
        if (v >= order_) throw std::out_of_range("field: integer representation out of range");
        return {this, log_[v]};
    }
    /// Prime-field element a mod p.
    Element from_prime(i64 a) const { return from_int(static_cast<std::uint32_t>(mod(a, p_))); }

    std::uint32_t to_int(const Element& a) const {
        check(a);
        return a.is_zero() ? 0U : exp_[a.log_];
    }

    std::vector<i64> to_coefficients(const Element& a) const {
        std::uint32_t v = to_int(a);
        std::vector<i64> c(static_cast<std::size_t>(m_), 0);
        for (auto& d : c) {
            d = v % p_;
            v /= static_cast<std::uint32_t>(p_);
        }
        return c;
    }

    /// All elements: zero first, then w^0, w^1, ...
    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(order_);
        out.push_back(zero());
        for (std::uint32_t e = 0; e < group_; ++e) out.push_back({this, e});
        return out;
    }

    // Raw exponent arithmetic; kZeroLog encodes zero.
    std::uint32_t add_logs(std::uint32_t a, std::uint32_t b) const {
        if (a == Element::kZeroLog) return b;
        if (b == Element::kZeroLog) return a;
        const std::uint32_t d = b >= a ? b - a : b + group_ - a;
        const std::uint32_t z = zech_[d];
        if (z == Element::kZeroLog) return z;
        const std::uint32_t s = a + z;
        return s >= group_ ? s - group_ : s;
    }
    std::uint32_t mul_logs(std::uint32_t a, std::uint32_t b) const {
        if (a == Element::kZeroLog || b == Element::kZeroLog) return Element::kZeroLog;
        const std::uint32_t s = a + b;
        return s >= group_ ? s - group_ : s;
    }
    std::uint32_t neg_log(std::uint32_t a) const { return mul_logs(a, neg_one_log_); }

private:
    friend class Element;

    void check(const Element& a) const {
        if (a.field_ != this) throw std::invalid_argument("field: element belongs to a different field");
    }

    std::vector<i64> find_modulus() const {
        std::vector<i64> low(static_cast<std::size_t>(m_), 0);
        for (;;) {
            std::vector<i64> f = low;
            f.push_back(1);
            if (low[0] != 0 && is_primitive_modulus(f, p_)) return f;
            // Odometer with c0 as the most significant digit.
            int i = m_ - 1;
            while (i >= 0 && low[static_cast<std::size_t>(i)] == p_ - 1) low[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) throw std::logic_error("field: no primitive modulus found");
            ++low[static_cast<std::size_t>(i)];
        }
    }

    void build_tables() {
        exp_.assign(group_, 0);
        log_.assign(order_, Element::kZeroLog);
        const auto m = static_cast<std::size_t>(m_);
        std::vector<i64> digits(m, 0);
        digits[0] = 1;
        std::vector<std::uint32_t> place(m, 1);
        for (std::size_t i = 1; i < m; ++i) place[i] = place[i - 1] * static_cast<std::uint32_t>(p_);
        for (std::uint32_t e = 0; e < group_; ++e) {
            std::uint32_t v = 0;
            for (std::size_t i = 0; i < m; ++i) v += static_cast<std::uint32_t>(digits[i]) * place[i];
            if (log_[v] != Element::kZeroLog) throw std::logic_error("field: modulus root is not primitive");
            exp_[e] = v;
            log_[v] = e;
            // Multiply by x and reduce by the monic modulus.
            const i64 top = digits[m - 1];
            for (std::size_t i = m - 1; i > 0; --i) digits[i] = mod(digits[i - 1] - top * modulus_[i], p_);
            digits[0] = mod(-top * modulus_[0], p_);
        }
        zech_.assign(group_, Element::kZeroLog);
        for (std::uint32_t e = 0; e < group_; ++e) {
            const std::uint32_t v = exp_[e];
            const std::uint32_t low = v % static_cast<std::uint32_t>(p_);
            const std::uint32_t plus_one = v - low + (low + 1) % static_cast<std::uint32_t>(p_);
            zech_[e] = log_[plus_one];
        }
        neg_one_log_ = p_ == 2 ? 0 : group_ / 2;
    }

    i64 p_;
    int m_;
    std::uint32_t order_ = 0;
    std::uint32_t group_ = 0;
    std::vector<i64> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
    std::uint32_t neg_one_log_ = 0;
};

namespace detail {
inline const Field& common_field(const Element& a, const Element& b) {
    if (a.field_ptr() == nullptr || a.field_ptr() != b.field_ptr())
        throw std::invalid_argument("field: operands belong to different fields");
    return *a.field_ptr();
}
}  // namespace detail

inline Element operator+(const Element& a, const Element& b) {
    const Field& f = detail::common_field(a, b);
    return {&f, f.add_logs(a.log_, b.log_)};
}

inline Element Element::operator-() const {
    const Field& f = field();
    return {&f, f.neg_log(log_)};
}

inline Element operator-(const Element& a, const Element& b) { return a + (-b); }

inline Element operator*(const Element& a, const Element& b) {
    const Field& f = detail::common_field(a, b);
    return {&f, f.mul_logs(a.log_, b.log_)};
}

inline Element Element::inverse() const {
    const Field& f = field();
    if (is_zero()) throw std::domain_error("field: inverse of zero");
    return {&f, log_ == 0 ? 0U : f.group_ - log_};
}

inline Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }

inline Element Element::pow(i64 k) const {
    const Field& f = field();
    if (is_zero()) {
        if (k < 0) throw std::domain_error("field: negative power of zero");
        return k == 0 ? f.one() : *this;
    }
    return {&f, static_cast<std::uint32_t>(mulmod(log_, k, f.group_))};
}

inline std::ostream& operator<<(std::ostream& os, const Element& a) {
    if (a.is_zero()) return os << "0";
    return os << "w^" << a.raw_log();
}

/// Process-wide cache; fields are immutable and live for the whole run.
inline std::shared_ptr<const Field> get_field(i64 p, int m) {
    static std::mutex mutex;
    static std::map<std::pair<i64, int>, std::shared_ptr<const Field>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[{p, m}];
    if (!slot) {
        try {
            slot = std::make_shared<const Field>(p, m);
        } catch (...) {
            cache.erase({p, m});
            throw;
        }
    }
    return slot;
}

/// GF(q^2) for a prime power q.
inline std::shared_ptr<const Field> quadratic_field(i64 q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return get_field(pp->p, 2 * pp->e);
}

/// Field homomorphism from a subfield into an extension of the same
/// characteristic. The base primitive element maps to the conjugate root of
/// its modulus of the form w_ext^(stride * u) with the least admissible u.
class Embedding {
public:
    Embedding(std::shared_ptr<const Field> base, std::shared_ptr<const Field> ext)
        : base_(std::move(base)), ext_(std::move(ext)) {
        if (base_->characteristic() != ext_->characteristic() || ext_->degree() % base_->degree() != 0)
            throw std::invalid_argument("embed: extension order incompatible (" +
                                        std::to_string(base_->group_order()) + " does not divide " +
                                        std::to_string(ext_->group_order()) + ")");
        stride_ = ext_->group_order() / base_->group_order();
        const i64 n = base_->group_order();
        for (i64 u = 1; u <= n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            const Element root = ext_->from_log(static_cast<i64>(stride_) * u);
            Element acc = ext_->zero();
            const auto& f = base_->modulus();
            for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * root + ext_->from_prime(*it);
            if (acc.is_zero()) {
                root_multiplier_ = u;
                root_multiplier_inv_ = inverse_mod(u, n);
                return;
            }
        }
        throw std::logic_error("embed: base modulus has no root in extension");
    }

    const Field& base() const { return *base_; }
    const Field& ext() const { return *ext_; }
    std::uint32_t stride() const { return stride_; }

    Element operator()(const Element& a) const {
        if (a.field_ptr() != base_.get()) throw std::invalid_argument("embed: element not in base field");
        if (a.is_zero()) return ext_->zero();
        return ext_->from_log(static_cast<i64>(stride_) * mulmod(a.log(), root_multiplier_, base_->group_order()));
    }

    /// x lies in the embedded subfield iff x^(|base|) = x.
    bool in_image(const Element& x) const { return x.pow(base_->order()) == x; }

    /// Preimage of an element of the embedded subfield.
    std::optional<Element> restrict(const Element& x) const {
        if (x.field_ptr() != ext_.get()) throw std::invalid_argument("embed: element not in extension field");
        if (x.is_zero()) return base_->zero();
        if (x.log() % stride_ != 0) return std::nullopt;
        return base_->from_log(mulmod(x.log() / stride_, root_multiplier_inv_, base_->group_order()));
    }

private:
    std::shared_ptr<const Field> base_;
    std::shared_ptr<const Field> ext_;
    std::uint32_t stride_ = 1;
    i64 root_multiplier_ = 1;
    i64 root_multiplier_inv_ = 1;
};

}  // namespace aqcodes::gf
