#pragma once

// Dense univariate polynomials over a table field, coefficients low-to-high.
// The zero polynomial is the empty vector.

#include <stdexcept>
#include <utility>
#include <vector>

#include "aqcodes/field.hpp"

namespace aqcodes::poly {

using gf::Element;
using gf::Field;
using Poly = std::vector<Element>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Poly trimmed(Poly a) {
    trim(a);
    return a;
}

/// Degree, or -1 for the zero polynomial.
inline long degree(const Poly& a) {
    for (auto i = static_cast<long>(a.size()) - 1; i >= 0; --i)
        if (!a[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

inline Poly monomial(const Field& f, std::size_t deg, const Element& coeff) {
    Poly r(deg + 1, f.zero());
    r[deg] = coeff;
    return trimmed(std::move(r));
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const Field& f = a.front().field();
    Poly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return trimmed(std::move(r));
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) {
        if (b.empty()) return a;
        a.resize(b.size(), b.front().field().zero());
    }
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return trimmed(std::move(a));
}

struct DivMod {
    Poly quotient;
    Poly remainder;
};

inline DivMod divmod(Poly a, Poly b) {
    trim(a);
    trim(b);
    if (b.empty()) throw std::domain_error("poly: division by zero polynomial");
    const Field& f = b.front().field();
    if (a.size() < b.size()) return {{}, std::move(a)};
    Poly q(a.size() - b.size() + 1, f.zero());
    const Element lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const Element c = a.back() * lead_inv;
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return {trimmed(std::move(q)), std::move(a)};
}

inline Element eval(const Poly& a, const Element& x) {
    Element acc = x.field().zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// x^n - eta
inline Poly x_n_minus(const Field& f, std::size_t n, const Element& eta) {
    Poly r(n + 1, f.zero());
    r[0] = -eta;
    r[n] = f.one();
    return trimmed(std::move(r));
}

}  // namespace aqcodes::poly
