#pragma once

// Small dense matrices over a table field: row reduction, null spaces and the
// "every w columns independent" search used for MDS certification.

#include <atomic>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "aqcodes/field.hpp"

namespace aqcodes {

using gf::Element;
using gf::Field;

class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Element> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    const Field* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t r = lead_row;
        while (r < m.rows() && m(r, c).is_zero()) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(r, lead_row);
        const Element inv = m(lead_row, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead_row || m(i, c).is_zero()) continue;
            const Element factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(lead_row, j);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m).size(); }

/// Basis of {x : m x = 0}, one vector per row of the result.
inline Matrix nullspace(const Matrix& m) {
    Matrix r = m;
    const auto pivots = row_reduce(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix basis(m.field(), m.cols() - pivots.size(), m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(out, free) = m.field().one();
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = -r(i, free);
        ++out;
    }
    return basis;
}

/// For a full-rank k x n generator matrix whose first k columns are
/// independent, the parity-check matrix [-A^T | I] of its systematic form.
inline std::optional<Matrix> systematic_parity_check(const Matrix& g) {
    Matrix r = g;
    const auto pivots = row_reduce(r);
    const std::size_t k = g.rows();
    if (pivots.size() != k) return std::nullopt;
    for (std::size_t i = 0; i < k; ++i)
        if (pivots[i] != i) return std::nullopt;
    const std::size_t redundancy = g.cols() - k;
    Matrix h(g.field(), redundancy, g.cols());
    for (std::size_t i = 0; i < redundancy; ++i) {
        for (std::size_t j = 0; j < k; ++j) h(i, j) = -r(j, k + i);
        h(i, k + i) = g.field().one();
    }
    return h;
}

enum class SubsetSearch { AllIndependent, DependentFound, BudgetExhausted };

namespace detail {

// Depth-first walk over increasing column subsets with an incrementally
// maintained echelon basis. A node costs O(depth * rows).
class ColumnSubsetWalker {
public:
    ColumnSubsetWalker(const Matrix& m, std::atomic<bool>& stop, std::atomic<std::uint64_t>& nodes,
                       std::uint64_t node_budget)
        : m_(m), stop_(stop), nodes_(nodes), budget_(node_budget) {
        basis_.assign(m.rows(), std::vector<Element>(m.rows(), m.field().zero()));
        pivot_.assign(m.rows(), 0);
    }

    SubsetSearch run_from(std::size_t first) {
        if (m_.rows() == 0) return SubsetSearch::AllIndependent;
        if (!push(first, 0)) return SubsetSearch::DependentFound;
        return walk(first + 1, 1);
    }

private:
    bool push(std::size_t col, std::size_t depth) {
        auto& v = basis_[depth];
        for (std::size_t i = 0; i < m_.rows(); ++i) v[i] = m_(i, col);
        for (std::size_t b = 0; b < depth; ++b) {
            const Element c = v[pivot_[b]];
            if (c.is_zero()) continue;
            const auto& u = basis_[b];
            for (std::size_t i = 0; i < m_.rows(); ++i)
                if (!u[i].is_zero()) v[i] -= c * u[i];
        }
        std::size_t p = 0;
        while (p < m_.rows() && v[p].is_zero()) ++p;
        if (p == m_.rows()) return false;
        const Element inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        pivot_[depth] = p;
        return true;
    }

    SubsetSearch walk(std::size_t start, std::size_t depth) {
        if (depth == m_.rows()) return SubsetSearch::AllIndependent;
        const std::size_t remaining = m_.rows() - depth;
        for (std::size_t c = start; c + remaining <= m_.cols(); ++c) {
            if (stop_.load(std::memory_order_relaxed)) return SubsetSearch::BudgetExhausted;
            if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) return SubsetSearch::BudgetExhausted;
            if (!push(c, depth)) return SubsetSearch::DependentFound;
            const auto r = walk(c + 1, depth + 1);
            if (r != SubsetSearch::AllIndependent) return r;
        }
        return SubsetSearch::AllIndependent;
    }

    const Matrix& m_;
    std::atomic<bool>& stop_;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    std::vector<std::vector<Element>> basis_;
    std::vector<std::size_t> pivot_;
};

}  // namespace detail

/// Checks that every rows()-subset of columns of m is linearly independent.
/// Work is split over the first column of each subset; the verdict does not
/// depend on scheduling.
inline SubsetSearch all_column_subsets_independent(const Matrix& m, std::uint64_t node_budget) {
    const std::size_t w = m.rows();
    if (w == 0) return SubsetSearch::AllIndependent;
    if (w > m.cols()) return SubsetSearch::DependentFound;
    const std::size_t firsts = m.cols() - w + 1;
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> nodes{0};
    std::vector<SubsetSearch> verdict(firsts, SubsetSearch::AllIndependent);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        detail::ColumnSubsetWalker walker(m, stop, nodes, node_budget);
        for (std::size_t first = next++; first < firsts; first = next++) {
            verdict[first] = walker.run_from(first);
            if (verdict[first] != SubsetSearch::AllIndependent) stop = true;
        }
    };
    const unsigned threads = std::max(1U, std::min(std::thread::hardware_concurrency(), 16U));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    bool exhausted = false;
    for (auto v : verdict) {
        if (v == SubsetSearch::DependentFound) return v;
        if (v == SubsetSearch::BudgetExhausted) exhausted = true;
    }
    return exhausted ? SubsetSearch::BudgetExhausted : SubsetSearch::AllIndependent;
}

}  // namespace aqcodes
