#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trias/errors.hpp"

namespace trias {

// Dense matrix over a field descriptor F (QField or PField). Row-major.
// Dimensions are fixed at construction.
template <class F>
class Matrix {
  public:
    using Elem = typename F::Elem;

    Matrix(const F& f, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }
    const Elem& at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Elem> e_;
};

template <class F>
using Vec = std::vector<typename F::Elem>;

// Reduced row echelon form. Pivot rule: columns scanned left to right, pivot
// is the first remaining row with a nonzero entry. Deterministic.
template <class F>
struct Echelon {
    Matrix<F> rref;
    std::vector<std::size_t> pivot_cols;
};

template <class F>
Echelon<F> reduced_row_echelon(const F& f, Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && f.is_zero(m.at(pr, c))) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
        const auto piv_inv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), piv_inv);
        for (std::size_t q = 0; q < m.rows(); ++q) {
            if (q == r || f.is_zero(m.at(q, c))) continue;
            const auto factor = m.at(q, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(q, j) = f.sub(m.at(q, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& f, const Matrix<F>& m) {
    return reduced_row_echelon(f, m).pivot_cols.size();
}

// Basis of {v : m v = 0}. One vector per free column, in ascending column
// order, with the free coordinate set to 1.
template <class F>
std::vector<Vec<F>> kernel_basis(const F& f, const Matrix<F>& m) {
    auto ech = reduced_row_echelon(f, m);
    const auto& pivots = ech.pivot_cols;
    std::vector<Vec<F>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        Vec<F> v(m.cols(), f.zero());
        v[c] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(ech.rref.at(i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: inner dimensions disagree");
    Matrix<F> out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

template <class F>
Vec<F> mat_vec(const F& f, const Matrix<F>& a, const Vec<F>& v) {
    if (a.cols() != v.size())
        throw DimensionMismatch("mat_vec: dimensions disagree");
    Vec<F> out(a.rows(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a.at(i, j)))
                out[i] = f.add(out[i], f.mul(a.at(i, j), v[j]));
    return out;
}

template <class F>
bool is_zero_matrix(const F& f, const Matrix<F>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!f.is_zero(m.at(i, j))) return false;
    return true;
}

// dim(ker d_out / im d_in) for a composable pair with d_out∘d_in = 0.
template <class F>
std::size_t homology_dim(const F& f, const Matrix<F>& d_out, const Matrix<F>& d_in) {
    if (d_out.cols() != d_in.rows())
        throw DimensionMismatch("homology_dim: cols(d_out) != rows(d_in)");
    if (!is_zero_matrix(f, mat_mul(f, d_out, d_in)))
        throw CompositionNotZero("homology_dim: d_out * d_in != 0");
    return d_out.cols() - rank(f, d_out) - rank(f, d_in);
}

// One solution of a x = b, or nullopt when inconsistent.
template <class F>
std::optional<Vec<F>> solve(const F& f, const Matrix<F>& a, const Vec<F>& b) {
    if (a.rows() != b.size())
        throw DimensionMismatch("solve: rows(a) != size(b)");
    Matrix<F> aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto ech = reduced_row_echelon(f, std::move(aug));
    for (auto c : ech.pivot_cols)
        if (c == a.cols()) return std::nullopt;
    Vec<F> x(a.cols(), f.zero());
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
        x[ech.pivot_cols[i]] = ech.rref.at(i, a.cols());
    return x;
}


namespace detail {

// incremental row span; insert returns true when the row enlarges it
template <class F>
struct RowSpan {
    const F& f;
    std::size_t width;
    std::vector<std::pair<std::size_t, Vec<F>>> rows;  // (pivot column, row with pivot 1)

    RowSpan(const F& fld, std::size_t w) : f(fld), width(w) {}

    bool insert(Vec<F> r) {
        for (const auto& [pc, pr] : rows) {
            if (f.is_zero(r[pc])) continue;
            auto c = r[pc];
            for (std::size_t k = 0; k < width; ++k)
                if (!f.is_zero(pr[k])) r[k] = f.sub(r[k], f.mul(c, pr[k]));
        }
        std::size_t p = width;
        for (std::size_t k = 0; k < width; ++k)
            if (!f.is_zero(r[k])) { p = k; break; }
        if (p == width) return false;
        auto s = f.inv(r[p]);
        for (std::size_t k = p; k < width; ++k) r[k] = f.mul(r[k], s);
        rows.emplace_back(p, std::move(r));
        return true;
    }

    std::size_t rank() const { return rows.size(); }
};

}  // namespace detail

}  // namespace trias
