#pragma once

// Cochain complex C^n(A,M) = Maps(K[T_n] (x) A^(x)n, M) with coboundary
// delta^n = sum (-1)^i delta_i, and chain complex C_n(A,N) = K[T_n] (x) N
// (x) A^(x)n with differential d = sum (-1)^i d_i. Coordinates are laid out
// as ((tree, word), coefficient): index = (t * d^n + word) * m + c with the
// word read most-significant-digit first.
//
// Degree caps live in the dimension computations (ComplexBudget.max_n,
// default 4); matrix builders enforce only the entry budget.

#include <cstddef>
#include <map>
#include <vector>

#include "trias/algebra.hpp"
#include "trias/errors.hpp"
#include "trias/free_algebra.hpp"
#include "trias/matrix.hpp"
#include "trias/trees.hpp"

namespace trias {

// the operation attached to position i of a tree of degree n, 0 <= i <= n
inline Op circ_product(const PlanarTree& psi, int i) {
    const int n = psi.degree();
    if (psi.is_leaf() || i < 0 || i > n) throw IndexOutOfRange("circ_product position");
    const auto& kids = psi.children();
    const int k = int(kids.size()) - 1;
    if (i == 0) {
        if (kids[0].degree() > 0) return Op::Right;
        return k == 1 ? Op::Left : Op::Middle;
    }
    if (i == n) {
        if (kids[k].degree() > 0) return Op::Left;
        return k == 1 ? Op::Right : Op::Middle;
    }
    switch (leaf_orientation(psi, i)) {
        case LeafOrientation::Left: return Op::Left;
        case LeafOrientation::Right: return Op::Right;
        default: return Op::Middle;
    }
}

struct ComplexBudget {
    int max_n = 4;
    std::size_t max_entries = 4000000;
};

namespace detail {

struct CoordLayout {
    std::size_t trees, words, coeffs;
    std::size_t dim() const { return trees * words * coeffs; }
    std::size_t index(std::size_t t, std::size_t w, std::size_t c) const {
        return (t * words + w) * coeffs + c;
    }
};

inline CoordLayout coord_layout(int n, int d, int m) {
    std::size_t words = 1;
    for (int i = 0; i < n; ++i) words *= std::size_t(d);
    return {enumerate_trees(n).size(), words, std::size_t(m)};
}

inline void check_entry_budget(std::size_t rows, std::size_t cols, const ComplexBudget& b) {
    if (cols != 0 && rows > b.max_entries / cols)
        throw ResourceLimit("matrix entry budget exceeded; raise the budget to proceed");
}

// Emits every nonzero structure coefficient of the face map delta^n_i as
// emit(row, col, value), rows over C^{n+1}(A,M) and cols over C^n(A,M).
template <class F, class EmitFn>
void visit_coboundary_face(const TriasAlgebra<F>& A, const ModuleActions<F>& M, int n, int i,
                           EmitFn&& emit) {
    if (M.alg_dim != A.dim) throw DimensionMismatch("module over a different algebra");
    if (i < 0 || i > n + 1) throw IndexOutOfRange("coboundary face index");
    const F& f = A.field;
    const int d = A.dim, m = M.dim;
    const auto out = coord_layout(n + 1, d, m);
    const auto in = coord_layout(n, d, m);
    const auto& trees = enumerate_trees(n + 1);
    std::vector<std::size_t> powd(n + 2, 1);
    for (int j = 1; j <= n + 1; ++j) powd[j] = powd[j - 1] * std::size_t(d);
    std::vector<int> digit(n + 1, 0);

    for (std::size_t tt = 0; tt < trees.size(); ++tt) {
        const auto& psi = trees[tt];
        const auto ft = index_of(face(psi, i)).second;
        const Op op = circ_product(psi, i);
        for (std::size_t word = 0; word < out.words; ++word) {
            for (int j = 0; j <= n; ++j) digit[j] = int(word / powd[n - j] % std::size_t(d));
            if (i == 0) {
                const std::size_t sub = word % powd[n];
                for (int u = 0; u < m; ++u) {
                    const auto& act = M.from_left[int(op)][std::size_t(digit[0]) * m + u];
                    for (int v = 0; v < m; ++v)
                        if (!f.is_zero(act[v]))
                            emit(out.index(tt, word, v), in.index(ft, sub, u), act[v]);
                }
            } else if (i <= n) {
                const int p = i - 1;  // digits p, p+1 merge
                const std::size_t high = word / powd[n + 1 - p];
                const std::size_t tail = word % powd[n - 1 - p];
                const auto& prod = A.basis_product(op, digit[p], digit[p + 1]);
                for (int k = 0; k < d; ++k) {
                    if (f.is_zero(prod[k])) continue;
                    const std::size_t sub =
                        (high * std::size_t(d) + std::size_t(k)) * powd[n - 1 - p] + tail;
                    for (int v = 0; v < m; ++v)
                        emit(out.index(tt, word, v), in.index(ft, sub, v), prod[k]);
                }
            } else {
                const std::size_t sub = word / std::size_t(d);
                for (int u = 0; u < m; ++u) {
                    const auto& act = M.from_right[int(op)][std::size_t(u) * d + digit[n]];
                    for (int v = 0; v < m; ++v)
                        if (!f.is_zero(act[v]))
                            emit(out.index(tt, word, v), in.index(ft, sub, u), act[v]);
                }
            }
        }
    }
}

// Same for the chain face d_i: rows over C_{n-1}(A,N), cols over C_n(A,N).
template <class F, class EmitFn>
void visit_chain_face(const TriasAlgebra<F>& A, const ModuleActions<F>& N, int n, int i,
                      EmitFn&& emit) {
    if (N.alg_dim != A.dim) throw DimensionMismatch("module over a different algebra");
    if (n < 1 || i < 0 || i > n) throw IndexOutOfRange("chain face index");
    const F& f = A.field;
    const int d = A.dim, m = N.dim;
    const auto out = coord_layout(n - 1, d, m);
    const auto in = coord_layout(n, d, m);
    const auto& trees = enumerate_trees(n);
    std::vector<std::size_t> powd(n + 1, 1);
    for (int j = 1; j <= n; ++j) powd[j] = powd[j - 1] * std::size_t(d);
    std::vector<int> digit(n, 0);

    for (std::size_t tt = 0; tt < trees.size(); ++tt) {
        const auto& psi = trees[tt];
        const auto ft = index_of(face(psi, i)).second;
        const Op op = circ_product(psi, i);
        for (std::size_t word = 0; word < in.words; ++word) {
            for (int j = 0; j < n; ++j) digit[j] = int(word / powd[n - 1 - j] % std::size_t(d));
            if (i == 0) {
                const std::size_t sub = word % powd[n - 1];
                for (int u = 0; u < m; ++u) {
                    const auto& act = N.from_left[int(op)][std::size_t(digit[0]) * m + u];
                    for (int v = 0; v < m; ++v)
                        if (!f.is_zero(act[v]))
                            emit(out.index(ft, sub, v), in.index(tt, word, u), act[v]);
                }
            } else if (i < n) {
                const int p = i - 1;
                const std::size_t high = word / powd[n - p];
                const std::size_t tail = word % powd[n - 2 - p];
                const auto& prod = A.basis_product(op, digit[p], digit[p + 1]);
                for (int k = 0; k < d; ++k) {
                    if (f.is_zero(prod[k])) continue;
                    const std::size_t sub =
                        (high * std::size_t(d) + std::size_t(k)) * powd[n - 2 - p] + tail;
                    for (int u = 0; u < m; ++u)
                        emit(out.index(ft, sub, u), in.index(tt, word, u), prod[k]);
                }
            } else {
                const std::size_t sub = word / std::size_t(d);
                for (int u = 0; u < m; ++u) {
                    const auto& act = N.from_right[int(op)][std::size_t(u) * d + digit[n - 1]];
                    for (int v = 0; v < m; ++v)
                        if (!f.is_zero(act[v]))
                            emit(out.index(ft, sub, v), in.index(tt, word, u), act[v]);
                }
            }
        }
    }
}

}  // namespace detail

template <class F>
std::size_t cochain_dim(const TriasAlgebra<F>& A, const ModuleActions<F>& M, int n) {
    return detail::coord_layout(n, A.dim, M.dim).dim();
}

template <class F>
std::size_t chain_dim(const TriasAlgebra<F>& A, const ModuleActions<F>& N, int n) {
    return detail::coord_layout(n, A.dim, N.dim).dim();
}

template <class F>
Matrix<F> coboundary_face_matrix(const TriasAlgebra<F>& A, const ModuleActions<F>& M, int n,
                                 int i, const ComplexBudget& budget = {}) {
    const auto rows = cochain_dim(A, M, n + 1), cols = cochain_dim(A, M, n);
    detail::check_entry_budget(rows, cols, budget);
    Matrix<F> out(A.field, rows, cols);
    detail::visit_coboundary_face(A, M, n, i, [&](std::size_t r, std::size_t c, const auto& v) {
        out.at(r, c) = A.field.add(out.at(r, c), v);
    });
    return out;
}

template <class F>
Matrix<F> coboundary_matrix(const TriasAlgebra<F>& A, const ModuleActions<F>& M, int n,
                            const ComplexBudget& budget = {}) {
    const auto rows = cochain_dim(A, M, n + 1), cols = cochain_dim(A, M, n);
    detail::check_entry_budget(rows, cols, budget);
    Matrix<F> out(A.field, rows, cols);
    for (int i = 0; i <= n + 1; ++i) {
        const bool neg = i % 2 != 0;
        detail::visit_coboundary_face(
            A, M, n, i, [&](std::size_t r, std::size_t c, const auto& v) {
                out.at(r, c) = neg ? A.field.sub(out.at(r, c), v) : A.field.add(out.at(r, c), v);
            });
    }
    return out;
}

template <class F>
Vec<F> apply_coboundary_face(const TriasAlgebra<F>& A, const ModuleActions<F>& M, int n, int i,
                             const Vec<F>& cochain) {
    if (cochain.size() != cochain_dim(A, M, n)) throw DimensionMismatch("cochain length");
    Vec<F> out(cochain_dim(A, M, n + 1), A.field.zero());
    detail::visit_coboundary_face(A, M, n, i, [&](std::size_t r, std::size_t c, const auto& v) {
        if (!A.field.is_zero(cochain[c]))
            out[r] = A.field.add(out[r], A.field.mul(v, cochain[c]));
    });
    return out;
}

template <class F>
Matrix<F> chain_face_matrix(const TriasAlgebra<F>& A, const ModuleActions<F>& N, int n, int i,
                            const ComplexBudget& budget = {}) {
    if (n < 1) throw IndexOutOfRange("chain faces start at degree 1");
    const auto rows = chain_dim(A, N, n - 1), cols = chain_dim(A, N, n);
    detail::check_entry_budget(rows, cols, budget);
    Matrix<F> out(A.field, rows, cols);
    detail::visit_chain_face(A, N, n, i, [&](std::size_t r, std::size_t c, const auto& v) {
        out.at(r, c) = A.field.add(out.at(r, c), v);
    });
    return out;
}

template <class F>
Matrix<F> chain_differential_matrix(const TriasAlgebra<F>& A, const ModuleActions<F>& N, int n,
                                    const ComplexBudget& budget = {}) {
    if (n < 1) throw IndexOutOfRange("chain faces start at degree 1");
    const auto rows = chain_dim(A, N, n - 1), cols = chain_dim(A, N, n);
    detail::check_entry_budget(rows, cols, budget);
    Matrix<F> out(A.field, rows, cols);
    for (int i = 0; i <= n; ++i) {
        const bool neg = i % 2 != 0;
        detail::visit_chain_face(
            A, N, n, i, [&](std::size_t r, std::size_t c, const auto& v) {
                out.at(r, c) = neg ? A.field.sub(out.at(r, c), v) : A.field.add(out.at(r, c), v);
            });
    }
    return out;
}

template <class F>
std::size_t cohomology_dim(const TriasAlgebra<F>& A, const ModuleActions<F>& M, int n,
                           const ComplexBudget& budget = {}) {
    if (n < 0) throw IndexOutOfRange("negative degree");
    if (n > budget.max_n) throw ResourceLimit("degree exceeds the configured cap");
    auto d_out = coboundary_matrix(A, M, n, budget);
    auto d_in = n == 0 ? Matrix<F>(A.field, cochain_dim(A, M, 0), 0)
                       : coboundary_matrix(A, M, n - 1, budget);
    return homology_dim(A.field, d_out, d_in);
}

template <class F>
std::size_t homology_dim(const TriasAlgebra<F>& A, const ModuleActions<F>& N, int n,
                         const ComplexBudget& budget = {}) {
    if (n < 0) throw IndexOutOfRange("negative degree");
    if (n > budget.max_n) throw ResourceLimit("degree exceeds the configured cap");
    auto d_out = n == 0 ? Matrix<F>(A.field, 0, chain_dim(A, N, 0))
                        : chain_differential_matrix(A, N, n, budget);
    auto d_in = chain_differential_matrix(A, N, n + 1, budget);
    return homology_dim(A.field, d_out, d_in);
}

// --- generator-degree-graded chains of a free algebra with K coefficients ---
//
// The differential drops the outer faces (the trivial coefficient kills
// them) and the interior merges preserve total generator degree, so each
// weight-w slice is a finite complex on its own.

struct GradedSliceBasis {
    int n = 0, w = 0;
    std::size_t trees = 0;
    std::vector<std::vector<int>> comps;      // compositions of w into n parts
    std::vector<std::size_t> comp_offset;     // block offsets within one tree
    std::size_t per_tree = 0;

    std::size_t dim() const { return trees * per_tree; }
};

template <class F>
GradedSliceBasis graded_slice_basis(const GradedFreeAlgebra<F>& FA, int n, int w) {
    if (n < 0 || w < 0) throw IndexOutOfRange("negative degree");
    if (w > FA.max_degree()) throw ResourceLimit("weight exceeds the algebra truncation");
    GradedSliceBasis b;
    b.n = n;
    b.w = w;
    b.trees = enumerate_trees(n).size();
    if (n == 0) {
        if (w == 0) {
            b.comps.push_back({});
            b.comp_offset.push_back(0);
            b.per_tree = 1;
        }
        return b;
    }
    std::vector<int> cur(n, 0);
    std::size_t off = 0;
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            if (left < 1) return;
            cur[pos] = left;
            std::size_t block = 1;
            for (int j = 0; j < n; ++j) block *= std::size_t(FA.slice_dim(cur[j]));
            if (block == 0) return;
            b.comps.push_back(cur);
            b.comp_offset.push_back(off);
            off += block;
            return;
        }
        for (int v = 1; v <= left - (n - 1 - pos); ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, w);
    b.per_tree = off;
    return b;
}

template <class F>
Matrix<F> graded_chain_differential(const GradedFreeAlgebra<F>& FA, int n, int w) {
    const F& f = FA.field();
    auto in = graded_slice_basis(FA, n, w);
    auto out = graded_slice_basis(FA, n - 1, w);
    Matrix<F> mat(f, out.dim(), in.dim());
    if (n < 2) return mat;  // no interior faces

    std::map<std::vector<int>, std::size_t> out_comp;
    for (std::size_t c = 0; c < out.comps.size(); ++c) out_comp[out.comps[c]] = c;
    const auto& trees = enumerate_trees(n);

    for (std::size_t tt = 0; tt < trees.size(); ++tt) {
        const auto& psi = trees[tt];
        for (std::size_t ci = 0; ci < in.comps.size(); ++ci) {
            const auto& comp = in.comps[ci];
            std::vector<int> dims(n);
            for (int j = 0; j < n; ++j) dims[j] = FA.slice_dim(comp[j]);
            std::vector<int> reps(n, 0);
            std::size_t local = 0;
            while (true) {
                const std::size_t col = tt * in.per_tree + in.comp_offset[ci] + local;
                for (int i = 1; i <= n - 1; ++i) {
                    const Op op = circ_product(psi, i);
                    const auto ft = index_of(face(psi, i)).second;
                    auto merged = comp;
                    merged[i - 1] += merged[i];
                    merged.erase(merged.begin() + i);
                    auto it = out_comp.find(merged);
                    if (it == out_comp.end()) continue;
                    auto prod = FA.rep_product(op, comp[i - 1], reps[i - 1], comp[i], reps[i]);
                    // row offset: mixed-radix over the merged composition
                    for (std::size_t k = 0; k < prod.size(); ++k) {
                        if (f.is_zero(prod[k])) continue;
                        std::size_t loc = 0;
                        for (int j = 0; j < n - 1; ++j) {
                            const int rep_j = j < i - 1 ? reps[j]
                                              : j == i - 1 ? int(k)
                                                           : reps[j + 1];
                            loc = loc * std::size_t(FA.slice_dim(merged[j])) + std::size_t(rep_j);
                        }
                        const std::size_t row = ft * out.per_tree + out.comp_offset[it->second] + loc;
                        mat.at(row, col) = i % 2 != 0 ? f.sub(mat.at(row, col), prod[k])
                                                      : f.add(mat.at(row, col), prod[k]);
                    }
                }
                // advance the mixed-radix representative word
                int j = n - 1;
                for (; j >= 0; --j) {
                    if (++reps[j] < dims[j]) break;
                    reps[j] = 0;
                }
                ++local;
                if (j < 0) break;
            }
        }
    }
    return mat;
}

template <class F>
std::size_t graded_homology_slice(const GradedFreeAlgebra<F>& FA, int n, int w) {
    if (n < 0) throw IndexOutOfRange("negative degree");
    auto d_out = n == 0 ? Matrix<F>(FA.field(), 0, graded_slice_basis(FA, 0, w).dim())
                        : graded_chain_differential(FA, n, w);
    auto d_in = graded_chain_differential(FA, n + 1, w);
    return homology_dim(FA.field(), d_out, d_in);
}

}  // namespace trias
