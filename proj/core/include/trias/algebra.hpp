#pragma once

// Structure-constant models of three-product algebras, their representations
// and corepresentations, with exhaustive axiom checkers. All identities are
// multilinear, so checking them on basis tuples is sufficient.

#include <array>
#include <string>
#include <vector>

#include "trias/errors.hpp"
#include "trias/matrix.hpp"

namespace trias {

enum class Op : int { Left = 0, Right = 1, Middle = 2 };

inline const char* op_name(Op op) {
    switch (op) {
        case Op::Left: return "left";
        case Op::Right: return "right";
        default: return "middle";
    }
}

// axiom k reads (x A y) B z = x C (y D z)
struct AxiomShape {
    Op a, b, c, d;
};

inline constexpr std::array<AxiomShape, 11> axiom_shapes{{
    {Op::Left, Op::Left, Op::Left, Op::Left},
    {Op::Left, Op::Left, Op::Left, Op::Right},
    {Op::Right, Op::Left, Op::Right, Op::Left},
    {Op::Left, Op::Right, Op::Right, Op::Right},
    {Op::Right, Op::Right, Op::Right, Op::Right},
    {Op::Left, Op::Left, Op::Left, Op::Middle},
    {Op::Middle, Op::Left, Op::Middle, Op::Left},
    {Op::Left, Op::Middle, Op::Middle, Op::Right},
    {Op::Right, Op::Middle, Op::Right, Op::Middle},
    {Op::Middle, Op::Right, Op::Right, Op::Right},
    {Op::Middle, Op::Middle, Op::Middle, Op::Middle},
}};

template <class F>
struct TriasAlgebra {
    using Elem = typename F::Elem;

    F field;
    int dim = 0;
    // tensor[op][i*dim+j][k] = coefficient of e_k in e_i op e_j
    std::array<std::vector<std::vector<Elem>>, 3> tensor;

    TriasAlgebra(const F& f, int d) : field(f), dim(d) {
        for (auto& t : tensor) t.assign(std::size_t(d) * d, std::vector<Elem>(d, f.zero()));
    }

    void set(Op op, int i, int j, int k, const Elem& c) {
        tensor[int(op)][std::size_t(i) * dim + j][k] = c;
    }

    const std::vector<Elem>& basis_product(Op op, int i, int j) const {
        return tensor[int(op)][std::size_t(i) * dim + j];
    }

    Vec<F> product(Op op, const Vec<F>& x, const Vec<F>& y) const {
        Vec<F> out(dim, field.zero());
        for (int i = 0; i < dim; ++i) {
            if (field.is_zero(x[i])) continue;
            for (int j = 0; j < dim; ++j) {
                if (field.is_zero(y[j])) continue;
                Elem c = field.mul(x[i], y[j]);
                const auto& row = basis_product(op, i, j);
                for (int k = 0; k < dim; ++k)
                    if (!field.is_zero(row[k])) out[k] = field.add(out[k], field.mul(c, row[k]));
            }
        }
        return out;
    }

    Vec<F> unit_vec(int i) const {
        Vec<F> v(dim, field.zero());
        v[i] = field.one();
        return v;
    }
};

template <class F>
struct AxiomViolation {
    int axiom;  // 1..11
    std::array<int, 3> triple;
    Vec<F> residual;
};

namespace detail {

// e_i op v
template <class F>
Vec<F> lmul(const TriasAlgebra<F>& A, Op op, int i, const Vec<F>& v) {
    Vec<F> out(A.dim, A.field.zero());
    for (int j = 0; j < A.dim; ++j) {
        if (A.field.is_zero(v[j])) continue;
        const auto& row = A.basis_product(op, i, j);
        for (int k = 0; k < A.dim; ++k)
            if (!A.field.is_zero(row[k]))
                out[k] = A.field.add(out[k], A.field.mul(v[j], row[k]));
    }
    return out;
}

// v op e_j
template <class F>
Vec<F> rmul(const TriasAlgebra<F>& A, Op op, const Vec<F>& v, int j) {
    Vec<F> out(A.dim, A.field.zero());
    for (int i = 0; i < A.dim; ++i) {
        if (A.field.is_zero(v[i])) continue;
        const auto& row = A.basis_product(op, i, j);
        for (int k = 0; k < A.dim; ++k)
            if (!A.field.is_zero(row[k]))
                out[k] = A.field.add(out[k], A.field.mul(v[i], row[k]));
    }
    return out;
}

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
    for (const auto& c : v)
        if (!f.is_zero(c)) return false;
    return true;
}

template <class F>
Vec<F> vec_sub(const F& f, const Vec<F>& x, const Vec<F>& y) {
    Vec<F> out(x.size(), f.zero());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.sub(x[i], y[i]);
    return out;
}

}  // namespace detail

template <class F>
std::vector<AxiomViolation<F>> check_axioms(const TriasAlgebra<F>& A) {
    std::vector<AxiomViolation<F>> out;
    for (int ax = 0; ax < 11; ++ax) {
        const auto& s = axiom_shapes[ax];
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j)
                for (int k = 0; k < A.dim; ++k) {
                    auto lhs = detail::rmul(A, s.b, A.basis_product(s.a, i, j), k);
                    auto rhs = detail::lmul(A, s.c, i, A.basis_product(s.d, j, k));
                    auto res = detail::vec_sub(A.field, lhs, rhs);
                    if (!detail::vec_is_zero(A.field, res))
                        out.push_back({ax + 1, {i, j, k}, std::move(res)});
                }
    }
    return out;
}

// A module with three actions from each side. The same storage shape serves
// representations (actions written a ⊣ x, x ⊣ a, ...) and corepresentations
// (actions written a < x, x < a, ...).
template <class F>
struct ModuleActions {
    using Elem = typename F::Elem;

    F field;
    int alg_dim = 0;
    int dim = 0;
    // from_left[op][i*dim+u]  = e_i op x_u   (length-dim coords)
    // from_right[op][u*alg_dim+i] = x_u op e_i
    std::array<std::vector<std::vector<Elem>>, 3> from_left;
    std::array<std::vector<std::vector<Elem>>, 3> from_right;

    ModuleActions(const F& f, int d, int m) : field(f), alg_dim(d), dim(m) {
        for (auto& t : from_left) t.assign(std::size_t(d) * m, std::vector<Elem>(m, f.zero()));
        for (auto& t : from_right) t.assign(std::size_t(m) * d, std::vector<Elem>(m, f.zero()));
    }

    void set_left(Op op, int i, int u, int v, const Elem& c) {
        from_left[int(op)][std::size_t(i) * dim + u][v] = c;
    }
    void set_right(Op op, int u, int i, int v, const Elem& c) {
        from_right[int(op)][std::size_t(u) * alg_dim + i][v] = c;
    }

    // a op x, bilinear
    Vec<F> act_left(Op op, const Vec<F>& a, const Vec<F>& x) const {
        Vec<F> out(dim, field.zero());
        for (int i = 0; i < alg_dim; ++i) {
            if (field.is_zero(a[i])) continue;
            for (int u = 0; u < dim; ++u) {
                if (field.is_zero(x[u])) continue;
                Elem c = field.mul(a[i], x[u]);
                const auto& row = from_left[int(op)][std::size_t(i) * dim + u];
                for (int v = 0; v < dim; ++v)
                    if (!field.is_zero(row[v])) out[v] = field.add(out[v], field.mul(c, row[v]));
            }
        }
        return out;
    }

    // x op a, bilinear
    Vec<F> act_right(Op op, const Vec<F>& x, const Vec<F>& a) const {
        Vec<F> out(dim, field.zero());
        for (int u = 0; u < dim; ++u) {
            if (field.is_zero(x[u])) continue;
            for (int i = 0; i < alg_dim; ++i) {
                if (field.is_zero(a[i])) continue;
                Elem c = field.mul(x[u], a[i]);
                const auto& row = from_right[int(op)][std::size_t(u) * alg_dim + i];
                for (int v = 0; v < dim; ++v)
                    if (!field.is_zero(row[v])) out[v] = field.add(out[v], field.mul(c, row[v]));
            }
        }
        return out;
    }

    Vec<F> unit_vec(int u) const {
        Vec<F> v(dim, field.zero());
        v[u] = field.one();
        return v;
    }
};

template <class F>
using Representation = ModuleActions<F>;

template <class F>
using Corepresentation = ModuleActions<F>;

template <class F>
Representation<F> adjoint_representation(const TriasAlgebra<F>& A) {
    Representation<F> M(A.field, A.dim, A.dim);
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j) {
                M.from_left[op][std::size_t(i) * A.dim + j] = A.basis_product(Op(op), i, j);
                M.from_right[op][std::size_t(i) * A.dim + j] = A.basis_product(Op(op), i, j);
            }
    return M;
}

template <class F>
Representation<F> zero_actions(const F& f, int alg_dim, int m) {
    return ModuleActions<F>(f, alg_dim, m);
}

template <class F>
struct MixedViolation {
    int axiom;  // 1..11
    int slot;   // which of x, y, z lives in the module
    std::array<int, 3> triple;
    Vec<F> residual;
};

// the 11 identities with exactly one of x, y, z taken from the module
template <class F>
std::vector<MixedViolation<F>> check_representation(const TriasAlgebra<F>& A,
                                                    const Representation<F>& M) {
    if (M.alg_dim != A.dim) throw DimensionMismatch("representation over a different algebra");
    std::vector<MixedViolation<F>> out;
    const F& f = A.field;
    for (int ax = 0; ax < 11; ++ax) {
        const auto& s = axiom_shapes[ax];
        for (int slot = 0; slot < 3; ++slot) {
            int lim0 = slot == 0 ? M.dim : A.dim;
            int lim1 = slot == 1 ? M.dim : A.dim;
            int lim2 = slot == 2 ? M.dim : A.dim;
            for (int i = 0; i < lim0; ++i)
                for (int j = 0; j < lim1; ++j)
                    for (int k = 0; k < lim2; ++k) {
                        Vec<F> lhs, rhs;
                        if (slot == 0) {
                            auto x = M.unit_vec(i), y = A.unit_vec(j), z = A.unit_vec(k);
                            lhs = M.act_right(s.b, M.act_right(s.a, x, y), z);
                            rhs = M.act_right(s.c, x, A.basis_product(s.d, j, k));
                        } else if (slot == 1) {
                            auto x = A.unit_vec(i), y = M.unit_vec(j), z = A.unit_vec(k);
                            lhs = M.act_right(s.b, M.act_left(s.a, x, y), z);
                            rhs = M.act_left(s.c, x, M.act_right(s.d, y, z));
                        } else {
                            auto x = A.unit_vec(i), y = A.unit_vec(j), z = M.unit_vec(k);
                            lhs = M.act_left(s.b, A.basis_product(s.a, i, j), z);
                            rhs = M.act_left(s.c, x, M.act_left(s.d, y, z));
                        }
                        auto res = detail::vec_sub(f, lhs, rhs);
                        if (!detail::vec_is_zero(f, res))
                            out.push_back({ax + 1, slot, {i, j, k}, std::move(res)});
                    }
        }
    }
    return out;
}

template <class F>
struct CorepViolation {
    int axiom;  // 1..33
    std::array<int, 3> triple;  // (a index, b index, x index)
    Vec<F> residual;
};

// The 33 corepresentation axioms, numbered in display order. Notation:
// a < x etc. are the left actions, x < a etc. the right actions.
template <class F>
std::vector<CorepViolation<F>> check_corepresentation(const TriasAlgebra<F>& A,
                                                      const Corepresentation<F>& N) {
    if (N.alg_dim != A.dim) throw DimensionMismatch("corepresentation over a different algebra");
    constexpr Op L = Op::Left, R = Op::Right, M = Op::Middle;
    const F& f = A.field;
    std::vector<CorepViolation<F>> out;
    for (int ia = 0; ia < A.dim; ++ia)
        for (int ib = 0; ib < A.dim; ++ib)
            for (int u = 0; u < N.dim; ++u) {
                auto a = A.unit_vec(ia), b = A.unit_vec(ib);
                auto x = N.unit_vec(u);
                auto al = [&](Op op, const Vec<F>& s, const Vec<F>& t) { return N.act_left(op, s, t); };
                auto ar = [&](Op op, const Vec<F>& s, const Vec<F>& t) { return N.act_right(op, s, t); };
                auto pr = [&](Op op) { return A.basis_product(op, ia, ib); };
                for (int ax = 1; ax <= 33; ++ax) {
                    Vec<F> lhs, rhs;
                    switch (ax) {
                        case 1: lhs = ar(L, ar(L, x, b), a); rhs = ar(L, x, pr(L)); break;
                        case 2: lhs = ar(L, x, pr(L)); rhs = ar(L, x, pr(M)); break;
                        case 3: lhs = ar(L, x, pr(M)); rhs = ar(L, x, pr(R)); break;
                        case 4: lhs = al(L, a, ar(L, x, b)); rhs = ar(L, al(L, a, x), b); break;
                        case 5: lhs = ar(L, al(L, a, x), b); rhs = ar(M, al(L, a, x), b); break;
                        case 6: lhs = ar(M, al(L, a, x), b); rhs = ar(R, al(L, a, x), b); break;
                        case 7: lhs = al(L, pr(L), x); rhs = al(L, b, al(L, a, x)); break;
                        case 8: lhs = al(L, b, al(L, a, x)); rhs = al(M, b, al(L, a, x)); break;
                        case 9: lhs = al(M, b, al(L, a, x)); rhs = al(R, b, al(L, a, x)); break;
                        case 10: lhs = ar(R, x, pr(R)); rhs = ar(R, ar(R, x, b), a); break;
                        case 11: lhs = ar(R, ar(R, x, b), a); rhs = ar(L, ar(R, x, b), a); break;
                        case 12: lhs = ar(L, ar(R, x, b), a); rhs = ar(M, ar(R, x, b), a); break;
                        case 13: lhs = ar(R, al(R, a, x), b); rhs = al(R, a, ar(R, x, b)); break;
                        case 14: lhs = al(R, a, ar(R, x, b)); rhs = al(L, a, ar(R, x, b)); break;
                        case 15: lhs = al(L, a, ar(R, x, b)); rhs = al(M, a, ar(R, x, b)); break;
                        case 16: lhs = al(R, b, al(R, a, x)); rhs = al(R, pr(R), x); break;
                        case 17: lhs = al(R, pr(R), x); rhs = al(R, pr(L), x); break;
                        case 18: lhs = al(R, pr(L), x); rhs = al(R, pr(M), x); break;
                        case 19: lhs = ar(R, ar(L, x, b), a); rhs = ar(R, x, pr(L)); break;
                        case 20: lhs = al(R, a, ar(L, x, b)); rhs = ar(L, al(R, a, x), b); break;
                        case 21: lhs = al(L, pr(R), x); rhs = al(L, b, al(R, a, x)); break;
                        case 22: lhs = ar(M, ar(L, x, b), a); rhs = ar(M, x, pr(L)); break;
                        case 23: lhs = al(M, a, ar(L, x, b)); rhs = ar(L, al(M, a, x), b); break;
                        case 24: lhs = al(L, pr(M), x); rhs = al(L, b, al(M, a, x)); break;
                        case 25: lhs = ar(L, ar(M, x, b), a); rhs = ar(M, x, pr(R)); break;
                        case 26: lhs = al(L, a, ar(M, x, b)); rhs = ar(R, al(M, a, x), b); break;
                        case 27: lhs = al(M, pr(L), x); rhs = al(R, b, al(M, a, x)); break;
                        case 28: lhs = ar(R, ar(M, x, b), a); rhs = ar(R, x, pr(M)); break;
                        case 29: lhs = al(R, a, ar(M, x, b)); rhs = ar(M, al(R, a, x), b); break;
                        case 30: lhs = al(M, pr(R), x); rhs = al(M, b, al(R, a, x)); break;
                        case 31: lhs = ar(M, ar(M, x, b), a); rhs = ar(M, x, pr(M)); break;
                        case 32: lhs = al(M, pr(M), x); rhs = al(M, b, al(M, a, x)); break;
                        default: lhs = al(M, a, ar(M, x, b)); rhs = ar(M, al(M, a, x), b); break;
                    }
                    auto res = detail::vec_sub(f, lhs, rhs);
                    if (!detail::vec_is_zero(f, res))
                        out.push_back({ax, {ia, ib, u}, std::move(res)});
                }
            }
    return out;
}

// x·β_l(a) := a ⊢ x,  x·α_r(a) := x ⊣ a,  x·β_m(a) := a ⊥ x,
// x·α_m(a) := x ⊥ a,  x·β_r(a) := 0,      x·α_l(a) := 0
template <class F>
Corepresentation<F> opposite_corepresentation(const Representation<F>& M) {
    Corepresentation<F> N(M.field, M.alg_dim, M.dim);
    const int d = M.alg_dim, m = M.dim;
    for (int i = 0; i < d; ++i)
        for (int u = 0; u < m; ++u) {
            // left actions a<x, a>x, a∧x are x·α_l, x·α_r, x·α_m
            N.from_left[int(Op::Right)][std::size_t(i) * m + u] =
                M.from_right[int(Op::Left)][std::size_t(u) * d + i];
            N.from_left[int(Op::Middle)][std::size_t(i) * m + u] =
                M.from_right[int(Op::Middle)][std::size_t(u) * d + i];
            // right actions x<a, x>a, x∧a are x·β_l, x·β_r, x·β_m
            N.from_right[int(Op::Left)][std::size_t(u) * d + i] =
                M.from_left[int(Op::Right)][std::size_t(i) * m + u];
            N.from_right[int(Op::Middle)][std::size_t(u) * d + i] =
                M.from_left[int(Op::Middle)][std::size_t(i) * m + u];
        }
    return N;
}

// --- small fixture constructors ---

template <class F>
TriasAlgebra<F> abelian_algebra(const F& f, int d) {
    return TriasAlgebra<F>(f, d);
}

// d = 1, all three products equal to field multiplication
template <class F>
TriasAlgebra<F> assoc_line(const F& f) {
    TriasAlgebra<F> A(f, 1);
    for (int op = 0; op < 3; ++op) A.set(Op(op), 0, 0, 0, f.one());
    return A;
}

template <class F>
TriasAlgebra<F> direct_sum(const TriasAlgebra<F>& A, const TriasAlgebra<F>& B) {
    TriasAlgebra<F> S(A.field, A.dim + B.dim);
    for (int op = 0; op < 3; ++op) {
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j) {
                const auto& row = A.basis_product(Op(op), i, j);
                for (int k = 0; k < A.dim; ++k) S.set(Op(op), i, j, k, row[k]);
            }
        for (int i = 0; i < B.dim; ++i)
            for (int j = 0; j < B.dim; ++j) {
                const auto& row = B.basis_product(Op(op), i, j);
                for (int k = 0; k < B.dim; ++k)
                    S.set(Op(op), A.dim + i, A.dim + j, A.dim + k, row[k]);
            }
    }
    return S;
}

// same underlying space, all products zeroed
template <class F>
TriasAlgebra<F> zeroed_products(const TriasAlgebra<F>& A) {
    return TriasAlgebra<F>(A.field, A.dim);
}

// dim of A / span(all products)
template <class F>
int abelianization_dim(const TriasAlgebra<F>& A) {
    Matrix<F> rows(A.field, 3 * A.dim * A.dim, A.dim);
    int r = 0;
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j, ++r) {
                const auto& row = A.basis_product(Op(op), i, j);
                for (int k = 0; k < A.dim; ++k) rows.at(r, k) = row[k];
            }
    return A.dim - rank(A.field, rows);
}

// --- linear-system oracles for H^0 and H^1 ---

// basis of M^A = {m : a ⊣ m = m ⊢ a for all a}
template <class F>
std::vector<Vec<F>> invariants_basis(const TriasAlgebra<F>& A, const Representation<F>& M) {
    const F& f = A.field;
    Matrix<F> sys(f, A.dim * M.dim, M.dim);
    for (int j = 0; j < A.dim; ++j)
        for (int v = 0; v < M.dim; ++v)
            for (int u = 0; u < M.dim; ++u) {
                const auto& lm = M.from_left[int(Op::Left)][std::size_t(j) * M.dim + u];
                const auto& rm = M.from_right[int(Op::Right)][std::size_t(u) * A.dim + j];
                sys.at(j * M.dim + v, u) = f.sub(lm[v], rm[v]);
            }
    return kernel_basis(f, sys);
}

// basis of Der(A, M): linear maps with φ(a∗b) = φ(a)∗b + a∗φ(b) for all three
// products; coordinates are flattened as (domain index j, module coord u) -> j*m+u
template <class F>
std::vector<Vec<F>> derivations(const TriasAlgebra<F>& A, const Representation<F>& M) {
    const F& f = A.field;
    const int d = A.dim, m = M.dim;
    Matrix<F> sys(f, 3 * d * d * m, d * m);
    int r = 0;
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const auto& prod = A.basis_product(Op(op), i, j);
                for (int v = 0; v < m; ++v, ++r) {
                    for (int k = 0; k < d; ++k)
                        if (!f.is_zero(prod[k]))
                            sys.at(r, k * m + v) = f.add(sys.at(r, k * m + v), prod[k]);
                    for (int u = 0; u < m; ++u) {
                        const auto& ract = M.from_right[op][std::size_t(u) * d + j];
                        if (!f.is_zero(ract[v]))
                            sys.at(r, i * m + u) = f.sub(sys.at(r, i * m + u), ract[v]);
                        const auto& lact = M.from_left[op][std::size_t(i) * m + u];
                        if (!f.is_zero(lact[v]))
                            sys.at(r, j * m + u) = f.sub(sys.at(r, j * m + u), lact[v]);
                    }
                }
            }
    return kernel_basis(f, sys);
}

// basis of Inn(A, M) = span of ad_m with ad_m(a) = a ⊣ m − m ⊢ a
template <class F>
std::vector<Vec<F>> inner_derivations(const TriasAlgebra<F>& A, const Representation<F>& M) {
    const F& f = A.field;
    const int d = A.dim, m = M.dim;
    Matrix<F> rows(f, m, d * m);
    for (int u = 0; u < m; ++u)
        for (int j = 0; j < d; ++j) {
            const auto& lm = M.from_left[int(Op::Left)][std::size_t(j) * m + u];
            const auto& rm = M.from_right[int(Op::Right)][std::size_t(u) * d + j];
            for (int v = 0; v < m; ++v) rows.at(u, j * m + v) = f.sub(lm[v], rm[v]);
        }
    auto ech = reduced_row_echelon(f, rows);
    std::vector<Vec<F>> basis;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
        Vec<F> v(d * m, f.zero());
        for (int c = 0; c < d * m; ++c) v[c] = ech.rref.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace trias
