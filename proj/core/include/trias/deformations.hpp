#pragma once

// Formal one-parameter deformations of the three products. A deformation is a
// power series of bilinear terms theta_s whose coefficient-wise identities in t
// reproduce the eleven axioms; theta_0 is always the product table of the base
// algebra. This header provides the order checker, the infinitesimal part,
// conjugation by formal isomorphisms, the degree-three obstruction cochain,
// the two extension paths (direct check vs obstruction equation), abelian
// extensions of an algebra by a representation with their degree-two cocycles,
// and a rigidity probe that walks the obstruction ladder for each cohomology
// class.
//
// Sign conventions are fixed once: every residual is lhs minus rhs of the
// defining identity, so the order-(N+1) residual of an extended series equals
// obstruction minus coboundary exactly, with no normalization factors. The
// cross-check in extend() keeps that identity honest.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trias/algebra.hpp"
#include "trias/complexes.hpp"
#include "trias/errors.hpp"
#include "trias/format.hpp"
#include "trias/matrix.hpp"
#include "trias/trees.hpp"

namespace trias {

// Bilinear map A x A -> M given by its value on each product symbol.
// tensor[op][i*arg_dim + j] is the value on the basis pair (e_i, e_j).
template <class F>
struct TwoCochainTriple {
    using Elem = typename F::Elem;

    F field;
    int arg_dim = 0;
    int val_dim = 0;
    std::array<std::vector<std::vector<Elem>>, 3> tensor;

    TwoCochainTriple(const F& f, int d, int m) : field(f), arg_dim(d), val_dim(m) {
        for (auto& t : tensor)
            t.assign(std::size_t(d) * d, std::vector<Elem>(std::size_t(m), f.zero()));
    }

    const std::vector<Elem>& basis_value(Op op, int i, int j) const {
        if (i < 0 || i >= arg_dim || j < 0 || j >= arg_dim)
            throw IndexOutOfRange("two-cochain argument index out of range");
        return tensor[int(op)][std::size_t(i) * arg_dim + j];
    }

    void set(Op op, int i, int j, int k, const Elem& c) {
        if (i < 0 || i >= arg_dim || j < 0 || j >= arg_dim || k < 0 || k >= val_dim)
            throw IndexOutOfRange("two-cochain index out of range");
        tensor[int(op)][std::size_t(i) * arg_dim + j][k] = c;
    }

    Vec<F> apply(Op op, const Vec<F>& x, const Vec<F>& y) const {
        if (int(x.size()) != arg_dim || int(y.size()) != arg_dim)
            throw DimensionMismatch("two-cochain applied to vectors of the wrong dimension");
        Vec<F> out(val_dim, field.zero());
        for (int i = 0; i < arg_dim; ++i) {
            if (field.is_zero(x[i])) continue;
            for (int j = 0; j < arg_dim; ++j) {
                if (field.is_zero(y[j])) continue;
                Elem c = field.mul(x[i], y[j]);
                const auto& row = tensor[int(op)][std::size_t(i) * arg_dim + j];
                for (int k = 0; k < val_dim; ++k)
                    if (!field.is_zero(row[k])) out[k] = field.add(out[k], field.mul(c, row[k]));
            }
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& t : tensor)
            for (const auto& row : t)
                for (const auto& c : row)
                    if (!field.is_zero(c)) return false;
        return true;
    }
};

namespace detail {

template <class F>
void require_same_shape(const TwoCochainTriple<F>& a, const TwoCochainTriple<F>& b) {
    if (a.arg_dim != b.arg_dim || a.val_dim != b.val_dim)
        throw DimensionMismatch("two-cochains have different shapes");
}

}  // namespace detail

template <class F>
TwoCochainTriple<F> triple_add(const TwoCochainTriple<F>& a, const TwoCochainTriple<F>& b) {
    detail::require_same_shape(a, b);
    TwoCochainTriple<F> out = a;
    for (int op = 0; op < 3; ++op)
        for (std::size_t p = 0; p < out.tensor[op].size(); ++p)
            for (int k = 0; k < out.val_dim; ++k)
                out.tensor[op][p][k] = a.field.add(out.tensor[op][p][k], b.tensor[op][p][k]);
    return out;
}

template <class F>
TwoCochainTriple<F> triple_sub(const TwoCochainTriple<F>& a, const TwoCochainTriple<F>& b) {
    detail::require_same_shape(a, b);
    TwoCochainTriple<F> out = a;
    for (int op = 0; op < 3; ++op)
        for (std::size_t p = 0; p < out.tensor[op].size(); ++p)
            for (int k = 0; k < out.val_dim; ++k)
                out.tensor[op][p][k] = a.field.sub(out.tensor[op][p][k], b.tensor[op][p][k]);
    return out;
}

template <class F>
bool triple_eq(const TwoCochainTriple<F>& a, const TwoCochainTriple<F>& b) {
    detail::require_same_shape(a, b);
    return triple_sub(a, b).is_zero();
}

namespace detail {

inline std::size_t tree_slot(int degree, const std::string& shape) {
    const auto& all = enumerate_trees(degree);
    auto t = parse_tree(shape);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == t) return i;
    throw IndexOutOfRange("tree not found in its enumeration");
}

// positions of the three one-product trees inside the degree-two enumeration,
// indexed by Op
inline const std::array<std::size_t, 3>& product_tree_slots() {
    static const std::array<std::size_t, 3> slots = {
        tree_slot(2, "(* (* *))"),
        tree_slot(2, "((* *) *)"),
        tree_slot(2, "(* * *)"),
    };
    return slots;
}

// degree-three tree carrying axiom k at slots[k-1]; the eleven trees exhaust
// the enumeration
inline const std::array<std::size_t, 11>& axiom_tree_slots() {
    static const std::array<std::size_t, 11> slots = {
        tree_slot(3, "(* (* (* *)))"),
        tree_slot(3, "(* ((* *) *))"),
        tree_slot(3, "((* *) (* *))"),
        tree_slot(3, "((* (* *)) *)"),
        tree_slot(3, "(((* *) *) *)"),
        tree_slot(3, "(* (* * *))"),
        tree_slot(3, "(* * (* *))"),
        tree_slot(3, "(* (* *) *)"),
        tree_slot(3, "((* *) * *)"),
        tree_slot(3, "((* * *) *)"),
        tree_slot(3, "(* * * *)"),
    };
    return slots;
}

}  // namespace detail

// coordinates of a triple in the degree-two cochain space
template <class F>
Vec<F> triple_to_cochain(const TwoCochainTriple<F>& t) {
    const auto lay = detail::coord_layout(2, t.arg_dim, t.val_dim);
    const auto& slots = detail::product_tree_slots();
    Vec<F> out(lay.dim(), t.field.zero());
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < t.arg_dim; ++i)
            for (int j = 0; j < t.arg_dim; ++j) {
                const auto& row = t.tensor[op][std::size_t(i) * t.arg_dim + j];
                const std::size_t word = std::size_t(i) * t.arg_dim + j;
                for (int k = 0; k < t.val_dim; ++k)
                    out[lay.index(slots[op], word, std::size_t(k))] = row[k];
            }
    return out;
}

template <class F>
TwoCochainTriple<F> triple_from_cochain(const F& f, int d, int m, const Vec<F>& c) {
    const auto lay = detail::coord_layout(2, d, m);
    if (c.size() != lay.dim())
        throw DimensionMismatch("cochain vector has the wrong length for this layout");
    const auto& slots = detail::product_tree_slots();
    TwoCochainTriple<F> out(f, d, m);
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < m; ++k)
                    out.tensor[op][std::size_t(i) * d + j][k] =
                        c[lay.index(slots[op], std::size_t(i) * d + j, std::size_t(k))];
    return out;
}

template <class F>
TwoCochainTriple<F> products_as_triple(const TriasAlgebra<F>& A) {
    TwoCochainTriple<F> out(A.field, A.dim, A.dim);
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < A.dim; ++i)
            for (int j = 0; j < A.dim; ++j)
                out.tensor[op][std::size_t(i) * A.dim + j] = A.basis_product(Op(op), i, j);
    return out;
}

// theta[0] is the product table of base; theta[s] is the coefficient of t^s
template <class F>
struct Deformation {
    TriasAlgebra<F> base;
    std::vector<TwoCochainTriple<F>> theta;

    int order() const { return int(theta.size()) - 1; }
};

template <class F>
Deformation<F> trivial_deformation(const TriasAlgebra<F>& A) {
    return {A, {products_as_triple(A)}};
}

template <class F>
Deformation<F> realize_deformation(const F& f, const TriasAlgebra<F>& A,
                                   const DeformationBlock& blk) {
    Deformation<F> out = trivial_deformation(A);
    for (const auto& e : blk.entries) {
        if (e.order < 1) throw ParseError("deformation terms start at order one", 0);
        while (out.order() < e.order) out.theta.emplace_back(f, A.dim, A.dim);
        out.theta[std::size_t(e.order)].set(Op(e.kind), e.i, e.j, e.k, f.parse(e.coeff));
    }
    return out;
}

template <class F>
struct SeriesViolation {
    int axiom;  // 1..11
    int order;  // power of t
    int x, y, z;
    Vec<F> residual;
};

namespace detail {

// lhs minus rhs of axiom ax at the t^s coefficient on the basis triple
// (x, y, z); lo = 1 drops the theta_0 terms
template <class F>
Vec<F> series_residual(const Deformation<F>& D, int s, int ax, int x, int y, int z, int lo) {
    const F& f = D.base.field;
    const int d = D.base.dim;
    const auto& sh = axiom_shapes[std::size_t(ax)];
    const auto ex = D.base.unit_vec(x);
    const auto ez = D.base.unit_vec(z);
    Vec<F> r(std::size_t(d), f.zero());
    for (int i = lo; i <= s - lo; ++i) {
        const int j = s - i;
        if (i > D.order() || j > D.order()) continue;
        const auto& ti = D.theta[std::size_t(i)];
        const auto& tj = D.theta[std::size_t(j)];
        auto lhs = ti.apply(sh.b, tj.basis_value(sh.a, x, y), ez);
        auto rhs = ti.apply(sh.c, ex, tj.basis_value(sh.d, y, z));
        for (int k = 0; k < d; ++k) r[std::size_t(k)] = f.add(r[std::size_t(k)], f.sub(lhs[std::size_t(k)], rhs[std::size_t(k)]));
    }
    return r;
}

template <class F>
void require_deformation_shape(const Deformation<F>& D) {
    if (D.theta.empty()) throw NotADeformation("deformation has no order-zero term");
    for (const auto& t : D.theta)
        if (t.arg_dim != D.base.dim || t.val_dim != D.base.dim)
            throw DimensionMismatch("deformation term does not match the base algebra");
}

}  // namespace detail

// residuals of all eleven identities through the t^N coefficient
template <class F>
std::vector<SeriesViolation<F>> check_order(const Deformation<F>& D, int N) {
    detail::require_deformation_shape(D);
    const F& f = D.base.field;
    const int d = D.base.dim;
    std::vector<SeriesViolation<F>> out;
    for (int s = 0; s <= N; ++s)
        for (int ax = 0; ax < 11; ++ax)
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    for (int z = 0; z < d; ++z) {
                        auto r = detail::series_residual(D, s, ax, x, y, z, 0);
                        bool zero = true;
                        for (const auto& c : r)
                            if (!f.is_zero(c)) { zero = false; break; }
                        if (!zero) out.push_back({ax + 1, s, x, y, z, std::move(r)});
                    }
    return out;
}

template <class F>
bool is_two_cocycle(const TriasAlgebra<F>& A, const ModuleActions<F>& M,
                    const TwoCochainTriple<F>& t) {
    auto delta = coboundary_matrix(A, M, 2);
    auto img = mat_vec(A.field, delta, triple_to_cochain(t));
    for (const auto& c : img)
        if (!A.field.is_zero(c)) return false;
    return true;
}

template <class F>
bool is_two_cocycle(const TriasAlgebra<F>& A, const TwoCochainTriple<F>& t) {
    return is_two_cocycle(A, adjoint_representation(A), t);
}

template <class F>
struct Infinitesimal {
    int order = 0;  // first power of t with a nonzero term, 0 when the tail vanishes
    TwoCochainTriple<F> cochain;
    bool cocycle = true;
};

template <class F>
Infinitesimal<F> infinitesimal(const Deformation<F>& D) {
    if (!check_order(D, D.order()).empty())
        throw NotADeformation("series fails its defining identities at its own order");
    for (int l = 1; l <= D.order(); ++l)
        if (!D.theta[std::size_t(l)].is_zero())
            return {l, D.theta[std::size_t(l)], is_two_cocycle(D.base, D.theta[std::size_t(l)])};
    return {0, TwoCochainTriple<F>(D.base.field, D.base.dim, D.base.dim), true};
}

// phi[0] must be the identity; phi[s] is the t^s coefficient
template <class F>
struct FormalIso {
    F field;
    int dim = 0;
    std::vector<Matrix<F>> phi;
};

template <class F>
FormalIso<F> identity_iso(const F& f, int d) {
    Matrix<F> id(f, std::size_t(d), std::size_t(d));
    for (int i = 0; i < d; ++i) id.at(std::size_t(i), std::size_t(i)) = f.one();
    return {f, d, {id}};
}

namespace detail {

template <class F>
void require_unit_head(const FormalIso<F>& iso) {
    const F& f = iso.field;
    if (iso.phi.empty()) throw NotInvertible("formal isomorphism has no constant term");
    const auto& head = iso.phi[0];
    if (int(head.rows()) != iso.dim || int(head.cols()) != iso.dim)
        throw DimensionMismatch("formal isomorphism head has the wrong shape");
    for (int i = 0; i < iso.dim; ++i)
        for (int j = 0; j < iso.dim; ++j) {
            const auto& c = head.at(std::size_t(i), std::size_t(j));
            const auto want = i == j ? f.one() : f.zero();
            if (!f.is_zero(f.sub(c, want)))
                throw NotInvertible("formal isomorphism must start at the identity");
        }
    for (const auto& m : iso.phi)
        if (int(m.rows()) != iso.dim || int(m.cols()) != iso.dim)
            throw DimensionMismatch("formal isomorphism term has the wrong shape");
}

}  // namespace detail

// coefficients of the series inverse through t^N; psi_s = -sum phi_i psi_{s-i}
template <class F>
std::vector<Matrix<F>> inverse_series(const FormalIso<F>& iso, int N) {
    detail::require_unit_head(iso);
    const F& f = iso.field;
    const std::size_t d = std::size_t(iso.dim);
    std::vector<Matrix<F>> psi;
    psi.push_back(iso.phi[0]);
    for (int s = 1; s <= N; ++s) {
        Matrix<F> acc(f, d, d);
        for (int i = 1; i <= s && i < int(iso.phi.size()); ++i) {
            auto part = mat_mul(f, iso.phi[std::size_t(i)], psi[std::size_t(s - i)]);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    acc.at(r, c) = f.add(acc.at(r, c), part.at(r, c));
        }
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) acc.at(r, c) = f.neg(acc.at(r, c));
        psi.push_back(std::move(acc));
    }
    return psi;
}

// theta-bar_s = sum over i+j+k+l = s of phi_i theta_j (psi_k x, psi_l y),
// truncated at t^N
template <class F>
Deformation<F> conjugate(const Deformation<F>& D, const FormalIso<F>& iso, int N) {
    detail::require_deformation_shape(D);
    detail::require_unit_head(iso);
    if (iso.dim != D.base.dim)
        throw DimensionMismatch("formal isomorphism over a different space");
    const F& f = D.base.field;
    const int d = D.base.dim;
    const auto psi = inverse_series(iso, N);
    auto column = [&](const Matrix<F>& m, int c) {
        Vec<F> v(std::size_t(d), f.zero());
        for (int r = 0; r < d; ++r) v[std::size_t(r)] = m.at(std::size_t(r), std::size_t(c));
        return v;
    };
    Deformation<F> out{D.base, {}};
    for (int s = 0; s <= N; ++s) {
        TwoCochainTriple<F> term(f, d, d);
        for (int i = 0; i <= s && i < int(iso.phi.size()); ++i)
            for (int j = 0; j <= s - i && j <= D.order(); ++j)
                for (int k = 0; k + i + j <= s; ++k) {
                    const int l = s - i - j - k;
                    for (int op = 0; op < 3; ++op)
                        for (int x = 0; x < d; ++x)
                            for (int y = 0; y < d; ++y) {
                                auto v = D.theta[std::size_t(j)].apply(
                                    Op(op), column(psi[std::size_t(k)], x),
                                    column(psi[std::size_t(l)], y));
                                auto w = mat_vec(f, iso.phi[std::size_t(i)], v);
                                auto& row = term.tensor[op][std::size_t(x) * d + y];
                                for (int r = 0; r < d; ++r)
                                    row[std::size_t(r)] = f.add(row[std::size_t(r)], w[std::size_t(r)]);
                            }
                }
        out.theta.push_back(std::move(term));
    }
    return out;
}

// degree-three cochain whose vanishing lets the series extend one order; the
// coordinate on tree k is the i, j >= 1 part of the order-(N+1) residual of
// axiom k
template <class F>
Vec<F> obstruction(const Deformation<F>& D) {
    detail::require_deformation_shape(D);
    if (!check_order(D, D.order()).empty())
        throw NotADeformation("series fails its defining identities at its own order");
    const int d = D.base.dim;
    const auto lay = detail::coord_layout(3, d, d);
    const auto& slots = detail::axiom_tree_slots();
    Vec<F> out(lay.dim(), D.base.field.zero());
    for (int ax = 0; ax < 11; ++ax)
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    auto r = detail::series_residual(D, D.order() + 1, ax, x, y, z, 1);
                    const std::size_t word = (std::size_t(x) * d + y) * d + z;
                    for (int k = 0; k < d; ++k)
                        out[lay.index(slots[std::size_t(ax)], word, std::size_t(k))] = r[std::size_t(k)];
                }
    return out;
}

// true when appending next as the t^(N+1) term keeps all identities; computed
// both directly and through the obstruction equation, which must agree
template <class F>
bool extend(const Deformation<F>& D, const TwoCochainTriple<F>& next) {
    auto ob = obstruction(D);
    Deformation<F> grown = D;
    grown.theta.push_back(next);
    const bool direct = check_order(grown, D.order() + 1).empty();
    auto delta = coboundary_matrix(D.base, adjoint_representation(D.base), 2);
    auto img = mat_vec(D.base.field, delta, triple_to_cochain(next));
    bool via_cocycle = true;
    for (std::size_t p = 0; p < ob.size(); ++p)
        if (!D.base.field.is_zero(D.base.field.sub(ob[p], img[p]))) { via_cocycle = false; break; }
    if (direct != via_cocycle)
        throw std::logic_error("extension paths disagree");
    return direct;
}

// total space is M + A with the fiber coordinates first
template <class F>
struct AbelianExtension {
    TriasAlgebra<F> base;
    Representation<F> fiber;
    TwoCochainTriple<F> cocycle;
    TriasAlgebra<F> total;
};

template <class F>
AbelianExtension<F> extension_from_cocycle(const TriasAlgebra<F>& A, const Representation<F>& M,
                                           const TwoCochainTriple<F>& g) {
    if (M.alg_dim != A.dim)
        throw DimensionMismatch("representation over a different algebra");
    if (g.arg_dim != A.dim || g.val_dim != M.dim)
        throw DimensionMismatch("cocycle shape does not match the extension data");
    if (!is_two_cocycle(A, M, g))
        throw NotACocycle("extension datum has a nonzero coboundary");
    const F& f = A.field;
    const int m = M.dim, d = A.dim;
    TriasAlgebra<F> total(f, m + d);
    for (int op = 0; op < 3; ++op) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const auto& prod = A.basis_product(Op(op), i, j);
                for (int k = 0; k < d; ++k) total.set(Op(op), m + i, m + j, m + k, prod[k]);
                const auto& gv = g.basis_value(Op(op), i, j);
                for (int v = 0; v < m; ++v) total.set(Op(op), m + i, m + j, v, gv[v]);
            }
        for (int i = 0; i < d; ++i)
            for (int u = 0; u < m; ++u) {
                const auto lv = M.act_left(Op(op), A.unit_vec(i), M.unit_vec(u));
                for (int v = 0; v < m; ++v) total.set(Op(op), m + i, u, v, lv[v]);
                const auto rv = M.act_right(Op(op), M.unit_vec(u), A.unit_vec(i));
                for (int v = 0; v < m; ++v) total.set(Op(op), u, m + i, v, rv[v]);
            }
    }
    return {A, M, g, total};
}

// section of the projection with zero fiber part
template <class F>
Matrix<F> canonical_splitting(const AbelianExtension<F>& E) {
    const F& f = E.base.field;
    const int m = E.fiber.dim, d = E.base.dim;
    Matrix<F> sigma(f, std::size_t(m + d), std::size_t(d));
    for (int i = 0; i < d; ++i) sigma.at(std::size_t(m + i), std::size_t(i)) = f.one();
    return sigma;
}

// fiber part of sigma(a) sigma(b) - sigma(ab) for each product
template <class F>
TwoCochainTriple<F> cocycle_from_extension(const AbelianExtension<F>& E, const Matrix<F>& sigma) {
    const F& f = E.base.field;
    const int m = E.fiber.dim, d = E.base.dim;
    if (int(sigma.rows()) != m + d || int(sigma.cols()) != d)
        throw DimensionMismatch("splitting has the wrong shape");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& c = sigma.at(std::size_t(m + i), std::size_t(j));
            const auto want = i == j ? f.one() : f.zero();
            if (!f.is_zero(f.sub(c, want)))
                throw NotASplitting("map is not a section of the projection");
        }
    auto column = [&](int c) {
        Vec<F> v(std::size_t(m + d), f.zero());
        for (int r = 0; r < m + d; ++r) v[std::size_t(r)] = sigma.at(std::size_t(r), std::size_t(c));
        return v;
    };
    TwoCochainTriple<F> g(f, d, m);
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                auto prod = E.total.product(Op(op), column(i), column(j));
                auto lift = mat_vec(f, sigma, E.base.basis_product(Op(op), i, j));
                for (int v = 0; v < m; ++v)
                    g.tensor[op][std::size_t(i) * d + j][std::size_t(v)] =
                        f.sub(prod[std::size_t(v)], lift[std::size_t(v)]);
            }
    return g;
}

// two extensions of the same pair are equivalent iff the cocycles differ by a
// degree-one coboundary
template <class F>
bool extensions_equivalent(const AbelianExtension<F>& a, const AbelianExtension<F>& b) {
    if (a.base.dim != b.base.dim || a.fiber.dim != b.fiber.dim)
        throw DimensionMismatch("extensions of different pairs");
    auto diff = triple_sub(a.cocycle, b.cocycle);
    auto delta = coboundary_matrix(a.base, a.fiber, 1);
    return solve(a.base.field, delta, triple_to_cochain(diff)).has_value();
}

template <class F>
struct ObstructionLadder {
    Vec<F> representative;  // degree-two cochain coordinates
    int reached = 1;        // highest order the series attained
    bool completed = false;
};

template <class F>
struct RigidityReport {
    std::size_t h2 = 0;
    bool rigid = false;
    std::vector<ObstructionLadder<F>> ladders;
};

// dimension of degree-two cohomology, and for each class an attempt to lift
// its representative order by order through max_order
template <class F>
RigidityReport<F> rigidity_probe(const TriasAlgebra<F>& A, int max_order,
                                 ComplexBudget budget = {}) {
    const F& f = A.field;
    auto adj = adjoint_representation(A);
    RigidityReport<F> report;
    report.h2 = cohomology_dim(A, adj, 2, budget);
    report.rigid = report.h2 == 0;
    if (report.rigid) return report;
    auto d2 = coboundary_matrix(A, adj, 2, budget);
    auto d1 = coboundary_matrix(A, adj, 1, budget);
    detail::RowSpan<F> span(f, d2.cols());
    for (std::size_t c = 0; c < d1.cols(); ++c) {
        Vec<F> col(d1.rows(), f.zero());
        for (std::size_t r = 0; r < d1.rows(); ++r) col[r] = d1.at(r, c);
        span.insert(std::move(col));
    }
    for (auto& v : kernel_basis(f, d2)) {
        if (!span.insert(v)) continue;
        ObstructionLadder<F> lad;
        lad.representative = v;
        Deformation<F> D = trivial_deformation(A);
        D.theta.push_back(triple_from_cochain(f, A.dim, A.dim, v));
        while (lad.reached < max_order) {
            auto sol = solve(f, d2, obstruction(D));
            if (!sol) break;
            D.theta.push_back(triple_from_cochain(f, A.dim, A.dim, *sol));
            ++lad.reached;
        }
        lad.completed = lad.reached >= max_order;
        report.ladders.push_back(std::move(lad));
    }
    return report;
}

}  // namespace trias
