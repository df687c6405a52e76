#pragma once

// Universal enveloping algebra of a triassociative algebra, materialized on
// the coordinate space 1 (+) 6 copies of A (+) 7 copies of A (x) A.  Basis:
//   index 0                              unit
//   index 1 + fam*d + i                  generator fam(e_i), fam in the order
//                                        al, ar, am, bl, br, bm
//   index 1 + 6d + (shape*d + i)*d + j   alpha(e_i) * beta(e_j) in one of the
//                                        seven normal shapes
//     shapes: al*bl, ar*br, ar*bl, am*bl, am*br, ar*bm, am*bm
//
// Multiplication rewrites words with the pair tables below (alpha-alpha and
// beta-beta merge to one letter, beta-alpha commutes, alpha-beta collapses
// into a normal shape), so every product lands back in the space.  The
// defining operator relations are data (operator_relations); certified()
// replays them on all basis pairs.  When the three products of A do not
// already agree modulo the bl/ar kernels the materialized object is a proper
// cover of the enveloping algebra and certified() reports false rather than
// the object silently shrinking.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trias/algebra.hpp"
#include "trias/complexes.hpp"
#include "trias/errors.hpp"
#include "trias/matrix.hpp"

namespace trias {

// generator families; alpha acts by the element on the left, beta on the right
enum : int { GenAL = 0, GenAR = 1, GenAM = 2, GenBL = 3, GenBR = 4, GenBM = 5 };

namespace detail {

// one letter of an operator word: generator family plus a basis index of A
struct UALetter {
    int fam;
    int idx;
};

// one factor in a defining relation: family applied to a, b, or a product
struct UARelGen {
    int fam;
    int arg;  // 0 = a, 1 = b, 2 = product(op, a, b)
    Op op = Op::Left;
};

struct UARelation {
    std::vector<UARelGen> lhs, rhs;
};

// the 33 defining relations, in the fixed order used everywhere
inline const std::vector<UARelation>& operator_relations() {
    constexpr Op L = Op::Left, R = Op::Right, M = Op::Middle;
    constexpr int A = 0, B = 1;
    auto g = [](int fam, int arg) { return UARelGen{fam, arg, Op::Left}; };
    auto p = [](int fam, Op op) { return UARelGen{fam, 2, op}; };
    static const std::vector<UARelation> rels = {
        {{g(GenBL, B), g(GenBL, A)}, {p(GenBL, L)}},
        {{p(GenBL, L)}, {p(GenBL, M)}},
        {{p(GenBL, M)}, {p(GenBL, R)}},
        {{g(GenBL, B), g(GenAL, A)}, {g(GenAL, A), g(GenBL, B)}},
        {{g(GenAL, A), g(GenBL, B)}, {g(GenAL, A), g(GenBM, B)}},
        {{g(GenAL, A), g(GenBM, B)}, {g(GenAL, A), g(GenBR, B)}},
        {{p(GenAL, L)}, {g(GenAL, A), g(GenAL, B)}},
        {{g(GenAL, A), g(GenAL, B)}, {g(GenAL, A), g(GenAM, B)}},
        {{g(GenAL, A), g(GenAM, B)}, {g(GenAL, A), g(GenAR, B)}},
        {{p(GenBR, R)}, {g(GenBR, B), g(GenBR, A)}},
        {{g(GenBR, B), g(GenBR, A)}, {g(GenBR, B), g(GenBL, A)}},
        {{g(GenBR, B), g(GenBL, A)}, {g(GenBR, B), g(GenBM, A)}},
        {{g(GenAR, A), g(GenBR, B)}, {g(GenBR, B), g(GenAR, A)}},
        {{g(GenBR, B), g(GenAR, A)}, {g(GenBR, B), g(GenAL, A)}},
        {{g(GenBR, B), g(GenAL, A)}, {g(GenBR, B), g(GenAM, A)}},
        {{g(GenAR, A), g(GenAR, B)}, {p(GenAR, R)}},
        {{p(GenAR, R)}, {p(GenAR, L)}},
        {{p(GenAR, L)}, {p(GenAR, M)}},
        {{g(GenBL, B), g(GenBR, A)}, {p(GenBR, L)}},
        {{g(GenBL, B), g(GenAR, A)}, {g(GenAR, A), g(GenBL, B)}},
        {{p(GenAL, R)}, {g(GenAR, A), g(GenAL, B)}},
        {{g(GenBL, B), g(GenBM, A)}, {p(GenBM, L)}},
        {{g(GenBL, B), g(GenAM, A)}, {g(GenAM, A), g(GenBL, B)}},
        {{p(GenAL, M)}, {g(GenAM, A), g(GenAL, B)}},
        {{g(GenBM, B), g(GenBL, A)}, {p(GenBM, R)}},
        {{g(GenBM, B), g(GenAL, A)}, {g(GenAM, A), g(GenBR, B)}},
        {{p(GenAM, L)}, {g(GenAM, A), g(GenAR, B)}},
        {{g(GenBM, B), g(GenBR, A)}, {p(GenBR, M)}},
        {{g(GenBM, B), g(GenAR, A)}, {g(GenAR, A), g(GenBM, B)}},
        {{p(GenAM, R)}, {g(GenAR, A), g(GenAM, B)}},
        {{g(GenBM, B), g(GenBM, A)}, {p(GenBM, M)}},
        {{g(GenBM, B), g(GenAM, A)}, {g(GenAM, A), g(GenBM, B)}},
        {{p(GenAM, M)}, {g(GenAM, A), g(GenAM, B)}},
    };
    return rels;
}

}  // namespace detail

template <class F>
class EnvelopingAlgebra {
  public:
    using Elem = typename F::Elem;

    // pair rewrite tables; slots are Op values (0 left, 1 right, 2 middle)
    struct Tables {
        // alpha_x(a) * alpha_y(b) = alpha_{aa[x][y].first}(product(aa[x][y].second, a, b))
        std::array<std::array<std::pair<int, Op>, 3>, 3> aa;
        // beta_x(u) * beta_y(v) = beta_{bb[x][y].first}(product(bb[x][y].second, v, u))
        std::array<std::array<std::pair<int, Op>, 3>, 3> bb;
        // beta_y(b) * alpha_x(a) = alpha_{ba[y][x].first}(a) * beta_{ba[y][x].second}(b)
        std::array<std::array<std::pair<int, int>, 3>, 3> ba;
        // alpha_x(a) * beta_y(b) lands in shape[x][y] (collapses built in)
        std::array<std::array<int, 3>, 3> shape;
    };

    // (alpha slot, beta slot) of each normal quadratic shape
    static constexpr std::array<std::pair<int, int>, 7> shapes = {
        {{0, 0}, {1, 1}, {1, 0}, {2, 0}, {2, 1}, {1, 2}, {2, 2}}};

    static Tables standard_tables() {
        constexpr Op L = Op::Left, R = Op::Right, M = Op::Middle;
        Tables t;
        t.aa[0][0] = {0, L}; t.aa[0][1] = {0, L}; t.aa[0][2] = {0, L};
        t.aa[1][0] = {0, R}; t.aa[1][1] = {1, R}; t.aa[1][2] = {2, R};
        t.aa[2][0] = {0, M}; t.aa[2][1] = {2, L}; t.aa[2][2] = {2, M};
        t.bb[0][0] = {0, L}; t.bb[0][1] = {1, L}; t.bb[0][2] = {2, L};
        t.bb[1][0] = {1, R}; t.bb[1][1] = {1, R}; t.bb[1][2] = {1, R};
        t.bb[2][0] = {2, R}; t.bb[2][1] = {1, M}; t.bb[2][2] = {2, M};
        t.ba[0][0] = {0, 0}; t.ba[0][1] = {1, 0}; t.ba[0][2] = {2, 0};
        t.ba[1][0] = {1, 1}; t.ba[1][1] = {1, 1}; t.ba[1][2] = {1, 1};
        t.ba[2][0] = {2, 1}; t.ba[2][1] = {1, 2}; t.ba[2][2] = {2, 2};
        t.shape[0] = {0, 0, 0};
        t.shape[1] = {2, 1, 5};
        t.shape[2] = {3, 4, 6};
        return t;
    }

    explicit EnvelopingAlgebra(const TriasAlgebra<F>& A, Tables t = standard_tables())
        : a_(A), tables(t) {}

    const TriasAlgebra<F>& algebra() const { return a_; }
    const F& field() const { return a_.field; }
    int alg_dim() const { return a_.dim; }
    std::size_t dim() const {
        const std::size_t d = std::size_t(a_.dim);
        return 1 + 6 * d + 7 * d * d;
    }

    std::size_t gen_index(int fam, int i) const { return 1 + std::size_t(fam) * a_.dim + i; }
    std::size_t quad_index(int shape, int i, int j) const {
        const std::size_t d = std::size_t(a_.dim);
        return 1 + 6 * d + (std::size_t(shape) * d + i) * d + j;
    }

    Vec<F> zero() const { return Vec<F>(dim(), field().zero()); }
    Vec<F> one() const {
        auto v = zero();
        v[0] = field().one();
        return v;
    }
    Vec<F> basis_vec(std::size_t idx) const {
        auto v = zero();
        v.at(idx) = field().one();
        return v;
    }

    // word of a basis element: 0, 1, or 2 letters
    std::vector<std::pair<int, int>> basis_word(std::size_t idx) const {
        if (idx >= dim()) throw IndexOutOfRange("enveloping algebra basis index");
        if (idx == 0) return {};
        const std::size_t d = std::size_t(a_.dim);
        if (idx < 1 + 6 * d) {
            const std::size_t r = idx - 1;
            return {{int(r / d), int(r % d)}};
        }
        const std::size_t q = idx - 1 - 6 * d;
        const int shape = int(q / (d * d));
        const int i = int(q / d % d), j = int(q % d);
        return {{shapes[shape].first, i}, {3 + shapes[shape].second, j}};
    }

    Vec<F> generator(int fam, const Vec<F>& a) const {
        if (int(a.size()) != a_.dim) throw DimensionMismatch("generator argument size");
        auto v = zero();
        for (int i = 0; i < a_.dim; ++i) v[gen_index(fam, i)] = a[i];
        return v;
    }
    Vec<F> alpha(Op slot, const Vec<F>& a) const { return generator(int(slot), a); }
    Vec<F> beta(Op slot, const Vec<F>& a) const { return generator(3 + int(slot), a); }

    Vec<F> multiply(const Vec<F>& u, const Vec<F>& v) const {
        if (u.size() != dim() || v.size() != dim())
            throw DimensionMismatch("enveloping algebra element size");
        const F& f = field();
        auto out = zero();
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (f.is_zero(u[i])) continue;
            const auto wi = basis_word(i);
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (f.is_zero(v[j])) continue;
                std::vector<detail::UALetter> w;
                for (auto [fam, idx] : wi) w.push_back({fam, idx});
                for (auto [fam, idx] : basis_word(j)) w.push_back({fam, idx});
                reduce_into(out, f.mul(u[i], v[j]), std::move(w));
            }
        }
        return out;
    }

    // filtration length of an element: highest nonzero block
    int length(const Vec<F>& u) const {
        const F& f = field();
        const std::size_t d = std::size_t(a_.dim);
        for (std::size_t k = 1 + 6 * d; k < u.size(); ++k)
            if (!f.is_zero(u[k])) return 2;
        for (std::size_t k = 1; k < 1 + 6 * d; ++k)
            if (!f.is_zero(u[k])) return 1;
        return 0;
    }

    // filtration quotient dimensions (unit, generators, realized quadratic span)
    std::vector<std::size_t> gr_dims() const {
        const std::size_t d = std::size_t(a_.dim);
        detail::RowSpan<F> span(field(), 7 * d * d);
        for (int s = 0; s < 6; ++s)
            for (int i = 0; i < a_.dim; ++i) {
                const auto g = basis_vec(gen_index(s, i));
                for (int t = 0; t < 6; ++t)
                    for (int j = 0; j < a_.dim; ++j) {
                        const auto p = multiply(g, basis_vec(gen_index(t, j)));
                        Vec<F> quad(p.begin() + 1 + 6 * d, p.end());
                        span.insert(std::move(quad));
                    }
            }
        return {1, 6 * d, span.rank()};
    }

    // replays the defining relations on all basis pairs, checks the unit laws,
    // and tests associativity on generator triples
    bool certified() const {
        for (std::size_t u = 0; u < dim(); ++u) {
            const auto b = basis_vec(u);
            if (!vec_eq(multiply(one(), b), b) || !vec_eq(multiply(b, one()), b)) return false;
        }
        for (int ia = 0; ia < a_.dim; ++ia)
            for (int ib = 0; ib < a_.dim; ++ib)
                for (const auto& rel : detail::operator_relations())
                    if (!vec_eq(eval_side(rel.lhs, ia, ib), eval_side(rel.rhs, ia, ib)))
                        return false;
        std::vector<int> args;
        if (a_.dim <= 3) {
            for (int i = 0; i < a_.dim; ++i) args.push_back(i);
        } else {
            args = {0, a_.dim / 2, a_.dim - 1};
        }
        for (int s = 0; s < 6; ++s)
            for (int t = 0; t < 6; ++t)
                for (int w = 0; w < 6; ++w)
                    for (int i : args)
                        for (int j : args)
                            for (int k : args) {
                                const auto g = basis_vec(gen_index(s, i));
                                const auto h = basis_vec(gen_index(t, j));
                                const auto e = basis_vec(gen_index(w, k));
                                if (!vec_eq(multiply(multiply(g, h), e),
                                            multiply(g, multiply(h, e))))
                                    return false;
                            }
        return true;
    }

    // table data is deliberately mutable so tests can probe the certification
    Tables tables;

  private:
    TriasAlgebra<F> a_;

    bool vec_eq(const Vec<F>& x, const Vec<F>& y) const {
        const F& f = field();
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!f.eq(x[k], y[k])) return false;
        return true;
    }

    Vec<F> eval_side(const std::vector<detail::UARelGen>& side, int ia, int ib) const {
        auto acc = one();
        for (const auto& g : side) {
            Vec<F> arg;
            if (g.arg == 0)
                arg = a_.unit_vec(ia);
            else if (g.arg == 1)
                arg = a_.unit_vec(ib);
            else
                arg = a_.basis_product(g.op, ia, ib);
            acc = multiply(acc, generator(g.fam, arg));
        }
        return acc;
    }

    // rewrite a word times a coefficient into normal-form coordinates
    void reduce_into(Vec<F>& out, const Elem& c, std::vector<detail::UALetter> w) const {
        const F& f = field();
        if (f.is_zero(c)) return;
        if (w.empty()) {
            out[0] = f.add(out[0], c);
            return;
        }
        if (w.size() == 1) {
            const auto k = gen_index(w[0].fam, w[0].idx);
            out[k] = f.add(out[k], c);
            return;
        }
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            const auto a = w[p], b = w[p + 1];
            const bool a_alpha = a.fam < 3, b_alpha = b.fam < 3;
            if (a_alpha && b_alpha) {
                const auto [slot, op] = tables.aa[a.fam][b.fam];
                merge_at(out, c, w, p, slot, a_.basis_product(op, a.idx, b.idx));
                return;
            }
            if (!a_alpha && !b_alpha) {
                const auto [slot, op] = tables.bb[a.fam - 3][b.fam - 3];
                merge_at(out, c, w, p, 3 + slot, a_.basis_product(op, b.idx, a.idx));
                return;
            }
            if (!a_alpha && b_alpha) {
                const auto [x2, y2] = tables.ba[a.fam - 3][b.fam];
                w[p] = {x2, b.idx};
                w[p + 1] = {3 + y2, a.idx};
                reduce_into(out, c, std::move(w));
                return;
            }
        }
        if (w.size() == 2 && w[0].fam < 3 && w[1].fam >= 3) {
            const auto k = quad_index(tables.shape[w[0].fam][w[1].fam - 3], w[0].idx, w[1].idx);
            out[k] = f.add(out[k], c);
            return;
        }
        throw std::logic_error("operator word failed to reduce");
    }

    void merge_at(Vec<F>& out, const Elem& c, const std::vector<detail::UALetter>& w,
                  std::size_t p, int fam, const Vec<F>& prod) const {
        const F& f = field();
        for (int k = 0; k < a_.dim; ++k) {
            if (f.is_zero(prod[k])) continue;
            std::vector<detail::UALetter> w2;
            w2.reserve(w.size() - 1);
            for (std::size_t q = 0; q < w.size(); ++q) {
                if (q == p + 1) continue;
                w2.push_back(q == p ? detail::UALetter{fam, k} : w[q]);
            }
            reduce_into(out, f.mul(c, prod[k]), std::move(w2));
        }
    }
};

// right multiplication by generators makes the enveloping algebra a
// corepresentation of A on its own coordinate space
template <class F>
Corepresentation<F> ua_as_corepresentation(const EnvelopingAlgebra<F>& ua) {
    const auto& A = ua.algebra();
    const std::size_t n = ua.dim();
    ModuleActions<F> N(ua.field(), A.dim, int(n));
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < A.dim; ++i)
            for (std::size_t u = 0; u < n; ++u) {
                const auto x = ua.basis_vec(u);
                N.from_left[op][std::size_t(i) * n + u] =
                    ua.multiply(x, ua.alpha(Op(op), A.unit_vec(i)));
                N.from_right[op][u * A.dim + i] =
                    ua.multiply(x, ua.beta(Op(op), A.unit_vec(i)));
            }
    return N;
}

namespace detail {

// generator acting on a module through the representation dictionary:
// alpha uses the element on the left, beta on the right
template <class F>
Vec<F> ua_generator_apply(const Representation<F>& M, int fam, const Vec<F>& a,
                          const Vec<F>& x) {
    switch (fam) {
        case GenAL: return M.act_left(Op::Left, a, x);
        case GenAR: return M.act_left(Op::Right, a, x);
        case GenAM: return M.act_left(Op::Middle, a, x);
        case GenBL: return M.act_right(Op::Left, x, a);
        case GenBR: return M.act_right(Op::Right, x, a);
        default: return M.act_right(Op::Middle, x, a);
    }
}

// columns of every basis element of the enveloping algebra acting on M
template <class F>
std::vector<std::vector<Vec<F>>> ua_action_columns(const EnvelopingAlgebra<F>& ua,
                                                   const Representation<F>& M) {
    const auto& A = ua.algebra();
    std::vector<std::vector<Vec<F>>> act(ua.dim());
    for (std::size_t u = 0; u < ua.dim(); ++u) {
        const auto word = ua.basis_word(u);
        act[u].resize(M.dim);
        for (int v = 0; v < M.dim; ++v) {
            auto x = M.unit_vec(v);
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                x = ua_generator_apply(M, it->first, A.unit_vec(it->second), x);
            act[u][v] = std::move(x);
        }
    }
    return act;
}

// pairing identity between cochain faces on M and chain faces over the
// enveloping algebra: <delta_i f, psi(x)x(x)word> = x . f(d_i(psi(x)word))
template <class F>
bool cotangent_faces_agree(const F& f, int n, int d, int m, std::size_t ua_dim,
                           const std::vector<std::vector<Vec<F>>>& act,
                           const std::vector<Matrix<F>>& chain_faces,
                           const std::vector<Matrix<F>>& cochain_faces) {
    const auto lay_n1 = coord_layout(n + 1, d, int(ua_dim));
    const auto lay_n = coord_layout(n, d, int(ua_dim));
    const auto colay_n1 = coord_layout(n + 1, d, m);
    const auto colay_n = coord_layout(n, d, m);
    for (int i = 0; i <= n + 1; ++i) {
        const auto& D = chain_faces[i];
        const auto& C = cochain_faces[i];
        for (std::size_t cf = 0; cf < colay_n.dim(); ++cf) {
            const std::size_t v = cf % m;
            const std::size_t word = cf / m % colay_n.words;
            const std::size_t tree = cf / m / colay_n.words;
            for (std::size_t T = 0; T < lay_n1.trees; ++T)
                for (std::size_t W = 0; W < lay_n1.words; ++W)
                    for (std::size_t u = 0; u < ua_dim; ++u) {
                        const std::size_t e = lay_n1.index(T, W, u);
                        for (int k = 0; k < m; ++k) {
                            auto lhs = f.zero();
                            for (int v2 = 0; v2 < m; ++v2) {
                                const auto& c = C.at(colay_n1.index(T, W, v2), cf);
                                if (!f.is_zero(c)) lhs = f.add(lhs, f.mul(c, act[u][v2][k]));
                            }
                            auto rhs = f.zero();
                            for (std::size_t u2 = 0; u2 < ua_dim; ++u2) {
                                const auto& c = D.at(lay_n.index(tree, word, u2), e);
                                if (!f.is_zero(c)) rhs = f.add(rhs, f.mul(c, act[u2][v][k]));
                            }
                            if (!f.eq(lhs, rhs)) return false;
                        }
                    }
        }
    }
    return true;
}

}  // namespace detail

// every coboundary face on a representation is the transpose, through the
// module pairing, of the matching chain face over the enveloping algebra
template <class F>
bool cotangent_pairing_check(const TriasAlgebra<F>& A, const Representation<F>& M, int n,
                             ComplexBudget budget = {}) {
    if (n < 0) throw IndexOutOfRange("cotangent pairing degree");
    if (n > 2) throw ResourceLimit("cotangent pairing capped at degree 2");
    EnvelopingAlgebra<F> ua(A);
    const auto U = ua_as_corepresentation(ua);
    const auto act = detail::ua_action_columns(ua, M);
    std::vector<Matrix<F>> chain_faces, cochain_faces;
    for (int i = 0; i <= n + 1; ++i) {
        chain_faces.push_back(chain_face_matrix(A, U, n + 1, i, budget));
        cochain_faces.push_back(coboundary_face_matrix(A, M, n, i, budget));
    }
    return detail::cotangent_faces_agree(A.field, n, A.dim, M.dim, ua.dim(), act, chain_faces,
                                         cochain_faces);
}

// the 33 defining relations hold as operator identities on any representation
template <class F>
bool representation_to_left_module_check(const TriasAlgebra<F>& A, const Representation<F>& M) {
    if (M.alg_dim != A.dim) throw DimensionMismatch("representation over a different algebra");
    const F& f = A.field;
    auto eval = [&](const std::vector<detail::UARelGen>& side, int ia, int ib, int u) {
        auto x = M.unit_vec(u);
        for (auto it = side.rbegin(); it != side.rend(); ++it) {
            Vec<F> arg;
            if (it->arg == 0)
                arg = A.unit_vec(ia);
            else if (it->arg == 1)
                arg = A.unit_vec(ib);
            else
                arg = A.basis_product(it->op, ia, ib);
            x = detail::ua_generator_apply(M, it->fam, arg, x);
        }
        return x;
    };
    for (int ia = 0; ia < A.dim; ++ia)
        for (int ib = 0; ib < A.dim; ++ib)
            for (int u = 0; u < M.dim; ++u)
                for (const auto& rel : detail::operator_relations()) {
                    const auto lhs = eval(rel.lhs, ia, ib, u);
                    const auto rhs = eval(rel.rhs, ia, ib, u);
                    for (int k = 0; k < M.dim; ++k)
                        if (!f.eq(lhs[k], rhs[k])) return false;
                }
    return true;
}

// graded comparison against the enveloping algebra of the zeroed products:
// certified relations, equal filtration dimensions, equal graded products
template <class F>
bool pbw_check(const EnvelopingAlgebra<F>& ua) {
    if (!ua.certified()) return false;
    const auto& A = ua.algebra();
    EnvelopingAlgebra<F> uv(zeroed_products(A));
    if (ua.gr_dims() != uv.gr_dims()) return false;
    const F& f = ua.field();
    const std::size_t quad0 = 1 + 6 * std::size_t(A.dim);
    for (int s = 0; s < 6; ++s)
        for (int i = 0; i < A.dim; ++i)
            for (int t = 0; t < 6; ++t)
                for (int j = 0; j < A.dim; ++j) {
                    const auto p = ua.multiply(ua.basis_vec(ua.gen_index(s, i)),
                                               ua.basis_vec(ua.gen_index(t, j)));
                    const auto q = uv.multiply(uv.basis_vec(uv.gen_index(s, i)),
                                               uv.basis_vec(uv.gen_index(t, j)));
                    for (std::size_t k = quad0; k < p.size(); ++k)
                        if (!f.eq(p[k], q[k])) return false;
                }
    return true;
}

template <class F>
bool pbw_check(const TriasAlgebra<F>& A) {
    return pbw_check(EnvelopingAlgebra<F>(A));
}

}  // namespace trias
