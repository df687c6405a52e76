#pragma once

// Free three-product algebra on g generators, truncated at a maximum degree.
// Degree-n monomials are planar binary parenthesizations of n generators with
// one of the three operations at each internal node. The quotient by the
// defining identities is computed per degree as the span of
//   - every axiom instance whose three arguments are lower-degree monomials,
//   - monomial * relation and relation * monomial for every degree split,
// followed by row reduction; coset representatives are the non-pivot
// monomials.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "trias/algebra.hpp"
#include "trias/errors.hpp"
#include "trias/matrix.hpp"

namespace trias {

template <class F>
class GradedFreeAlgebra {
  public:
    GradedFreeAlgebra(const F& f, int generators, int max_degree,
                      std::size_t monomial_budget = 500000)
        : f_(f), g_(generators), maxdeg_(max_degree) {
        if (g_ < 1 || maxdeg_ < 1) throw std::invalid_argument("need g >= 1 and degree >= 1");
        build_monomials(monomial_budget);
        build_relations();
        int off = 0;
        offset_.assign(maxdeg_ + 1, 0);
        for (int n = 1; n <= maxdeg_; ++n) {
            offset_[n] = off;
            off += int(reps_[n].size());
        }
        total_ = off;
    }

    const F& field() const { return f_; }
    int generators() const { return g_; }
    int max_degree() const { return maxdeg_; }
    std::size_t monomial_count(int n) const { return count_.at(n); }
    int slice_dim(int n) const { return int(reps_.at(n).size()); }
    int total_dim() const { return total_; }
    int global_index(int n, int i) const { return offset_.at(n) + i; }

    // coset normal form inside the degree-n monomial coordinate space
    Vec<F> normal_form(int n, Vec<F> v) const {
        const auto& ech = ech_[n];
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
            const auto c = ech.pivot_cols[r];
            if (f_.is_zero(v[c])) continue;
            const auto coef = v[c];
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!f_.is_zero(ech.rref.at(r, k)))
                    v[k] = f_.sub(v[k], f_.mul(coef, ech.rref.at(r, k)));
        }
        return v;
    }

    Vec<F> rep_coords(int n, const Vec<F>& monomial_coords) const {
        auto nf = normal_form(n, monomial_coords);
        Vec<F> out(reps_[n].size(), f_.zero());
        for (std::size_t i = 0; i < reps_[n].size(); ++i) out[i] = nf[reps_[n][i]];
        return out;
    }

    // product of coset representatives; empty vector when the degree is truncated
    Vec<F> rep_product(Op op, int a, int i, int b, int j) const {
        const int n = a + b;
        if (n > maxdeg_) return {};
        const auto id = id_of(n, int(op), a, std::size_t(reps_[a][i]), std::size_t(reps_[b][j]));
        Vec<F> out(reps_[n].size(), f_.zero());
        const int prow = pivot_row_[n][id];
        if (prow < 0) {
            for (std::size_t k = 0; k < reps_[n].size(); ++k)
                if (std::size_t(reps_[n][k]) == id) out[k] = f_.one();
        } else {
            for (std::size_t k = 0; k < reps_[n].size(); ++k)
                out[k] = f_.neg(ech_[n].rref.at(prow, reps_[n][k]));
        }
        return out;
    }

    // structure constants of the truncated quotient, basis ordered by degree
    // then representative position
    TriasAlgebra<F> as_algebra() const {
        TriasAlgebra<F> A(f_, total_);
        for (int a = 1; a <= maxdeg_; ++a)
            for (int b = 1; a + b <= maxdeg_; ++b)
                for (int op = 0; op < 3; ++op)
                    for (int i = 0; i < slice_dim(a); ++i)
                        for (int j = 0; j < slice_dim(b); ++j) {
                            auto coords = rep_product(Op(op), a, i, b, j);
                            for (std::size_t k = 0; k < coords.size(); ++k)
                                if (!f_.is_zero(coords[k]))
                                    A.set(Op(op), global_index(a, i), global_index(b, j),
                                          global_index(a + b, int(k)), coords[k]);
                        }
        return A;
    }

  private:
    struct Mono {
        int op, ldeg, lidx, ridx;
    };

    F f_;
    int g_, maxdeg_, total_ = 0;
    std::vector<std::size_t> count_;                       // monomials per degree
    std::vector<std::vector<std::size_t>> split_base_;     // [n][a] block offset
    std::vector<Echelon<F>> ech_;                          // relation span per degree
    std::vector<std::vector<int>> pivot_row_;              // monomial id -> rref row or -1
    std::vector<std::vector<int>> reps_;                   // non-pivot monomial ids
    std::vector<int> offset_;

    std::size_t id_of(int n, int op, int a, std::size_t lidx, std::size_t ridx) const {
        const int b = n - a;
        return split_base_[n][a] + (std::size_t(op) * count_[a] + lidx) * count_[b] + ridx;
    }

    void build_monomials(std::size_t budget) {
        count_.assign(maxdeg_ + 1, 0);
        split_base_.assign(maxdeg_ + 1, {});
        count_[1] = std::size_t(g_);
        for (int n = 2; n <= maxdeg_; ++n) {
            split_base_[n].assign(n, 0);
            std::size_t total = 0;
            for (int a = 1; a < n; ++a) {
                split_base_[n][a] = total;
                total += 3 * count_[a] * count_[n - a];
                if (total > budget) throw ResourceLimit("monomial budget exceeded");
            }
            count_[n] = total;
        }
    }

    void build_relations() {
        ech_.assign(maxdeg_ + 1, Echelon<F>{Matrix<F>(f_, 0, 0), {}});
        pivot_row_.assign(maxdeg_ + 1, {});
        reps_.assign(maxdeg_ + 1, {});
        reps_[1].resize(g_);
        for (int i = 0; i < g_; ++i) reps_[1][i] = i;
        pivot_row_[1].assign(g_, -1);

        for (int n = 2; n <= maxdeg_; ++n) {
            std::vector<Vec<F>> rows;
            // axiom instances at the top node, monomial arguments
            for (const auto& s : axiom_shapes)
                for (int p = 1; p <= n - 2; ++p)
                    for (int q = 1; p + q <= n - 1; ++q) {
                        const int r = n - p - q;
                        for (std::size_t x = 0; x < count_[p]; ++x)
                            for (std::size_t y = 0; y < count_[q]; ++y)
                                for (std::size_t z = 0; z < count_[r]; ++z) {
                                    const auto inner_l = id_of(p + q, int(s.a), p, x, y);
                                    const auto lhs = id_of(n, int(s.b), p + q, inner_l, z);
                                    const auto inner_r = id_of(q + r, int(s.d), q, y, z);
                                    const auto rhs = id_of(n, int(s.c), p, x, inner_r);
                                    if (lhs == rhs) continue;
                                    Vec<F> row(count_[n], f_.zero());
                                    row[lhs] = f_.one();
                                    row[rhs] = f_.neg(f_.one());
                                    rows.push_back(std::move(row));
                                }
                    }
            // monomial * relation and relation * monomial
            for (int a = 1; a < n; ++a) {
                const int b = n - a;
                const auto& echb = ech_[b];
                for (int op = 0; op < 3; ++op) {
                    for (std::size_t rr = 0; rr < echb.pivot_cols.size(); ++rr)
                        for (std::size_t x = 0; x < count_[a]; ++x) {
                            Vec<F> row(count_[n], f_.zero());
                            for (std::size_t k = 0; k < count_[b]; ++k)
                                if (!f_.is_zero(echb.rref.at(rr, k)))
                                    row[id_of(n, op, a, x, k)] = echb.rref.at(rr, k);
                            rows.push_back(std::move(row));
                        }
                    const auto& echa = ech_[a];
                    for (std::size_t rr = 0; rr < echa.pivot_cols.size(); ++rr)
                        for (std::size_t y = 0; y < count_[b]; ++y) {
                            Vec<F> row(count_[n], f_.zero());
                            for (std::size_t k = 0; k < count_[a]; ++k)
                                if (!f_.is_zero(echa.rref.at(rr, k)))
                                    row[id_of(n, op, a, k, y)] = echa.rref.at(rr, k);
                            rows.push_back(std::move(row));
                        }
                }
            }
            Matrix<F> m(f_, rows.size(), count_[n]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < count_[n]; ++c) m.at(r, c) = rows[r][c];
            ech_[n] = reduced_row_echelon(f_, std::move(m));
            pivot_row_[n].assign(count_[n], -1);
            for (std::size_t r = 0; r < ech_[n].pivot_cols.size(); ++r)
                pivot_row_[n][ech_[n].pivot_cols[r]] = int(r);
            for (std::size_t c = 0; c < count_[n]; ++c)
                if (pivot_row_[n][c] < 0) reps_[n].push_back(int(c));
        }
    }
};

}  // namespace trias
