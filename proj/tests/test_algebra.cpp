#include <array>
#include <vector>

#include "doctest.h"
#include "trias/algebra.hpp"
#include "trias/fields.hpp"

using namespace trias;

namespace {

using QA = TriasAlgebra<QField>;
using QM = ModuleActions<QField>;

// associative d=2 algebra K[t]/(t^2), all three products equal
QA dual_numbers(const QField& f) {
    QA A(f, 2);
    for (int op = 0; op < 3; ++op) {
        A.set(Op(op), 0, 0, 0, f.one());
        A.set(Op(op), 0, 1, 1, f.one());
        A.set(Op(op), 1, 0, 1, f.one());
    }
    return A;
}

// left actions of the line on K by multiplication, right actions zero
QM one_sided_line_module(const QField& f) {
    QM M(f, 1, 1);
    for (int op = 0; op < 3; ++op) M.set_left(Op(op), 0, 0, 0, f.one());
    return M;
}

// rank of the span of a list of coordinate vectors
int span_rank(const QField& f, const std::vector<Vec<QField>>& vs, int ncols) {
    Matrix<QField> m(f, vs.size(), ncols);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (int c = 0; c < ncols; ++c) m.at(r, c) = vs[r][c];
    return int(rank(f, m));
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("abelian algebras satisfy every axiom") {
    QField f;
    for (int d = 1; d <= 3; ++d) CHECK(check_axioms(abelian_algebra(f, d)).empty());
}

TEST_CASE("the line with all three products equal is triassociative") {
    QField f;
    CHECK(check_axioms(assoc_line(f)).empty());
}

TEST_CASE("any associative product used for all three operations works") {
    QField f;
    CHECK(check_axioms(dual_numbers(f)).empty());
}

TEST_CASE("zeroing the right and middle products of the line breaks exactly the axioms that rewrite an inner left product") {
    QField f;
    QA A(f, 1);
    A.set(Op::Left, 0, 0, 0, f.one());
    auto v = check_axioms(A);
    REQUIRE(v.size() == 2);
    CHECK(v[0].axiom == 2);
    CHECK(v[1].axiom == 6);
    CHECK(v[0].triple == std::array<int, 3>{0, 0, 0});
    CHECK(f.eq(v[0].residual[0], f.one()));
    CHECK(f.eq(v[1].residual[0], f.one()));
}

TEST_CASE("scaling one product of a valid algebra produces violations") {
    QField f;
    auto A = assoc_line(f);
    A.set(Op::Middle, 0, 0, 0, f.from_long(2));
    CHECK(!check_axioms(A).empty());
}

TEST_CASE("direct sums of valid algebras are valid") {
    QField f;
    auto S = direct_sum(assoc_line(f), abelian_algebra(f, 2));
    CHECK(S.dim == 3);
    CHECK(check_axioms(S).empty());
    auto S2 = direct_sum(dual_numbers(f), assoc_line(f));
    CHECK(check_axioms(S2).empty());
}

TEST_CASE("product of vectors is bilinear in both slots") {
    QField f;
    auto A = assoc_line(f);
    Vec<QField> x{f.from_long(2)}, y{f.from_long(3)};
    auto p = A.product(Op::Left, x, y);
    CHECK(f.eq(p[0], f.from_long(6)));
}

TEST_CASE("adjoint actions of a valid algebra satisfy the 33 mixed axioms") {
    QField f;
    for (const auto& A : {assoc_line(f), dual_numbers(f),
                          direct_sum(assoc_line(f), abelian_algebra(f, 2))}) {
        auto M = adjoint_representation(A);
        CHECK(check_representation(A, M).empty());
    }
}

TEST_CASE("zero actions of any dimension form a representation") {
    QField f;
    auto A = dual_numbers(f);
    CHECK(check_representation(A, zero_actions(f, 2, 3)).empty());
}

TEST_CASE("one-sided multiplication actions on the line form a representation") {
    QField f;
    auto A = assoc_line(f);
    CHECK(check_representation(A, one_sided_line_module(f)).empty());
}

TEST_CASE("perturbed adjoint actions are rejected with axiom and slot identified") {
    QField f;
    auto A = assoc_line(f);
    auto M = adjoint_representation(A);
    M.set_left(Op::Left, 0, 0, 0, f.from_long(2));
    auto v = check_representation(A, M);
    REQUIRE(!v.empty());
    for (const auto& viol : v) {
        CHECK(viol.axiom >= 1);
        CHECK(viol.axiom <= 11);
        CHECK(viol.slot >= 0);
        CHECK(viol.slot <= 2);
    }
}

TEST_CASE("patterned action tensors over the dual numbers are generically invalid") {
    QField f;
    auto A = dual_numbers(f);
    QM M(f, 2, 2);
    for (int op = 0; op < 3; ++op)
        for (int i = 0; i < 2; ++i)
            for (int u = 0; u < 2; ++u)
                for (int v = 0; v < 2; ++v) {
                    M.set_left(Op(op), i, u, v, f.from_long((op + 2 * i + 3 * u + v) % 5));
                    M.set_right(Op(op), u, i, v, f.from_long((2 * op + i + u + 3 * v) % 7));
                }
    CHECK(!check_representation(A, M).empty());
}

TEST_CASE("representation checks demand matching algebra dimension") {
    QField f;
    CHECK_THROWS_AS(check_representation(abelian_algebra(f, 2), zero_actions(f, 1, 1)),
                    DimensionMismatch);
    CHECK_THROWS_AS(check_corepresentation(abelian_algebra(f, 2), zero_actions(f, 1, 1)),
                    DimensionMismatch);
}

TEST_CASE("trivial coactions of any dimension form a corepresentation") {
    QField f;
    auto A = dual_numbers(f);
    CHECK(check_corepresentation(A, zero_actions(f, 2, 1)).empty());
    CHECK(check_corepresentation(A, zero_actions(f, 2, 3)).empty());
}

TEST_CASE("the opposite of the adjoint line module has the four expected actions") {
    QField f;
    auto A = assoc_line(f);
    auto N = opposite_corepresentation(adjoint_representation(A));
    // a>x = x ⊣ a, a∧x = x ⊥ a, x<a = a ⊢ x, x∧a = a ⊥ x, the rest vanish
    CHECK(f.eq(N.from_left[int(Op::Right)][0][0], f.one()));
    CHECK(f.eq(N.from_left[int(Op::Middle)][0][0], f.one()));
    CHECK(f.eq(N.from_right[int(Op::Left)][0][0], f.one()));
    CHECK(f.eq(N.from_right[int(Op::Middle)][0][0], f.one()));
    CHECK(f.is_zero(N.from_left[int(Op::Left)][0][0]));
    CHECK(f.is_zero(N.from_right[int(Op::Right)][0][0]));
}

TEST_CASE("opposite corepresentations satisfy all 33 coaction axioms") {
    QField f;
    for (const auto& A : {assoc_line(f), dual_numbers(f),
                          direct_sum(assoc_line(f), abelian_algebra(f, 2))}) {
        auto M = adjoint_representation(A);
        REQUIRE(check_representation(A, M).empty());
        CHECK(check_corepresentation(A, opposite_corepresentation(M)).empty());
    }
    auto A = assoc_line(f);
    CHECK(check_corepresentation(A, opposite_corepresentation(one_sided_line_module(f))).empty());
}

TEST_CASE("perturbing an opposite corepresentation is detected") {
    QField f;
    auto A = dual_numbers(f);
    auto N = opposite_corepresentation(adjoint_representation(A));
    N.from_right[int(Op::Left)][0][0] = f.from_long(5);
    auto v = check_corepresentation(A, N);
    REQUIRE(!v.empty());
    CHECK(v[0].axiom >= 1);
    CHECK(v[0].axiom <= 33);
}

TEST_CASE("abelian pairs have all of Hom as derivations and none inner") {
    QField f;
    auto A = abelian_algebra(f, 2);
    auto M = zero_actions(f, 2, 3);
    CHECK(derivations(A, M).size() == 6);
    CHECK(inner_derivations(A, M).empty());
}

TEST_CASE("the commutative line has no inner derivations on its adjoint module") {
    QField f;
    auto A = assoc_line(f);
    auto M = adjoint_representation(A);
    CHECK(inner_derivations(A, M).empty());
    CHECK(derivations(A, M).empty());
}

TEST_CASE("one-sided line module has matching derivation and inner spans") {
    QField f;
    auto A = assoc_line(f);
    auto M = one_sided_line_module(f);
    auto der = derivations(A, M);
    auto inn = inner_derivations(A, M);
    CHECK(der.size() == 1);
    CHECK(inn.size() == 1);
}

TEST_CASE("inner derivations always lie inside the derivation space") {
    QField f;
    struct Pair {
        QA A;
        QM M;
    };
    std::vector<Pair> fixtures;
    fixtures.push_back({assoc_line(f), adjoint_representation(assoc_line(f))});
    fixtures.push_back({dual_numbers(f), adjoint_representation(dual_numbers(f))});
    fixtures.push_back({assoc_line(f), one_sided_line_module(f)});
    auto S = direct_sum(dual_numbers(f), assoc_line(f));
    fixtures.push_back({S, adjoint_representation(S)});
    for (const auto& [A, M] : fixtures) {
        auto der = derivations(A, M);
        auto inn = inner_derivations(A, M);
        auto all = der;
        all.insert(all.end(), inn.begin(), inn.end());
        const int ncols = A.dim * M.dim;
        CHECK(span_rank(f, all, ncols) == span_rank(f, der, ncols));
    }
}

TEST_CASE("invariant vectors are those with left and right unit actions equal") {
    QField f;
    // zero actions: everything is invariant
    CHECK(invariants_basis(abelian_algebra(f, 2), zero_actions(f, 2, 3)).size() == 3);
    // commutative adjoint: a ⊣ m and m ⊢ a agree, everything invariant
    auto A = assoc_line(f);
    CHECK(invariants_basis(A, adjoint_representation(A)).size() == 1);
    // one-sided module: a ⊣ m = am, m ⊢ a = 0, so only 0 is invariant
    CHECK(invariants_basis(A, one_sided_line_module(f)).empty());
}

TEST_CASE("abelianization counts basis directions not hit by products") {
    QField f;
    CHECK(abelianization_dim(abelian_algebra(f, 3)) == 3);
    CHECK(abelianization_dim(assoc_line(f)) == 0);
    CHECK(abelianization_dim(dual_numbers(f)) == 0);
    CHECK(abelianization_dim(direct_sum(assoc_line(f), abelian_algebra(f, 2))) == 2);
}

TEST_CASE("zeroed companion keeps dimension and drops products") {
    QField f;
    auto Z = zeroed_products(dual_numbers(f));
    CHECK(Z.dim == 2);
    CHECK(check_axioms(Z).empty());
    CHECK(abelianization_dim(Z) == 2);
}

TEST_CASE("module actions are bilinear") {
    QField f;
    auto A = dual_numbers(f);
    auto M = adjoint_representation(A);
    Vec<QField> a{f.from_long(2), f.from_long(1)};
    Vec<QField> x{f.zero(), f.from_long(3)};
    // (2e0 + e1) ⊣ (3e1) = 6 e1 (since e0 e1 = e1, e1 e1 = 0)
    auto got = M.act_left(Op::Left, a, x);
    CHECK(f.is_zero(got[0]));
    CHECK(f.eq(got[1], f.from_long(6)));
    auto got2 = M.act_right(Op::Right, x, a);
    CHECK(f.is_zero(got2[0]));
    CHECK(f.eq(got2[1], f.from_long(6)));
}

TEST_CASE("everything holds over a prime field as well") {
    PField f(1009);
    TriasAlgebra<PField> A(f, 1);
    for (int op = 0; op < 3; ++op) A.set(Op(op), 0, 0, 0, f.one());
    CHECK(check_axioms(A).empty());
    auto M = adjoint_representation(A);
    CHECK(check_representation(A, M).empty());
    CHECK(check_corepresentation(A, opposite_corepresentation(M)).empty());
    A.set(Op::Right, 0, 0, 0, f.zero());
    A.set(Op::Middle, 0, 0, 0, f.zero());
    auto v = check_axioms(A);
    REQUIRE(v.size() == 2);
    CHECK(v[0].axiom == 2);
    CHECK(v[1].axiom == 6);
}

}  // TEST_SUITE
