#include <vector>

#include "doctest.h"
#include "trias/algebra.hpp"
#include "trias/fields.hpp"
#include "trias/free_algebra.hpp"

using namespace trias;

TEST_SUITE("free_algebra") {

TEST_CASE("monomial counts follow the decorated-parenthesization formula") {
    QField f;
    GradedFreeAlgebra<QField> A(f, 1, 4);
    CHECK(A.monomial_count(1) == 1);
    CHECK(A.monomial_count(2) == 3);
    CHECK(A.monomial_count(3) == 18);
    CHECK(A.monomial_count(4) == 135);
    GradedFreeAlgebra<QField> B(f, 2, 3);
    CHECK(B.monomial_count(1) == 2);
    CHECK(B.monomial_count(2) == 12);
    CHECK(B.monomial_count(3) == 144);
}

TEST_CASE("quotient slice dimensions on one generator are 1, 3, 7, 15") {
    QField f;
    GradedFreeAlgebra<QField> A(f, 1, 4);
    CHECK(A.slice_dim(1) == 1);
    CHECK(A.slice_dim(2) == 3);
    CHECK(A.slice_dim(3) == 7);
    CHECK(A.slice_dim(4) == 15);
    CHECK(A.total_dim() == 26);
}

TEST_CASE("slice dimensions scale as (2^n - 1) g^n") {
    QField f;
    GradedFreeAlgebra<QField> B(f, 2, 3);
    CHECK(B.slice_dim(1) == 2);
    CHECK(B.slice_dim(2) == 12);
    CHECK(B.slice_dim(3) == 56);
}

TEST_CASE("degree-2 products of the generator are the three free monomials") {
    QField f;
    GradedFreeAlgebra<QField> A(f, 1, 2);
    auto l = A.rep_product(Op::Left, 1, 0, 1, 0);
    auto r = A.rep_product(Op::Right, 1, 0, 1, 0);
    auto m = A.rep_product(Op::Middle, 1, 0, 1, 0);
    REQUIRE(l.size() == 3);
    CHECK(f.eq(l[0], f.one()));
    CHECK(f.is_zero(l[1]));
    CHECK(f.eq(r[1], f.one()));
    CHECK(f.eq(m[2], f.one()));
}

TEST_CASE("products beyond the truncation degree vanish") {
    QField f;
    GradedFreeAlgebra<QField> A(f, 1, 3);
    CHECK(A.rep_product(Op::Left, 2, 0, 2, 0).empty());
    CHECK(A.rep_product(Op::Middle, 1, 0, 3, 0).empty());
}

TEST_CASE("all eleven defining identities hold between quotient representatives") {
    QField f;
    GradedFreeAlgebra<QField> A(f, 1, 3);
    // arguments g, g, g: both sides land in the degree-3 slice
    for (const auto& s : axiom_shapes) {
        auto xy = A.rep_product(s.a, 1, 0, 1, 0);
        Vec<QField> lhs(A.slice_dim(3), f.zero());
        for (int t = 0; t < A.slice_dim(3); ++t)
            for (int u = 0; u < A.slice_dim(2); ++u)
                if (!f.is_zero(xy[u])) {
                    auto p = A.rep_product(s.b, 2, u, 1, 0);
                    lhs[t] = f.add(lhs[t], f.mul(xy[u], p[t]));
                }
        auto yz = A.rep_product(s.d, 1, 0, 1, 0);
        Vec<QField> rhs(A.slice_dim(3), f.zero());
        for (int t = 0; t < A.slice_dim(3); ++t)
            for (int u = 0; u < A.slice_dim(2); ++u)
                if (!f.is_zero(yz[u])) {
                    auto p = A.rep_product(s.c, 1, 0, 2, u);
                    rhs[t] = f.add(rhs[t], f.mul(yz[u], p[t]));
                }
        for (int t = 0; t < A.slice_dim(3); ++t) CHECK(f.eq(lhs[t], rhs[t]));
    }
}

TEST_CASE("the truncated quotient is a valid algebra of total dimension 11") {
    QField f;
    GradedFreeAlgebra<QField> A(f, 1, 3);
    auto T = A.as_algebra();
    CHECK(T.dim == 11);
    CHECK(check_axioms(T).empty());
}

TEST_CASE("the depth-4 quotient on one generator is valid over a prime field") {
    PField f(1009);
    GradedFreeAlgebra<PField> A(f, 1, 4);
    auto T = A.as_algebra();
    CHECK(T.dim == 26);
    CHECK(check_axioms(T).empty());
}

TEST_CASE("only the generator survives abelianization of the truncated quotient") {
    QField f;
    GradedFreeAlgebra<QField> A(f, 1, 4);
    CHECK(abelianization_dim(A.as_algebra()) == 1);
}

TEST_CASE("slice dimensions agree across fields") {
    QField q;
    PField p(1009);
    GradedFreeAlgebra<QField> A(q, 1, 4);
    GradedFreeAlgebra<PField> B(p, 1, 4);
    for (int n = 1; n <= 4; ++n) CHECK(A.slice_dim(n) == B.slice_dim(n));
}

TEST_CASE("monomial budgets are enforced") {
    QField f;
    CHECK_THROWS_AS(GradedFreeAlgebra<QField>(f, 2, 8, 1000), ResourceLimit);
    CHECK_THROWS_AS(GradedFreeAlgebra<QField>(f, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(GradedFreeAlgebra<QField>(f, 1, 0), std::invalid_argument);
}

}  // TEST_SUITE
