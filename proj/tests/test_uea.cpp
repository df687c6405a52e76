#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "trias/fields.hpp"
#include "trias/format.hpp"
#include "trias/free_algebra.hpp"
#include "trias/uea.hpp"

using namespace trias;

namespace {

Document fixture_doc(const std::string& name) {
    return load_document(std::string(TRIAS_FIXTURE_DIR) + "/" + name + ".trias");
}

template <class F>
bool vec_eq(const F& f, const Vec<F>& x, const Vec<F>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!f.eq(x[k], y[k])) return false;
    return true;
}

template <class F>
std::size_t support(const F& f, const Vec<F>& x) {
    std::size_t n = 0;
    for (const auto& c : x)
        if (!f.is_zero(c)) ++n;
    return n;
}

}  // namespace

TEST_CASE("generator embeddings and basis words") {
    QField f;
    auto A = realize_algebra(f, fixture_doc("abelian2"));
    EnvelopingAlgebra<QField> ua(A);

    CHECK(ua.dim() == 41);
    CHECK(support(f, ua.one()) == 1);

    auto al0 = ua.alpha(Op::Left, A.unit_vec(0));
    CHECK(support(f, al0) == 1);
    CHECK(f.eq(al0[ua.gen_index(GenAL, 0)], f.one()));

    CHECK(vec_eq(f, ua.beta(Op::Middle, Vec<QField>(2, f.zero())), ua.zero()));

    Vec<QField> sum = A.unit_vec(0);
    sum[1] = f.one();
    auto ar = ua.alpha(Op::Right, sum);
    CHECK(support(f, ar) == 2);
    CHECK(f.eq(ar[ua.gen_index(GenAR, 0)], f.one()));
    CHECK(f.eq(ar[ua.gen_index(GenAR, 1)], f.one()));

    CHECK(ua.basis_word(0).empty());
    auto w1 = ua.basis_word(ua.gen_index(GenBR, 1));
    REQUIRE(w1.size() == 1);
    CHECK(w1[0] == std::pair<int, int>(GenBR, 1));
    auto w2 = ua.basis_word(ua.quad_index(2, 1, 0));
    REQUIRE(w2.size() == 2);
    CHECK(w2[0] == std::pair<int, int>(GenAR, 1));
    CHECK(w2[1] == std::pair<int, int>(GenBL, 0));
    CHECK_THROWS_AS(ua.basis_word(ua.dim()), IndexOutOfRange);
}

TEST_CASE("products of generators follow the defining relations") {
    QField f;
    auto A = realize_algebra(f, fixture_doc("dual"));
    EnvelopingAlgebra<QField> ua(A);

    for (int ia = 0; ia < A.dim; ++ia)
        for (int ib = 0; ib < A.dim; ++ib) {
            auto a = A.unit_vec(ia), b = A.unit_vec(ib);
            // right multiplications compose through the left product, reversed
            auto lhs = ua.multiply(ua.beta(Op::Left, b), ua.beta(Op::Left, a));
            auto rhs = ua.beta(Op::Left, A.product(Op::Left, a, b));
            CHECK(vec_eq(f, lhs, rhs));

            // merging the two left letters first gives the same normal form
            auto c = A.unit_vec((ia + 1) % A.dim);
            auto two = ua.multiply(ua.alpha(Op::Left, b), ua.beta(Op::Left, c));
            auto three = ua.multiply(ua.alpha(Op::Left, a), two);
            auto merged = ua.multiply(ua.alpha(Op::Left, A.product(Op::Left, a, b)),
                                      ua.beta(Op::Left, c));
            CHECK(vec_eq(f, three, merged));
        }

    for (std::size_t u = 0; u < ua.dim(); ++u) {
        auto e = ua.basis_vec(u);
        CHECK(vec_eq(f, ua.multiply(ua.one(), e), e));
        CHECK(vec_eq(f, ua.multiply(e, ua.one()), e));
    }
}

TEST_CASE("length filtration is multiplicative and saturates at two") {
    QField f;
    auto A = realize_algebra(f, fixture_doc("dual"));
    EnvelopingAlgebra<QField> ua(A);

    CHECK(ua.length(ua.zero()) == 0);
    CHECK(ua.length(ua.one()) == 0);
    CHECK(ua.length(ua.alpha(Op::Middle, A.unit_vec(1))) == 1);
    CHECK(ua.length(ua.basis_vec(ua.quad_index(0, 0, 0))) == 2);

    for (std::size_t u = 0; u < ua.dim(); ++u)
        for (std::size_t v = 0; v < ua.dim(); ++v) {
            auto p = ua.multiply(ua.basis_vec(u), ua.basis_vec(v));
            int bound = ua.length(ua.basis_vec(u)) + ua.length(ua.basis_vec(v));
            CHECK(ua.length(p) <= (bound > 2 ? 2 : bound));
        }

    // products of three generators stay inside the quadratic filtration step
    for (int s = 0; s < 6; ++s)
        for (int t = 0; t < 6; ++t)
            for (int w = 0; w < 6; ++w) {
                auto p = ua.multiply(ua.basis_vec(ua.gen_index(s, 0)),
                                     ua.multiply(ua.basis_vec(ua.gen_index(t, 1)),
                                                 ua.basis_vec(ua.gen_index(w, 0))));
                CHECK(ua.length(p) <= 2);
            }
}

TEST_CASE("abelian enveloping algebras realize the full graded dimensions") {
    QField f;
    const std::pair<const char*, std::size_t> table[] = {
        {"abelian1", 1}, {"abelian2", 2}, {"abelian3", 3}};
    for (const auto& [name, d] : table) {
        CAPTURE(name);
        auto A = realize_algebra(f, fixture_doc(name));
        EnvelopingAlgebra<QField> ua(A);
        const std::vector<std::size_t> expect = {1, 6 * d, 7 * d * d};
        CHECK(ua.gr_dims() == expect);
        CHECK(ua.dim() == 1 + 6 * d + 7 * d * d);
        CHECK(ua.certified());
        CHECK(pbw_check(ua));
    }
}

TEST_CASE("fixture enveloping algebras are certified with full quadratic span") {
    QField f;
    for (const char* name : {"assoc1", "dual", "dsum1"}) {
        CAPTURE(name);
        auto A = realize_algebra(f, fixture_doc(name));
        EnvelopingAlgebra<QField> ua(A);
        const std::size_t d = std::size_t(A.dim);
        const std::vector<std::size_t> expect = {1, 6 * d, 7 * d * d};
        CHECK(ua.gr_dims() == expect);
        CHECK(ua.certified());
        CHECK(pbw_check(ua));
    }
}

TEST_CASE("multiplication is associative across the whole basis") {
    QField f;
    for (const char* name : {"assoc1", "dual"}) {
        CAPTURE(name);
        auto A = realize_algebra(f, fixture_doc(name));
        EnvelopingAlgebra<QField> ua(A);
        const std::size_t n = ua.dim();
        std::vector<std::vector<Vec<QField>>> prod(n);
        for (std::size_t u = 0; u < n; ++u) {
            prod[u].reserve(n);
            for (std::size_t v = 0; v < n; ++v)
                prod[u].push_back(ua.multiply(ua.basis_vec(u), ua.basis_vec(v)));
        }
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = 0; v < n && ok; ++v)
                for (std::size_t w = 0; w < n && ok; ++w)
                    ok = vec_eq(f, ua.multiply(prod[u][v], ua.basis_vec(w)),
                                ua.multiply(ua.basis_vec(u), prod[v][w]));
        CHECK(ok);
    }
}

TEST_CASE("corrupted rewrite tables fail certification or the graded comparison") {
    QField f;
    auto A = realize_algebra(f, fixture_doc("dual"));

    EnvelopingAlgebra<QField> flipped(A);
    flipped.tables.aa[1][1] = {0, Op::Left};  // right letters now merge as left
    CHECK_FALSE(flipped.certified());
    CHECK_FALSE(pbw_check(flipped));

    EnvelopingAlgebra<QField> swapped(A);
    swapped.tables.ba[0][0] = {1, 0};  // commuting past a left letter changes it
    CHECK_FALSE(swapped.certified());
    CHECK_FALSE(pbw_check(swapped));

    // merging two quadratic shapes re-routes a basis word away from its own
    // coordinate, so even the unit law catches it; the realized quadratic
    // span shrinks by one shape as well
    auto B = realize_algebra(f, fixture_doc("abelian2"));
    EnvelopingAlgebra<QField> collapsed(B);
    collapsed.tables.shape[1][1] = 0;
    CHECK_FALSE(collapsed.certified());
    auto gr = collapsed.gr_dims();
    CHECK(gr[2] == 24);
    CHECK_FALSE(pbw_check(collapsed));
}

TEST_CASE("truncated free algebras expose the linear collapse") {
    QField f;
    GradedFreeAlgebra<QField> free12(f, 1, 2);
    auto A = free12.as_algebra();
    REQUIRE(A.dim == 4);
    EnvelopingAlgebra<QField> ua(A);

    // the three degree-two products are distinct, so the right-multiplication
    // letters they feed can not stay independent; the cover reports it
    auto left = ua.beta(Op::Left, A.product(Op::Left, A.unit_vec(0), A.unit_vec(0)));
    auto mid = ua.beta(Op::Left, A.product(Op::Middle, A.unit_vec(0), A.unit_vec(0)));
    CHECK_FALSE(vec_eq(f, left, mid));
    CHECK_FALSE(ua.certified());
    CHECK_FALSE(pbw_check(ua));

    // the quadratic span itself is still full in the cover
    const std::vector<std::size_t> expect = {1, 24, 112};
    CHECK(ua.gr_dims() == expect);
}

TEST_CASE("the enveloping algebra is a corepresentation of its base") {
    QField f;
    for (const char* name : {"abelian2", "assoc1", "dual"}) {
        CAPTURE(name);
        auto A = realize_algebra(f, fixture_doc(name));
        EnvelopingAlgebra<QField> ua(A);
        auto N = ua_as_corepresentation(ua);
        CHECK(N.dim == int(ua.dim()));
        CHECK(check_corepresentation(A, N).empty());

        // the unit moves to the pure right-multiplication letter
        for (int i = 0; i < A.dim; ++i)
            CHECK(vec_eq(f, N.act_right(Op::Right, N.unit_vec(0), A.unit_vec(i)),
                         ua.beta(Op::Right, A.unit_vec(i))));
        // a left letter followed by a right letter stays in the first shape
        auto q = N.act_right(Op::Left, ua.alpha(Op::Left, A.unit_vec(0)), A.unit_vec(0));
        CHECK(vec_eq(f, q, ua.basis_vec(ua.quad_index(0, 0, 0))));
    }
}

TEST_CASE("representations are left modules through the operator dictionary") {
    QField f;
    for (const char* name : {"abelian1", "abelian2", "abelian3", "assoc1", "dsum1", "dual"}) {
        CAPTURE(name);
        auto doc = fixture_doc(name);
        auto A = realize_algebra(f, doc);
        for (const auto& blk : doc.reps) {
            CAPTURE(blk.name);
            auto M = realize_actions(f, A.dim, blk);
            CHECK(representation_to_left_module_check(A, M));
        }
        CHECK(representation_to_left_module_check(A, zero_actions(f, A.dim, 2)));
    }

    auto doc = fixture_doc("dual");
    auto A = realize_algebra(f, doc);
    auto M = realize_actions(f, A.dim, *doc.find_rep("adjoint"));
    M.set_left(Op::Left, 0, 0, 1, f.one());
    REQUIRE_FALSE(check_representation(A, M).empty());
    CHECK_FALSE(representation_to_left_module_check(A, M));
}

TEST_CASE("cotangent pairing couples cochain faces to enveloping chain faces") {
    QField f;
    {
        auto doc = fixture_doc("assoc1");
        auto A = realize_algebra(f, doc);
        for (const auto& blk : doc.reps) {
            CAPTURE(blk.name);
            auto M = realize_actions(f, A.dim, blk);
            for (int n = 0; n <= 2; ++n) CHECK(cotangent_pairing_check(A, M, n));
        }
        auto Z = zero_actions(f, A.dim, 2);
        CHECK(cotangent_pairing_check(A, Z, 1));
        CHECK_THROWS_AS(cotangent_pairing_check(A, Z, 3), ResourceLimit);
        CHECK_THROWS_AS(cotangent_pairing_check(A, Z, -1), IndexOutOfRange);
    }
    {
        auto doc = fixture_doc("dual");
        auto A = realize_algebra(f, doc);
        auto M = realize_actions(f, A.dim, *doc.find_rep("adjoint"));
        CHECK(cotangent_pairing_check(A, M, 0));
        CHECK(cotangent_pairing_check(A, M, 1));
    }
}

TEST_CASE("a perturbed chain face breaks the cotangent pairing") {
    QField f;
    auto doc = fixture_doc("assoc1");
    auto A = realize_algebra(f, doc);
    auto M = realize_actions(f, A.dim, *doc.find_rep("adjoint"));
    const int n = 1;

    EnvelopingAlgebra<QField> ua(A);
    auto U = ua_as_corepresentation(ua);
    auto act = detail::ua_action_columns(ua, M);
    std::vector<Matrix<QField>> chain_faces, cochain_faces;
    for (int i = 0; i <= n + 1; ++i) {
        chain_faces.push_back(chain_face_matrix(A, U, n + 1, i));
        cochain_faces.push_back(coboundary_face_matrix(A, M, n, i));
    }
    CHECK(detail::cotangent_faces_agree(f, n, A.dim, M.dim, ua.dim(), act, chain_faces,
                                        cochain_faces));
    chain_faces[1].at(0, 0) = f.add(chain_faces[1].at(0, 0), f.one());
    CHECK_FALSE(detail::cotangent_faces_agree(f, n, A.dim, M.dim, ua.dim(), act, chain_faces,
                                              cochain_faces));
}

TEST_CASE("enveloping algebra over a prime field matches the rational shape") {
    PField f(1009);
    auto A = realize_algebra(f, fixture_doc("dual"));
    EnvelopingAlgebra<PField> ua(A);
    const std::vector<std::size_t> expect = {1, 12, 28};
    CHECK(ua.gr_dims() == expect);
    CHECK(ua.certified());
    CHECK(pbw_check(ua));
}
