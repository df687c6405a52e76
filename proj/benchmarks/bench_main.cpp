#include <benchmark/benchmark.h>

#include "trias/complexes.hpp"
#include "trias/fields.hpp"
#include "trias/format.hpp"
#include "trias/matrix.hpp"
#include "trias/trees.hpp"
#include "trias/uea.hpp"

namespace {

using namespace trias;

Document fixture_doc(const char* name) {
    return load_document(std::string(TRIAS_FIXTURE_DIR) + "/" + name + ".trias");
}

void BM_FaceSweep(benchmark::State& state) {
    const int degree = int(state.range(0));
    const auto& trees = enumerate_trees(degree);
    for (auto _ : state)
        for (const auto& t : trees)
            for (int i = 0; i <= degree; ++i) {
                benchmark::DoNotOptimize(face(t, i));
                benchmark::DoNotOptimize(degeneracy(t, i));
            }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(trees.size()) *
                            (degree + 1) * 2);
}
BENCHMARK(BM_FaceSweep)->Arg(3)->Arg(4)->Arg(5);

void BM_CoboundaryAssembly(benchmark::State& state) {
    QField f;
    auto doc = fixture_doc("dual");
    auto A = realize_algebra(f, doc);
    auto M = realize_actions(f, A.dim, *doc.find_rep("adjoint"));
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(coboundary_matrix(A, M, n));
}
BENCHMARK(BM_CoboundaryAssembly)->Arg(2)->Arg(3);

void BM_RankRational(benchmark::State& state) {
    QField f;
    auto doc = fixture_doc("dual");
    auto A = realize_algebra(f, doc);
    auto M = realize_actions(f, A.dim, *doc.find_rep("adjoint"));
    auto m = coboundary_matrix(A, M, int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank(f, m));
}
BENCHMARK(BM_RankRational)->Arg(2)->Arg(3);

void BM_RankModular(benchmark::State& state) {
    PField f(1009);
    auto doc = fixture_doc("dual");
    auto A = realize_algebra(f, doc);
    auto M = realize_actions(f, A.dim, *doc.find_rep("adjoint"));
    auto m = coboundary_matrix(A, M, int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank(f, m));
}
BENCHMARK(BM_RankModular)->Arg(2)->Arg(3);

void BM_EnvelopingProducts(benchmark::State& state) {
    QField f;
    auto A = realize_algebra(f, fixture_doc("dual"));
    EnvelopingAlgebra<QField> ua(A);
    const std::size_t n = ua.dim();
    for (auto _ : state)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                benchmark::DoNotOptimize(ua.multiply(ua.basis_vec(u), ua.basis_vec(v)));
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(n) * int64_t(n));
}
BENCHMARK(BM_EnvelopingProducts);

}  // namespace

BENCHMARK_MAIN();
