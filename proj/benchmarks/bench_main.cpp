#include "ktoric/abelian.hpp"
#include "ktoric/grobner.hpp"
#include "ktoric/ktheory.hpp"
#include "ktoric/stacks.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ktoric;

namespace {

IntMatrix random_matrix(std::size_t n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> entry(-9, 9);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = entry(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state)
{
    IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(3)->Arg(5)->Arg(8)->Arg(12);

void BM_StrongGroebnerRugby(benchmark::State& state)
{
    const Integer p = state.range(0), q = state.range(0) + 1;
    StackData d = builtin_example("rugby", {p, q});
    PolyPresentation pres(d.grading_group);
    std::vector<IntPolynomial> gens{present(q_element(d, 1), pres).poly};
    for (auto _ : state)
        benchmark::DoNotOptimize(strong_groebner(gens, pres));
}
BENCHMARK(BM_StrongGroebnerRugby)->Arg(2)->Arg(4)->Arg(8);

void BM_StrongGroebnerTorsion(benchmark::State& state)
{
    auto g = make_group(FgAbelianGroup::from_invariants(1, IntVector{Integer(state.range(0))}));
    PolyPresentation pres(g);
    auto one = GroupRingElement::one(g);
    auto t = GroupRingElement::monomial(GroupElement::from_user(g, IntVector{Integer(1), Integer(0)}));
    auto s = GroupRingElement::monomial(GroupElement::from_user(g, IntVector{Integer(0), Integer(1)}));
    std::vector<IntPolynomial> gens{present((one - t) * (one - s), pres).poly,
                                    present(Integer(state.range(0)) * (one - t), pres).poly};
    for (auto _ : state)
        benchmark::DoNotOptimize(strong_groebner(gens, pres));
}
BENCHMARK(BM_StrongGroebnerTorsion)->Arg(2)->Arg(3)->Arg(6);

void BM_K0Pipeline(benchmark::State& state)
{
    std::vector<Integer> weights;
    for (long i = 1; i <= state.range(0); ++i)
        weights.emplace_back(i);
    StackData d = builtin_example("wps", weights);
    for (auto _ : state) {
        K0Handle k = k0_presentation(d);
        benchmark::DoNotOptimize(invariants(*k));
    }
}
BENCHMARK(BM_K0Pipeline)->Arg(2)->Arg(3)->Arg(4);

void BM_CheckConnected(benchmark::State& state)
{
    StackData d = builtin_example("blowup-a2-cox");
    for (auto _ : state)
        benchmark::DoNotOptimize(check_connected(d));
}
BENCHMARK(BM_CheckConnected);

} // namespace
BENCHMARK_MAIN();
