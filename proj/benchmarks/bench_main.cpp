#include "syncgame/gadget.hpp"
#include "syncgame/game.hpp"
#include "syncgame/game_graph.hpp"
#include "syncgame/graph.hpp"
#include "syncgame/operators.hpp"
#include "syncgame/solvers.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace syncgame;

void BM_GadgetMagicSquare(benchmark::State &state)
{
    const auto game = fixture_magic_square();
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce_to_coloring(game));
}
BENCHMARK(BM_GadgetMagicSquare)->Unit(benchmark::kMillisecond);

void BM_GadgetLovasz(benchmark::State &state)
{
    const auto game = hom_game(complete_graph(static_cast<int>(state.range(0))), complete_graph(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce_to_coloring(game));
}
BENCHMARK(BM_GadgetLovasz)->Arg(5)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TinyUnsatColoring(benchmark::State &state)
{
    const auto r = reduce_to_coloring(fixture_tiny_unsat());
    for (auto _ : state)
        benchmark::DoNotOptimize(find_gadget_coloring(r.gadget));
}
BENCHMARK(BM_TinyUnsatColoring)->Unit(benchmark::kMicrosecond);

void BM_HomK4K3Coloring(benchmark::State &state)
{
    const auto r = reduce_to_coloring(hom_game(complete_graph(4), complete_graph(3)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_gadget_coloring(r.gadget));
}
BENCHMARK(BM_HomK4K3Coloring)->Unit(benchmark::kMicrosecond);

void BM_IndependenceMagicSquare(benchmark::State &state)
{
    const auto X = build_x_graph(fixture_magic_square());
    for (auto _ : state)
        benchmark::DoNotOptimize(independence_number(X.graph));
}
BENCHMARK(BM_IndependenceMagicSquare)->Unit(benchmark::kMicrosecond);

void BM_OperatorPushforward(benchmark::State &state)
{
    const auto fam = mermin_peres_fixture();
    const auto r = reduce_to_coloring(fixture_magic_square());
    for (auto _ : state)
        benchmark::DoNotOptimize(operator_strategy_to_operator_coloring(r.gadget, fam));
}
BENCHMARK(BM_OperatorPushforward)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
