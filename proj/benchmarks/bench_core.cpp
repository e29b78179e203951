#include <benchmark/benchmark.h>

#include <random>

#include "confspace/tower.hpp"
#include "confspace/whitehead.hpp"

using namespace confspace;

namespace {

QMatrix random_sparse(std::mt19937& rng, int rows, int cols) {
    QMatrix m{fresh_space_id(), fresh_space_id(), {}};
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    for (int j = 0; j < cols; ++j) {
        QVector col{m.codomain, {}};
        for (int i = 0; i < rows; ++i)
            if (keep(rng) < 0.2) col.set(i, Rat(val(rng)));
        if (!col.is_zero()) m.set_column(j, std::move(col));
    }
    return m;
}

ManifoldSpec r1_spec(int L) {
    ManifoldSpec m;
    m.group.hat_rank = 1;
    m.window = L;
    m.p3.push_back(Primitive3{"x1", false});
    return m;
}

} // namespace

static void BM_row_reduce_sparse50(benchmark::State& state) {
    std::mt19937 rng(3);
    const QMatrix m = random_sparse(rng, 50, 50);
    for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m).rank);
}
BENCHMARK(BM_row_reduce_sparse50);

static void BM_word_multiply(benchmark::State& state) {
    const GroupSpec g{2};
    const Word a = word_parse(g, "s h1 s^-1 h2 s s");
    const Word b = word_parse(g, "s^-1 s^-1 h2^-1 s h1");
    for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b).length());
}
BENCHMARK(BM_word_multiply);

static void BM_whitehead_expansion(benchmark::State& state) {
    const ManifoldSpec m = r1_spec(2);
    const auto words = enumerate_words(m.group, 2);
    for (auto _ : state) {
        SymVec acc;
        for (std::size_t i = 0; i < 8; ++i)
            acc = sym_sum(acc, whitehead(sym_single(sym_w(1, 3, words[i])),
                                         sym_single(sym_w(2, 3, words[i + 1])), 3, WhMode::exact, m));
        benchmark::DoNotOptimize(acc.size());
    }
}
BENCHMARK(BM_whitehead_expansion);

static void BM_build_N(benchmark::State& state) {
    const ManifoldSpec m = ManifoldSpec::s1xd3(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_N(m).chart.size());
}
BENCHMARK(BM_build_N)->Arg(1)->Arg(2)->Arg(3);

static void BM_reduce_mod_N(benchmark::State& state) {
    const ManifoldSpec m = ManifoldSpec::s1xd3(2);
    const NSpan n = build_N(m);
    const SymVec v = sym_single(sym_sq(1, 3, word_identity(), word_s_power(1)));
    for (auto _ : state) benchmark::DoNotOptimize(reduce_mod_N(v, n).entries.size());
}
BENCHMARK(BM_reduce_mod_N);

static void BM_e2_kernel(benchmark::State& state) {
    ManifoldSpec m;
    m.group.hat_rank = 1;
    m.window = 1;
    m.p4.push_back("y1");
    for (auto _ : state) {
        Tower tower(m);
        benchmark::DoNotOptimize(tower.e2_31_kernel().basis.size());
    }
}
BENCHMARK(BM_e2_kernel);

BENCHMARK_MAIN();
