#include <benchmark/benchmark.h>

#include "sympair/cohomology.hpp"
#include "sympair/oracle.hpp"
#include "sympair/stability.hpp"

using namespace sympair;

namespace {

void BM_hilbert_all_pairs_q7(benchmark::State& state) {
    LocalField f = LocalField::padic(7);
    std::vector<SquareClass> cls = enumerate_classes(f);
    for (auto _ : state) {
        int minus = 0;
        for (const SquareClass& a : cls)
            for (const SquareClass& b : cls)
                if (!hilbert(a, b).is_plus()) ++minus;
        benchmark::DoNotOptimize(minus);
    }
}
BENCHMARK(BM_hilbert_all_pairs_q7);

void BM_hilbert_oracle_q11(benchmark::State& state) {
    LocalField f = LocalField::padic(11);
    for (auto _ : state) {
        Sign s = hilbert_oracle(f, 22, 11);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_hilbert_oracle_q11);

void BM_isotropy_oracle_rank4_q5(benchmark::State& state) {
    QuadForm b = quad_form(LocalField::padic(5), {1, 2, 5, 10});
    for (auto _ : state) {
        bool iso = isotropy_oracle(b);
        benchmark::DoNotOptimize(iso);
    }
}
BENCHMARK(BM_isotropy_oracle_rank4_q5);

void BM_h1_s4_all_involutions(benchmark::State& state) {
    InvolutiveGroup s4 = symmetric_group(4);
    std::vector<std::vector<int>> thetas = all_involutive_automorphisms(s4);
    for (auto _ : state) {
        size_t classes = 0;
        for (const std::vector<int>& t : thetas) classes += h1(s4.with_theta(t)).classes.size();
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(BM_h1_s4_all_involutions);

void BM_classify_o_pair_q3(benchmark::State& state) {
    LocalField q3 = LocalField::padic(3);
    OPair spec{quad_form(q3, {1, 1}), quad_form(q3, {3, 2})};
    for (auto _ : state) {
        Verdict v = classify(spec);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_classify_o_pair_q3);

void BM_sweep_all_q3(benchmark::State& state) {
    GroundField f = GroundField::padic(3);
    SweepBounds bounds{5, 2, 5};
    for (auto _ : state) {
        std::vector<SweepRow> rows = sweep_all(f, bounds);
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_sweep_all_q3);

void BM_dimension_formula_dim8(benchmark::State& state) {
    std::vector<std::pair<RatMat, RatMat>> suite = dimension_formula_suite(8);
    const auto& [r, h] = suite.back();
    for (auto _ : state) {
        bool ok = dimension_formula_check(r, h);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_dimension_formula_dim8);

}  // namespace

BENCHMARK_MAIN();
