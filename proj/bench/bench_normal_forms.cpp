// Serial reference vs OpenMP batch of normal forms: S-polynomials of a lex
// basis and t^b queries against a knapsack test set.
#include <benchmark/benchmark.h>

#include "gwalk/groebner.hpp"
#include "gwalk/kernels.hpp"
#include "gwalk/toric.hpp"

using namespace gwalk;

namespace {

struct SPairWorkload {
    MarkedBasis basis;
    std::vector<Polynomial> spolys;
    MatrixOrder order;

    SPairWorkload() : order(named_order(OrderKind::Lex, 3)) {
        Ring ring({"x", "y", "z"});
        std::vector<Polynomial> gens{ring.parse("x^2*y - z^3 + 2"), ring.parse("x*z^2 - 3*y^2 + x"),
                                     ring.parse("y^3 - x*z + z")};
        basis = buchberger(gens, order);
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) spolys.push_back(s_polynomial(basis[i], basis[j]));
    }
};

struct KnapsackWorkload {
    MarkedBasis test_set;
    std::vector<Polynomial> queries;
    MatrixOrder order;

    KnapsackWorkload() : order(sigma_tau_orders(4).second) {
        KnapsackInstance inst({12, 17, 23, 29});
        test_set = compute_test_set(inst).basis;
        for (std::int64_t b = 0; b <= 2000; ++b) {
            std::vector<std::int64_t> e(inst.size() + 1, 0);
            e[0] = b;
            queries.push_back(Polynomial::monomial(ExponentVector(e)));
        }
    }
};

const SPairWorkload& spairs() {
    static const SPairWorkload w;
    return w;
}

const KnapsackWorkload& knapsack() {
    static const KnapsackWorkload w;
    return w;
}

void BM_SPairs_Reference(benchmark::State& state) {
    const auto& w = spairs();
    const ReduceOptions opts{10'000'000, &w.order};
    for (auto _ : state) benchmark::DoNotOptimize(reference::normal_forms(w.spolys, w.basis.members, opts));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * w.spolys.size()));
}

void BM_SPairs_Parallel(benchmark::State& state) {
    const auto& w = spairs();
    const ReduceOptions opts{10'000'000, &w.order};
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_forms(w.spolys, w.basis.members, opts, Execution::Parallel));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * w.spolys.size()));
    state.counters["threads"] = max_threads();
}

void BM_Knapsack_Reference(benchmark::State& state) {
    const auto& w = knapsack();
    const ReduceOptions opts{10'000'000, &w.order};
    for (auto _ : state) benchmark::DoNotOptimize(reference::normal_forms(w.queries, w.test_set.members, opts));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * w.queries.size()));
}

void BM_Knapsack_Parallel(benchmark::State& state) {
    const auto& w = knapsack();
    const ReduceOptions opts{10'000'000, &w.order};
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_forms(w.queries, w.test_set.members, opts, Execution::Parallel));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * w.queries.size()));
    state.counters["threads"] = max_threads();
}

}  // namespace

BENCHMARK(BM_SPairs_Reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SPairs_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Knapsack_Reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Knapsack_Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
