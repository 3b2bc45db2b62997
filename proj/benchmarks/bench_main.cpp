#include "heckemu/tables.hpp"
#include "heckemu/transfer.hpp"

#include <benchmark/benchmark.h>

using namespace heckemu;

namespace {

void BM_mu_assembly_f4(benchmark::State& state) {
    HeckeSpec spec = f4_spec();
    for (auto _ : state) benchmark::DoNotOptimize(mu(spec));
}
BENCHMARK(BM_mu_assembly_f4);

void BM_residue_g2_principal(benchmark::State& state) {
    HeckeSpec spec = g2_spec();
    TorusPoint p = point_from_paper(spec.roots, parse_point("(q^3,q)"));
    for (auto _ : state) benchmark::DoNotOptimize(residue_at(spec, p));
}
BENCHMARK(BM_residue_g2_principal);

void BM_residue_f4_principal(benchmark::State& state) {
    HeckeSpec spec = f4_spec();
    TorusPoint p = point_from_paper(spec.roots, parse_point("(q^2,q^2,q,q)"));
    for (auto _ : state) benchmark::DoNotOptimize(residue_at(spec, p));
}
BENCHMARK(BM_residue_f4_principal);

void BM_verify_phi(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_T3(phi_stm(int(state.range(0)), Rational(1, 2), Rational(5, 2))));
}
BENCHMARK(BM_verify_phi)->Arg(0)->Arg(2);

void BM_verify_xi(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_T3(xi_stm(1, Rational(3, 4), Rational(5, 4))));
}
BENCHMARK(BM_verify_xi);

void BM_enumerate_g2(benchmark::State& state) {
    HeckeSpec spec = g2_spec();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_residual_points(spec));
}
BENCHMARK(BM_enumerate_g2);

void BM_cyclo_present_table_row(benchmark::State& state) {
    HeckeSpec spec = f4_spec();
    TorusPoint p = point_from_paper(spec.roots, parse_point("(q^2,q^2,q,q)"));
    FactoredRatFn value = mu(spec).substituted(p.coords, 0).value;
    for (auto _ : state) benchmark::DoNotOptimize(cyclo_present(value));
}
BENCHMARK(BM_cyclo_present_table_row);

void BM_random_equal(benchmark::State& state) {
    FactoredRatFn m = mu_without_d(classical_spec(classify_params(Rational(1), Rational(2)), 3,
                                                  FactoredRatFn(3), ""));
    for (auto _ : state) benchmark::DoNotOptimize(random_equal(m, m, 4, 42));
}
BENCHMARK(BM_random_equal);

}  // namespace

BENCHMARK_MAIN();
