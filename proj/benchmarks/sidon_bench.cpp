#include <benchmark/benchmark.h>

#include "sidonlab/criteria.hpp"
#include "sidonlab/invariants.hpp"
#include "sidonlab/sidon.hpp"

using namespace sidonlab;

namespace {

void BM_SidonVerdict(benchmark::State& state) {
    const FieldPtr f = make_prime_field(static_cast<std::uint32_t>(state.range(0)));
    const PointSet set = pair_point_set(parse_poly("x", f), parse_poly("x^2", f));
    for (auto _ : state) benchmark::DoNotOptimize(is_sidon_set(set).is_sidon);
}
BENCHMARK(BM_SidonVerdict)->Arg(5)->Arg(13)->Arg(31)->Arg(97);

void BM_ValueProfile(benchmark::State& state) {
    const FieldPtr f = make_prime_field(static_cast<std::uint32_t>(state.range(0)));
    const Poly p = make_poly(f, {0, f->neg(2), 0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(value_profile(p).d[0]);
}
BENCHMARK(BM_ValueProfile)->Arg(13)->Arg(97)->Arg(199);

void BM_CompanionSearchFound(benchmark::State& state) {
    const FieldPtr f = make_prime_field(5);
    const Poly p = parse_poly("x^3", f);
    for (auto _ : state)
        benchmark::DoNotOptimize(companion_search(p, 1'000'000, 1).status);
}
BENCHMARK(BM_CompanionSearchFound);

void BM_CompanionSearchExhaust(benchmark::State& state) {
    const FieldPtr f = make_prime_field(7);
    const Poly p = parse_poly("x^3", f);
    for (auto _ : state)
        benchmark::DoNotOptimize(companion_search(p, 1'000'000, 1).status);
}
BENCHMARK(BM_CompanionSearchExhaust);

void BM_EnumerateMaximumSets(benchmark::State& state) {
    const FieldPtr f = make_prime_field(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_maximum_sidon_sets(f).size());
}
BENCHMARK(BM_EnumerateMaximumSets)->Arg(3)->Arg(5);

void BM_NormalizeCubic(benchmark::State& state) {
    const FieldPtr f = make_prime_field(13);
    const Poly p = parse_poly("2x^3+7x^2+x+5", f);
    for (auto _ : state) benchmark::DoNotOptimize(normalize_cubic(p).cls);
}
BENCHMARK(BM_NormalizeCubic);

void BM_CountQuadraticForm(benchmark::State& state) {
    const FieldPtr f = make_prime_field(97);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_quadratic_form(f, 1, 1).brute_force);
}
BENCHMARK(BM_CountQuadraticForm);

void BM_CertifyEquivalence(benchmark::State& state) {
    const FieldPtr f = make_prime_field(5);
    const Poly a = parse_poly("x^2", f);
    const Poly b = parse_poly("x^3-2x", f);
    for (auto _ : state)
        benchmark::DoNotOptimize(are_equivalent(a, b, EquivMode::Certify, 1).status);
}
BENCHMARK(BM_CertifyEquivalence);

}  // namespace

BENCHMARK_MAIN();
