#include <benchmark/benchmark.h>

#include "cmweil/jacobian.hpp"
#include "cmweil/weilgen.hpp"

using namespace cmweil;

namespace {

FieldElement sample(Rng& rng, const FieldPtr& field, unsigned bits) {
  std::vector<Integer> c;
  for (int i = 0; i < field->degree(); ++i) c.push_back(rng.below(Integer(1) << bits) - (Integer(1) << (bits - 1)));
  return FieldElement(field, std::move(c));
}

void BM_NormResultant(benchmark::State& state) {
  const SpecPtr k = make_cyclotomic_cm(static_cast<std::uint64_t>(state.range(0)));
  Rng rng(1);
  const FieldElement x = sample(rng, k->field, 160);
  for (auto _ : state) benchmark::DoNotOptimize(norm(x));
}
BENCHMARK(BM_NormResultant)->Arg(5)->Arg(7)->Arg(17);

void BM_NormDeterminant(benchmark::State& state) {
  const SpecPtr k = make_cyclotomic_cm(static_cast<std::uint64_t>(state.range(0)));
  Rng rng(1);
  const FieldElement x = sample(rng, k->field, 160);
  for (auto _ : state) benchmark::DoNotOptimize(norm_by_determinant(x));
}
BENCHMARK(BM_NormDeterminant)->Arg(5)->Arg(7)->Arg(17);

void BM_IsPrime(benchmark::State& state) {
  Rng rng(2);
  const Integer n = rng.below(Integer(1) << static_cast<unsigned>(state.range(0))) | 1;
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(n));
}
BENCHMARK(BM_IsPrime)->Arg(160)->Arg(640)->Arg(1080);

void BM_LiftCrt(benchmark::State& state) {
  const CMType t = cm_type_from_exponents(make_cyclotomic_cm(5), {1, 2});
  const ReflexData rx = reflex(t);
  const Integer r = (Integer(1) << 160) + 685;
  const SplitData split = split_completely(rx, r);
  Rng rng(3);
  const ResidueAssignment a = sample_residues(rng, r, rx.ghat, primitive_kth_root(r, 10, rng));
  for (auto _ : state) benchmark::DoNotOptimize(lift_crt(rx, split, a));
}
BENCHMARK(BM_LiftCrt);

void BM_TypeNorm(benchmark::State& state) {
  const SpecPtr k = state.range(0) ? make_quartic_cm(30, 2, 5) : make_cyclotomic_cm(5);
  const ReflexData rx = reflex(auto_cm_type(k));
  Rng rng(4);
  const FieldElement xi = sample(rng, rx.reflex_spec->field, 160);
  for (auto _ : state) benchmark::DoNotOptimize(type_norm(rx, xi));
}
BENCHMARK(BM_TypeNorm)->Arg(0)->Arg(1);

void BM_ConstructPi(benchmark::State& state) {
  const CMType t = cm_type_from_exponents(make_cyclotomic_cm(5), {1, 2});
  const Integer r = (Integer(1) << 160) + 685;
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(construct_pi(t, 10, r, rng));
}
BENCHMARK(BM_ConstructPi)->Unit(benchmark::kMillisecond);

void BM_CantorScalarMul(benchmark::State& state) {
  std::vector<Integer> c(8, Integer(0));
  c[0] = 34;
  c[7] = 1;
  const HyperellipticCurve genus3(Integer(911), c);
  std::vector<Integer> c5(6, Integer(0));
  c5[0] = 18;
  c5[5] = 1;
  const HyperellipticCurve genus2(Integer(2023621), c5);
  const HyperellipticCurve& curve = state.range(0) == 2 ? genus2 : genus3;
  Rng rng(6);
  const MumfordDivisor d = random_divisor(curve, rng);
  const Integer n = state.range(0) == 2 ? Integer("4092747290896") : Integer(778417333);
  for (auto _ : state) benchmark::DoNotOptimize(scalar_mul(n, d, curve));
}
BENCHMARK(BM_CantorScalarMul)->Arg(2)->Arg(3);

}  // namespace

// The distro benchmark_main archive is LTO bytecode from another GCC release.
BENCHMARK_MAIN();
