#include <benchmark/benchmark.h>

#include <numeric>

#include "rudraksh/bytes.hpp"
#include "rudraksh/kem.hpp"
#include "rudraksh/params.hpp"

namespace {

using namespace rudraksh;

Bytes fixed_coins() {
  Bytes coins(48);
  std::iota(coins.begin(), coins.end(), static_cast<std::uint8_t>(0));
  return coins;
}

void BM_Keygen(benchmark::State& state, ParamName name) {
  const ParamSet& ps = paramset(name);
  const Bytes coins = fixed_coins();
  for (auto _ : state) {
    KemKeyPair kp = kem_keygen(coins, ps);
    benchmark::DoNotOptimize(kp);
  }
}

void BM_Encaps(benchmark::State& state, ParamName name) {
  const ParamSet& ps = paramset(name);
  const KemKeyPair kp = kem_keygen(fixed_coins(), ps);
  Seed16 msg{};
  msg.fill(0x42);
  for (auto _ : state) {
    EncapsResult res = kem_encaps(kp.pk, msg, ps);
    benchmark::DoNotOptimize(res);
  }
}

void BM_Decaps(benchmark::State& state, ParamName name) {
  const ParamSet& ps = paramset(name);
  const KemKeyPair kp = kem_keygen(fixed_coins(), ps);
  Seed16 msg{};
  msg.fill(0x42);
  const EncapsResult enc = kem_encaps(kp.pk, msg, ps);
  for (auto _ : state) {
    SharedSecret ss = kem_decaps(kp.sk, enc.ct, ps);
    benchmark::DoNotOptimize(ss);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Keygen, poly32, ParamName::poly32);
BENCHMARK_CAPTURE(BM_Keygen, poly64, ParamName::poly64);
BENCHMARK_CAPTURE(BM_Keygen, poly128, ParamName::poly128);
BENCHMARK_CAPTURE(BM_Encaps, poly32, ParamName::poly32);
BENCHMARK_CAPTURE(BM_Encaps, poly64, ParamName::poly64);
BENCHMARK_CAPTURE(BM_Encaps, poly128, ParamName::poly128);
BENCHMARK_CAPTURE(BM_Decaps, poly32, ParamName::poly32);
BENCHMARK_CAPTURE(BM_Decaps, poly64, ParamName::poly64);
BENCHMARK_CAPTURE(BM_Decaps, poly128, ParamName::poly128);

BENCHMARK_MAIN();
