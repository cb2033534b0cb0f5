// Compares the serial reference against the OpenMP block loops on the
// heaviest kernels: ideal-image spans, harmonic kernels and the commutant
// solve. Run manually; not part of the test suite.
#include <chrono>
#include <cstdio>

#include "blab/experiments.hpp"

using namespace blab;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class Fn>
void bench(const char* name, Fn&& fn) {
  fn();  // warm lazy caches (diagram tables, weight blocks)
  par::enabled() = false;
  double serial = time_ms(fn);
  par::enabled() = true;
  double parallel = time_ms(fn);
  std::printf("%-40s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n", name, serial,
              parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", par::max_threads());
  Rationals fq;
  PrimeField f3(3);

  bench("ideal_image m=2 n=4 f=1 (Q)", [&] { ideal_image(fq, 2, 4, 1); });
  bench("ideal_image m=2 n=4 f=1 (F3)", [&] { ideal_image(f3, 2, 4, 1); });
  bench("ideal_image m=3 n=4 f=1 (F3)", [&] { ideal_image(f3, 3, 4, 1); });
  bench("harmonic_space m=2 n=4 f=1 (Q)", [&] { harmonic_space(fq, 2, 4, 1); });
  bench("contraction_kernel m=2 n=4 (Q)", [&] { contraction_kernel(fq, 2, 4); });
  bench("maximal+z sweep m=2 n=4 (Q)", [&] {
    for (int g = 0; 2 * g <= 4; ++g)
      for (const auto& lam : partitions_of(4 - 2 * g, 2)) {
        z_span(fq, 2, 4, g, lam);
        maximal_vectors(fq, 2, 4, lam);
      }
  });
  bench("commutant m=2 n=3 f=1 (Q)", [&] {
    auto W = ideal_image(fq, 2, 3, 1);
    auto A = full_space(fq, 2, 3);
    commutant_dimension(fq, A, &W);
  });
  bench("presentation sweep m=3 n=4 (F2)", [&] {
    ExperimentSpec spec;
    spec.suite = "presentation";
    spec.m = 3;
    spec.n = 4;
    spec.fields = {FieldSpec::prime(2)};
    run_suite(spec);
  });
  return 0;
}
