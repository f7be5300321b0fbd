// Compares the serial reference against the OpenMP degree-shell kernel on the
// exact subinvariance sum. Run manually; not part of the test suite.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tkms/builtins.hpp"
#include "tkms/kms.hpp"

using namespace tkms;

namespace {

template <class Fn>
double time_of(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  TwoGraphSkeleton g = *builtin_skeleton("paper-4vertex");
  WeightPoint<Rational> x{Rational(1, 16), Rational(1, 24)};

  std::printf("%8s %14s %14s %10s\n", "cap", "serial [s]", "parallel [s]", "speedup");
  for (std::uint32_t cap : {60u, 120u, 200u, 300u}) {
    Subinvariance<Rational> serial, parallel;
    double ts = time_of([&] { serial = subinvariance_bruteforce_serial(g, x, cap); });
    double tp = time_of([&] { parallel = subinvariance_bruteforce(g, x, cap); });
    if (serial.values != parallel.values) {
      std::printf("MISMATCH at cap %u\n", cap);
      return 1;
    }
    std::printf("%8u %14.4f %14.4f %9.2fx\n", cap, ts, tp, ts / tp);
  }
  return 0;
}
