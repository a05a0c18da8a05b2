// Timing comparison between the serial reference counter and the
// first-vector-parallel counter. Build and run:
//   cmake --build build --target icube4_bench && ./build/bench/icube4_bench

#include <chrono>
#include <cstdio>

#include "icube4/enumeration.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace icube4;

namespace {

template <typename F>
double seconds(F&& f, i64& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run serially\n");
#endif
  std::printf("%4s %4s %12s %12s %10s %8s\n", "m", "N", "count", "serial[s]", "omp[s]",
              "speedup");
  const EnumBudget budget{60, std::nullopt};
  struct Case {
    int m;
    i64 n;
  };
  for (const Case& c : {Case{3, 30}, Case{4, 30}, Case{4, 45}, Case{4, 48}}) {
    i64 serial_count = 0, parallel_count = 0;
    double ts = seconds([&] { return count_icubes_serial(c.m, c.n, budget); }, serial_count);
    double tp = seconds([&] { return count_icubes_brute(c.m, c.n, budget); }, parallel_count);
    if (serial_count != parallel_count) {
      std::printf("MISMATCH at m=%d N=%lld: serial %lld vs parallel %lld\n", c.m,
                  static_cast<long long>(c.n), static_cast<long long>(serial_count),
                  static_cast<long long>(parallel_count));
      return 1;
    }
    std::printf("%4d %4lld %12lld %12.3f %10.3f %7.2fx\n", c.m, static_cast<long long>(c.n),
                static_cast<long long>(serial_count), ts, tp, ts / tp);
  }
  return 0;
}
