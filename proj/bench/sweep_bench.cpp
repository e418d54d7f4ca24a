// Serial reference sweep against the OpenMP kernel on the same ranges,
// plus the connected-graph enumeration at 1 and N workers.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "clumpdiam/search.hpp"
#include "clumpdiam/sweep.hpp"

using namespace clumpdiam;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void compare(int k, int d_max, int workers) {
  SweepOptions opt;
  opt.k = k;
  opt.d_max = d_max;
  opt.workers = workers;
  SweepResult ref, fast;
  const double t_ref = seconds([&] { ref = sweep_reference(opt); });
  const double t_fast = seconds([&] { fast = sweep_kernel(opt); });
  const bool same = ref.by_depth == fast.by_depth && ref.witnesses == fast.witnesses;
  std::printf("k=%d D<=%-2d graphs %10llu  reference %8.3fs  kernel %8.3fs  speedup %7.1fx  %s\n", k, d_max,
              static_cast<unsigned long long>(fast.totals().graphs), t_ref, t_fast, t_ref / t_fast,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int workers = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  std::printf("workers %d\n", workers);
  compare(3, 10, workers);
  compare(4, 7, workers);
  compare(5, 6, workers);

  SweepOptions big;
  big.k = 4;
  big.d_max = 10;
  big.workers = 1;
  const double one = seconds([&] { sweep_kernel(big); });
  big.workers = workers;
  const double many = seconds([&] { sweep_kernel(big); });
  std::printf("kernel k=4 D<=10: workers=1 %.3fs, workers=%d %.3fs\n", one, workers, many);

  const double e1 = seconds([] { enumerate_connected_graphs(8, 1); });
  const double en = seconds([&] { enumerate_connected_graphs(8, workers); });
  std::printf("connected graphs n=8: workers=1 %.3fs, workers=%d %.3fs\n", e1, workers, en);
  return 0;
}
