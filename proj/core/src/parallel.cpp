#include "dpdp/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dpdp {

namespace {
std::atomic<int> g_workers{0};  // 0 = hardware default
}

int num_workers() {
  int w = g_workers.load(std::memory_order_relaxed);
#ifdef _OPENMP
  if (w <= 0) w = omp_get_max_threads();
#else
  if (w <= 0) w = 1;
#endif
  return w;
}

void set_num_workers(int n) {
  g_workers.store(n, std::memory_order_relaxed);
#ifdef _OPENMP
  omp_set_dynamic(0);
  if (n > 0) omp_set_num_threads(n);
#endif
}

}  // namespace dpdp
