#include "hamop/parallel.hpp"

#include <atomic>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hamop {

namespace {

int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
#endif
}

std::atomic<int> g_jobs{0};  // 0 = use default

}  // namespace

int jobs() {
  int j = g_jobs.load(std::memory_order_relaxed);
  return j > 0 ? j : default_jobs();
}

void set_jobs(int n) { g_jobs.store(n, std::memory_order_relaxed); }

namespace detail {

void run_parallel(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
  std::exception_ptr err;
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hamop_parallel_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
#else
  (void)threads;
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace detail

}  // namespace hamop
