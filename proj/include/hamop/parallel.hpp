#ifndef HAMOP_PARALLEL_HPP
#define HAMOP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace hamop {

/// Worker count used by parallel_for; at least 1.
int jobs();
/// Sets the worker count; n <= 0 restores the hardware default.
void set_jobs(int n);

namespace detail {
void run_parallel(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);
}

/// Index-parallel loop over [0, n). Iterations must be independent;
/// callers write results into per-index slots so the outcome does not
/// depend on scheduling. The first exception thrown by an iteration is
/// rethrown after the loop finishes.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
  if (jobs() <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  detail::run_parallel(n, jobs(), f);
}

}  // namespace hamop

#endif  // HAMOP_PARALLEL_HPP
