#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef LOCALMDS_HAS_OPENMP
#include <omp.h>
#endif

namespace localmds {

/// Execution policy for the data-parallel kernels. Every parallel kernel
/// has a serial path driven by the same loop body; tests assert that both
/// produce identical results and tools/bench.cpp compares their speed.
enum class Exec { Serial, Parallel };

/// Runs fn(0..n-1) under the given policy. Exceptions thrown by iterations
/// are captured and rethrown after the loop joins (first one wins).
template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef LOCALMDS_HAS_OPENMP
  if (exec == Exec::Parallel && n > 1) {
    std::exception_ptr err;
    std::mutex err_mu;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace localmds
