#pragma once

#include <cstddef>
#include <exception>

#ifdef LCSLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace lcs {

/// Selects the loop driver for component kernels. `serial` is the reference
/// path; `parallel` distributes independent components over OpenMP threads
/// and must produce bit-identical results.
enum class Exec { serial, parallel };

inline constexpr Exec kDefaultExec = Exec::parallel;

/// Calls fn(i) for every i in [0, count). Exceptions thrown by fn are
/// rethrown on the calling thread after the loop.
template <class Fn>
void for_each_index(std::size_t count, [[maybe_unused]] Exec exec, Fn&& fn) {
#ifdef LCSLAB_HAVE_OPENMP
  if (exec == Exec::parallel && count > 1) {
    std::exception_ptr failure;
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(lcslab_for_each_index)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace lcs
