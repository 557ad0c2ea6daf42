#pragma once

#include <cstddef>
#include <exception>

namespace rootbounds {

enum class ExecPolicy { Serial, Parallel };

// Index-space map. Bodies must write only to slots keyed by their own index,
// so the result is identical for any schedule or thread count. The first
// exception thrown by a body is captured and rethrown on the calling thread.
template <typename Body>
void for_each_index(std::size_t count, ExecPolicy policy, Body&& body) {
  if (policy == ExecPolicy::Serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(rootbounds_for_each_index)
#endif
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace rootbounds
