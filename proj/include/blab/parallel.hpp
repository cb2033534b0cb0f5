// Tiny OpenMP wrapper: data-parallel loops over independent work items
// (typically weight blocks). A runtime switch selects the serial reference
// path; results must be bit-identical either way, which the tests check.
#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blab::par {

inline bool& enabled() {
  static bool on =
#ifdef _OPENMP
      true;
#else
      false;
#endif
  return on;
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// fn(i) for i in [0, count); each i writes only to its own output slot.
template <class Fn>
void for_each(std::size_t count, Fn&& fn) {
#ifdef _OPENMP
  if (enabled() && count > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace blab::par
