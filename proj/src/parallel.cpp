#include "arith/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arith {

namespace {
std::atomic<int> g_cap{0};

int env_cap() {
  static int cached = [] {
    const char* s = std::getenv("ARITHSPEC_THREADS");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 0;
  }();
  return cached;
}
}  // namespace

int effective_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  int cap = g_cap.load();
  if (cap <= 0) cap = env_cap();
  if (cap > 0 && cap < n) n = cap;
  return n < 1 ? 1 : n;
}

void set_thread_cap(int cap) { g_cap.store(cap); }

namespace detail {

void parallel_for_impl(std::size_t n, void (*trampoline)(void*, std::size_t),
                       void* ctx) {
  const int threads = effective_threads();
#ifdef _OPENMP
  if (threads > 1 && n > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        trampoline(ctx, static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(arith_parallel_err)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) trampoline(ctx, i);
}

}  // namespace detail

}  // namespace arith
