#pragma once

#include <cstddef>

namespace arith {

// Effective worker count: the smaller of the hardware/OpenMP default and the
// cap set via set_thread_cap() or the ARITHSPEC_THREADS environment variable.
int effective_threads();
void set_thread_cap(int cap);  // cap <= 0 resets to the default

// Runs f(i) for i in [0, n). Results must be written to disjoint slots so the
// outcome is independent of the schedule; reductions over the slots belong in
// the (serial) caller.
template <class F>
void parallel_for(std::size_t n, F&& f);

namespace detail {
void parallel_for_impl(std::size_t n, void (*trampoline)(void*, std::size_t),
                       void* ctx);
}

template <class F>
void parallel_for(std::size_t n, F&& f) {
  detail::parallel_for_impl(
      n,
      [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); },
      &f);
}

}  // namespace arith
