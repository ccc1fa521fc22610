#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "arith/local.hpp"
#include "arith/numtheory.hpp"
#include "arith/parallel.hpp"
#include "arith/params.hpp"

namespace {

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t limit = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
  arith::SpectralParams params = arith::SpectralParams::indefinite(1.0, 3.0);
  arith::Sieve sieve(limit);
  const auto& primes = sieve.primes();
  std::vector<std::size_t> depth(primes.size(), 3);

  std::printf("local spectra sweep: %zu primes up to %llu, %d threads\n",
              primes.size(), static_cast<unsigned long long>(limit),
              arith::effective_threads());

  std::vector<arith::LocalSpectrum> serial, parallel;
  double ts = time_best_of(3, [&] {
    serial = arith::local_spectra_sweep_serial(primes, params, 1e-10, depth);
  });
  double tp = time_best_of(3, [&] {
    parallel = arith::local_spectra_sweep(primes, params, 1e-10, depth);
  });

  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i)
    identical = serial[i].enumeration == parallel[i].enumeration &&
                serial[i].trunc_bound == parallel[i].trunc_bound;

  std::printf("serial   %.3f s\n", ts);
  std::printf("parallel %.3f s  (speedup %.2fx)\n", tp, ts / tp);
  std::printf("results %s\n", identical ? "identical" : "DIFFER");
  return identical ? 0 : 1;
}
