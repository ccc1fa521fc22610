#include "arith/beurling.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <string>

#include "arith/asymptotics.hpp"
#include "arith/errors.hpp"
#include "arith/parallel.hpp"

namespace arith {

GammaRatios spectral_beurling_primes(const GlobalContext& ctx) {
  const SpectralParams& params = ctx.params();
  if (!params.is_indefinite())
    throw parameter_error(
        "spectral_beurling_primes: requires the indefinite mode");
  double d = params.rho - params.t;
  GammaRatios out;
  out.primes = ctx.primes();
  out.r.resize(out.primes.size());
  out.deviation.resize(out.primes.size());
  for (std::size_t i = 0; i < out.primes.size(); ++i)
    if (!ctx.local(i).is_resolved(1))
      throw accuracy_error(
          "spectral_beurling_primes: lambda_1 unresolved at p = " +
              std::to_string(out.primes[i]),
          ctx.local(i).trunc_bound);
  parallel_for(out.primes.size(), [&](std::size_t i) {
    const LocalSpectrum& ls = ctx.local(i);
    out.r[i] = std::pow(std::fabs(ls.enumeration[1]), -1.0 / d);
    out.deviation[i] = out.r[i] / ls.p - 1.0;
  });
  return out;
}

namespace {

struct HeapNode {
  double value;
  std::uint32_t last;  // index of the largest generator used
  std::uint16_t exp;   // exponent of that generator
  std::int8_t mu;
};

struct NodeGreater {
  bool operator()(const HeapNode& a, const HeapNode& b) const {
    if (a.value != b.value) return a.value > b.value;
    if (a.last != b.last) return a.last > b.last;
    return a.exp > b.exp;
  }
};

}  // namespace

BeurlingSystem generate_integers(const std::vector<double>& primes, double X,
                                 std::size_t k_cap) {
  if (!(X >= 1.0)) throw parameter_error("generate_integers: X must be >= 1");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!(primes[i] > 1.0))
      throw parameter_error("generate_integers: generators must exceed 1");
    if (i > 0 && !(primes[i] > primes[i - 1]))
      throw parameter_error("generate_integers: generators must increase");
  }
  constexpr std::uint64_t kOutputCap = 100000000;

  BeurlingSystem sys;
  sys.primes = primes;
  std::priority_queue<HeapNode, std::vector<HeapNode>, NodeGreater> heap;
  heap.push({1.0, 0, 0, 1});  // exp == 0 marks the unit
  while (!heap.empty()) {
    HeapNode node = heap.top();
    heap.pop();
    sys.integers.push_back(node.value);
    sys.mobius.push_back(node.mu);
    if (sys.integers.size() > kOutputCap)
      throw capacity_error("generate_integers: more than 1e8 integers");
    std::size_t start = node.exp == 0 ? 0 : node.last;
    for (std::size_t j = start; j < primes.size(); ++j) {
      double v = node.value * primes[j];
      if (v > X) break;
      bool same = node.exp != 0 && j == node.last;
      std::uint16_t e = same ? static_cast<std::uint16_t>(node.exp + 1) : 1;
      if (k_cap != 0 && e > k_cap) continue;
      std::int8_t mu = same ? std::int8_t{0}
                            : static_cast<std::int8_t>(-node.mu);
      heap.push({v, static_cast<std::uint32_t>(j), e, mu});
    }
  }
  for (std::size_t i = 1; i < sys.integers.size(); ++i)
    if (sys.integers[i] - sys.integers[i - 1] <= 1e-12 * sys.integers[i])
      ++sys.collision_warnings;
  return sys;
}

BeurlingCounts beurling_counting(const BeurlingSystem& system,
                                 const std::vector<double>& x_grid) {
  if (x_grid.empty()) throw parameter_error("beurling_counting: empty grid");
  std::vector<double> mertens(system.integers.size() + 1, 0.0);
  for (std::size_t i = 0; i < system.integers.size(); ++i)
    mertens[i + 1] = mertens[i] + system.mobius[i];
  BeurlingCounts out;
  out.x = x_grid;
  for (double x : x_grid) {
    if (!(x >= 1.0))
      throw range_error("beurling_counting: grid values must be >= 1");
    std::size_t n = static_cast<std::size_t>(
        std::upper_bound(system.integers.begin(), system.integers.end(), x) -
        system.integers.begin());
    out.N.push_back(n);
    out.M.push_back(mertens[n]);
  }
  return out;
}

double beurling_zeta(const GammaRatios& ratios, double s) {
  if (!(s > 1.0 + 0.02))
    throw range_error(
        "beurling_zeta: requires s > 1.02 (abscissa of convergence plus "
        "margin)");
  double log_z = 0.0;
  for (double r : ratios.r) {
    double x = std::pow(r, -s);
    if (!(x < 1.0))
      throw numeric_error("beurling_zeta: generator factor diverges", x);
    log_z -= std::log1p(-x);
  }
  // generators beyond the stored range track the rational primes
  for (int m = 1; m <= 64; ++m) {
    double partial = 0.0;
    for (std::uint64_t p : ratios.primes)
      partial += std::pow(static_cast<double>(p), -static_cast<double>(m) * s);
    double tail = prime_zeta(m * s) - partial;
    log_z += tail / m;
    if (tail < 1e-17) break;
  }
  return std::exp(log_z);
}

}  // namespace arith
