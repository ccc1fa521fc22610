#include "arith/numtheory.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "arith/errors.hpp"

namespace arith {

namespace {
constexpr std::uint64_t kSieveCap = 100'000'000;  // memory guard
}

std::uint64_t FactoredInteger::reconstruct() const {
  std::uint64_t v = 1;
  for (auto [p, k] : factors)
    for (int i = 0; i < k; ++i) v *= p;
  return v;
}

Sieve::Sieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2 || limit > kSieveCap)
    throw parameter_error("sieve limit must be in [2, 1e8], got " +
                          std::to_string(limit));
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      primes_.push_back(i);
      spf_[i] = static_cast<std::uint32_t>(i);
    }
    for (std::uint64_t p : primes_) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = static_cast<std::uint32_t>(p);
    }
  }
}

FactoredInteger Sieve::factorize(std::uint64_t n) const {
  if (n < 1 || n > limit_)
    throw parameter_error("factorize: n = " + std::to_string(n) +
                          " outside sieve range [1, " + std::to_string(limit_) +
                          "]");
  FactoredInteger f;
  f.n = n;
  while (n > 1) {
    std::uint64_t p = spf_[n];
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    f.factors.emplace_back(p, k);
  }
  return f;
}

int Sieve::omega(std::uint64_t n) const {
  if (n < 1 || n > limit_)
    throw parameter_error("omega: n outside sieve range");
  int w = 0;
  while (n > 1) {
    std::uint64_t p = spf_[n];
    while (n % p == 0) n /= p;
    ++w;
  }
  return w;
}

bool Sieve::is_prime(std::uint64_t n) const {
  if (n < 2 || n > limit_) return false;
  return spf_[n] == n;
}

int omega(const FactoredInteger& f) { return static_cast<int>(f.factors.size()); }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t n, std::uint64_t m) {
  std::uint64_t g = std::gcd(n, m);
  std::uint64_t q = n / g;
  std::uint64_t r;
  if (__builtin_mul_overflow(q, m, &r))
    throw range_error("lcm(" + std::to_string(n) + ", " + std::to_string(m) +
                      ") exceeds 64-bit integer range");
  return r;
}

double entry(std::uint64_t n, std::uint64_t m, const SpectralParams& params) {
  if (n < 1 || m < 1) throw parameter_error("entry: indices must be >= 1");
  double l = static_cast<double>(lcm_u64(n, m));
  double nm = static_cast<double>(n) * static_cast<double>(m);
  return std::pow(l, params.t) * std::pow(nm, -(params.rho + params.t) / 2.0);
}

}  // namespace arith
