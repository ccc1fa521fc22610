#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arith/params.hpp"

namespace arith {

struct FactoredInteger {
  std::uint64_t n = 1;
  // (prime, exponent) pairs, primes strictly increasing, exponents >= 1.
  std::vector<std::pair<std::uint64_t, int>> factors;

  std::uint64_t reconstruct() const;
};

// Smallest-prime-factor sieve up to a fixed limit. Construction is
// single-threaded; all queries are const and safe for concurrent use.
class Sieve {
 public:
  explicit Sieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  FactoredInteger factorize(std::uint64_t n) const;
  int omega(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint64_t> primes_;
};

int omega(const FactoredInteger& f);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
// lcm computed as (n / gcd) * m, with a range error on uint64 overflow.
std::uint64_t lcm_u64(std::uint64_t n, std::uint64_t m);

// Matrix entry [n,m]^t * (nm)^{-(rho+t)/2}, symmetric in (n, m).
double entry(std::uint64_t n, std::uint64_t m, const SpectralParams& params);

}  // namespace arith
