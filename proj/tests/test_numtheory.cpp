#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "arith/errors.hpp"
#include "arith/numtheory.hpp"
#include "arith/params.hpp"

using namespace arith;

TEST_CASE("sieve primes and factorization") {
  Sieve sieve(100000);
  CHECK(sieve.primes().size() == 9592);
  CHECK(sieve.primes().front() == 2);
  CHECK(sieve.primes().back() == 99991);
  CHECK(sieve.is_prime(99991));
  CHECK(!sieve.is_prime(99993));

  FactoredInteger f = sieve.factorize(360);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<std::uint64_t, int>{2, 3});
  CHECK(f.factors[1] == std::pair<std::uint64_t, int>{3, 2});
  CHECK(f.factors[2] == std::pair<std::uint64_t, int>{5, 1});
  CHECK(f.reconstruct() == 360);
  CHECK(omega(f) == 3);
  CHECK(sieve.omega(360) == 3);
  CHECK(sieve.omega(1) == 0);
  CHECK(sieve.factorize(1).factors.empty());

  CHECK_THROWS_AS(sieve.factorize(0), parameter_error);
  CHECK_THROWS_AS(sieve.factorize(100001), parameter_error);
  CHECK_THROWS_AS(Sieve(1), parameter_error);
  CHECK_THROWS_AS(Sieve(200000001), parameter_error);
}

TEST_CASE("gcd and overflow-guarded lcm") {
  CHECK(gcd_u64(12, 18) == 6);
  CHECK(lcm_u64(12, 18) == 36);
  CHECK(lcm_u64(1, 7) == 7);
  std::uint64_t big = 2147483647ull * 4294967291ull;  // coprime to 3
  CHECK_THROWS_AS(lcm_u64(big, 3000000019ull), range_error);
}

TEST_CASE("matrix entry law") {
  SpectralParams params = SpectralParams::indefinite(1.0, 3.0);
  CHECK(entry(2, 3, params) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(entry(2, 3, params) == entry(3, 2, params));
  // diagonal: [n,n]^t (n^2)^{-(rho+t)/2} = n^{-rho}
  for (std::uint64_t n : {1ull, 2ull, 7ull, 30ull})
    CHECK(entry(n, n, params) ==
          doctest::Approx(std::pow(double(n), -3.0)).epsilon(1e-15));
  // homogeneity entry(kn, km) = k^-rho entry(n, m)
  CHECK(entry(6, 10, params) ==
        doctest::Approx(std::pow(2.0, -3.0) * entry(3, 5, params))
            .epsilon(1e-14));
  CHECK_THROWS_AS(entry(0, 5, params), parameter_error);
}

TEST_CASE("legacy parameters map to 1/[n,m]^tau scaling") {
  SpectralParams params = SpectralParams::legacy(0.0, 1.0);
  CHECK(entry(2, 3, params) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(entry(4, 6, params) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(params.rho == doctest::Approx(1.0));
  CHECK(params.t == doctest::Approx(-1.0));
  CHECK_THROWS_AS(SpectralParams::legacy(0.8, 1.0), parameter_error);
  CHECK_THROWS_AS(SpectralParams::indefinite(1.0, 1.5), parameter_error);
  CHECK_THROWS_AS(SpectralParams::indefinite(-1.0, 3.0), parameter_error);
}
