#include "doctest.h"

#include <cmath>

#include "arith/asymptotics.hpp"
#include "arith/beurling.hpp"
#include "arith/errors.hpp"
#include "arith/global.hpp"

using namespace arith;

namespace {
const SpectralParams kP13 = SpectralParams::indefinite(1.0, 3.0);

const GlobalContext& ctx13() {
  static GlobalContext ctx(kP13, 10000, 1e-12);
  return ctx;
}
}  // namespace

TEST_CASE("spectral Beurling primes track the rational primes") {
  GammaRatios ratios = spectral_beurling_primes(ctx13());
  REQUIRE(ratios.r.size() == ctx13().primes().size());
  // r_p = |lambda_1(E_p)|^{-1/2} > p, converging to p from above
  for (std::size_t i = 0; i < ratios.r.size(); ++i) {
    CHECK(ratios.r[i] > double(ratios.primes[i]));
    CHECK(ratios.deviation[i] == doctest::Approx(ratios.r[i] / ratios.primes[i] - 1.0));
  }
  // deviation profile decays roughly like 1/p
  CHECK(ratios.deviation.front() > ratios.deviation.back());
  CHECK(ratios.deviation.back() < 1e-3);
}

TEST_CASE("generator heap reproduces the 5-smooth integers exactly") {
  BeurlingSystem sys = generate_integers({2.0, 3.0, 5.0}, 1000.0);
  std::vector<std::pair<double, int>> oracle;
  for (std::uint64_t a = 1; a <= 1000; a *= 2)
    for (std::uint64_t b = 1; a * b <= 1000; b *= 3)
      for (std::uint64_t c = 1; a * b * c <= 1000; c *= 5) {
        int w = (a > 1) + (b > 1) + (c > 1);
        bool sq = a <= 2 && b <= 3 && c <= 5;
        oracle.push_back({double(a * b * c), sq ? (w % 2 ? -1 : 1) : 0});
      }
    std::sort(oracle.begin(), oracle.end());
  REQUIRE(sys.integers.size() == oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    CHECK(sys.integers[i] == oracle[i].first);
    CHECK(sys.mobius[i] == oracle[i].second);
  }
  CHECK(sys.integers.front() == 1.0);
  CHECK(sys.mobius.front() == 1);
}

TEST_CASE("k_cap bounds exponents") {
  BeurlingSystem sys = generate_integers({2.0, 3.0}, 100.0, 1);
  // squarefree products only: 1, 2, 3, 6
  REQUIRE(sys.integers.size() == 4);
  CHECK(sys.integers == std::vector<double>{1.0, 2.0, 3.0, 6.0});
  CHECK(sys.mobius == std::vector<int>{1, -1, -1, 1});
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(generate_integers({0.5, 3.0}, 10.0), parameter_error);
  CHECK_THROWS_AS(generate_integers({3.0, 2.0}, 10.0), parameter_error);
  CHECK_THROWS_AS(generate_integers({2.0}, 0.5), parameter_error);
}

TEST_CASE("counting functions") {
  BeurlingSystem sys = generate_integers({2.0, 3.0, 5.0}, 1000.0);
  BeurlingCounts counts = beurling_counting(sys, {1.0, 10.0, 1000.0});
  CHECK(counts.N[0] == 1);
  CHECK(counts.N[1] == 9);  // 1,2,3,4,5,6,8,9,10
  CHECK(counts.N[2] == sys.integers.size());
  // M(10) over 5-smooth: mu(1,2,3,5,6,10) = 1-1-1-1+1+1, rest 0
  CHECK(counts.M[1] == 0.0);
  CHECK_THROWS_AS(beurling_counting(sys, {0.5}), range_error);
}

TEST_CASE("beurling zeta near the classical Euler product") {
  GammaRatios ratios = spectral_beurling_primes(ctx13());
  double z2 = beurling_zeta(ratios, 2.0);
  // generators sit above the primes (far above for the first few, e.g.
  // r_1 ~ 2.74), so zeta_P(2) lands noticeably below zeta(2)
  CHECK(z2 < riemann_zeta(2.0));
  CHECK(z2 > 1.1);
  double z104 = beurling_zeta(ratios, 1.04);
  CHECK(z104 > 10.0);
  CHECK(z104 < riemann_zeta(1.04));
  CHECK_THROWS_AS(beurling_zeta(ratios, 1.01), range_error);
}
