#pragma once

#include <cstdint>
#include <vector>

#include "arith/global.hpp"

namespace arith {

struct GammaRatios {
  std::vector<std::uint64_t> primes;
  std::vector<double> r;          // r_p = |lambda_1(E_p)|^{-1/(rho-t)}
  std::vector<double> deviation;  // r_p / p - 1
};

// Beurling primes read off the first negative local eigenvalue of each E_p.
GammaRatios spectral_beurling_primes(const GlobalContext& ctx);

struct BeurlingSystem {
  std::vector<double> primes;    // generators, increasing
  std::vector<double> integers;  // all products <= X, non-decreasing
  std::vector<int> mobius;       // mu of the generating multiset
  std::uint64_t collision_warnings = 0;  // distinct multisets, equal doubles
};

// All products of the generators up to X (with multiplicity by generating
// multiset), by repeated heap extraction; k_cap bounds the exponent of any
// single generator (0 means unbounded).
BeurlingSystem generate_integers(const std::vector<double>& primes, double X,
                                 std::size_t k_cap = 0);

struct BeurlingCounts {
  std::vector<double> x;
  std::vector<std::uint64_t> N;  // #{integers <= x}
  std::vector<double> M;         // sum of mu over integers <= x
};

BeurlingCounts beurling_counting(const BeurlingSystem& system,
                                 const std::vector<double>& x_grid);

// zeta_P(s) = prod_p (1 - r_p^{-s})^{-1} over the stored generators, with the
// tail over omitted generators estimated via the prime zeta function (the
// generators track the rational primes to first order).
double beurling_zeta(const GammaRatios& ratios, double s);

}  // namespace arith
