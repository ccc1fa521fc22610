#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "arith/local.hpp"
#include "arith/numtheory.hpp"
#include "arith/params.hpp"

namespace arith {

// Shared state for the global spectrum: sieve plus local spectra for every
// prime <= limit, resolved deep enough for any n <= limit. Construction runs
// the per-prime work in parallel; the result is deterministic.
class GlobalContext {
 public:
  GlobalContext(const SpectralParams& params, std::uint64_t limit,
                double eps = 1e-12);

  const SpectralParams& params() const { return params_; }
  const Sieve& sieve() const { return sieve_; }
  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return sieve_.primes(); }
  const LocalSpectrum& local(std::size_t prime_index) const {
    return locals_[prime_index];
  }
  const LocalSpectrum& local_for_prime(std::uint64_t p) const;

  // Sorted-eigenvalue decay exponent: rho - t in indefinite mode, rho in
  // legacy-definite mode.
  double decay_exponent() const;

  // C = prod_p lambda_0(E_p) over primes <= limit, with the tail of the
  // product over larger primes estimated from the fitted decay of
  // lambda_0 - 1.
  double product_constant() const { return C_; }
  double product_remainder() const { return remainder_; }

  // B with |lambda_n| <= B n^{-alpha} over the enumerated range.
  double tail_constant() const { return B_; }

  // lambda_n(E) = C * prod_{p | n} lambda_{k_p}(E_p) / lambda_0(E_p).
  double eigenvalue_at(std::uint64_t n) const;

 private:
  SpectralParams params_;
  std::uint64_t limit_;
  Sieve sieve_;
  std::vector<LocalSpectrum> locals_;
  std::vector<std::uint32_t> prime_slot_;  // p -> index+1 into locals_
  double C_ = 0.0;
  double B_ = 0.0;
  double remainder_ = 0.0;
};

struct ProductConstant {
  double value = 0.0;
  double remainder_estimate = 0.0;  // bound on |log(C_full / C_partial)|
};

ProductConstant product_constant(const SpectralParams& params,
                                 std::uint64_t P_max, double eps = 1e-12);

struct LedgerEntry {
  std::uint64_t n = 0;
  double value = 0.0;
  int omega = 0;
};

struct EigenvalueLedger {
  SpectralParams params;
  std::vector<LedgerEntry> entries;  // n = 1 .. n_enum in order
  std::uint64_t n_enum = 0;
  double threshold = 0.0;         // lambda_star: complete above this value
  double tail_constant = 0.0;     // B
  double product_constant = 0.0;  // C
  double decay_exponent = 0.0;    // alpha

  double value_at(std::uint64_t n) const { return entries[n - 1].value; }

  // |value| of the given branch, sorted non-increasing.
  std::vector<double> branch(int sign) const;
};

// Emits all n <= N_enum where N_enum = ceil((B / lambda_star)^{1/alpha}),
// certifying that every eigenvalue with |lambda| > lambda_star is present.
EigenvalueLedger enumerate_above(const GlobalContext& ctx, double lambda_star);

struct CountingCurve {
  std::vector<double> x;
  std::vector<std::uint64_t> mu_plus;
  std::vector<std::uint64_t> mu_minus;
  // log-log least-squares fits mu(x) ~ prefactor * x^slope
  double slope_plus = 0.0, prefactor_plus = 0.0;
  double slope_minus = 0.0, prefactor_minus = 0.0;
};

CountingCurve counting(const EigenvalueLedger& ledger,
                       const std::vector<double>& x_grid);

// N x N section of E via entry(n, m).
SymMatrix truncated_global(std::uint64_t N, const SpectralParams& params);

struct CrossValidationRow {
  std::uint64_t n = 0;
  double ledger_value = 0.0;
  double section_value = 0.0;
  double rel_deviation = 0.0;
  bool sign_match = false;
};

struct CrossValidationReport {
  std::uint64_t N = 0;
  std::vector<CrossValidationRow> rows;
  double max_rel_deviation = 0.0;
  bool all_signs_match = false;
};

CrossValidationReport cross_validate(const EigenvalueLedger& ledger,
                                     std::uint64_t N, std::size_t m);

}  // namespace arith
