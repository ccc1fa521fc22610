#pragma once

#include <cstdint>
#include <vector>

#include "arith/global.hpp"
#include "arith/local.hpp"
#include "arith/params.hpp"

namespace arith {

// Euler-Maclaurin evaluation for real s > 1; absolute error far below 1e-14
// on the range accepted.
double riemann_zeta(double s);

// P(x) = sum_p p^{-x} for real x > 1, via sum_m mu(m)/m * log zeta(m x).
double prime_zeta(double x);

struct EulerFactor {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on the truncated k-tail of the factor
};

// f_p(s) = sum_k |lambda_k(E_p)|^s, h_p(s) = sum_k sgn * |lambda_k(E_p)|^s.
EulerFactor euler_factor_f(const LocalSpectrum& ls, const SpectralParams& params,
                           double s);
EulerFactor euler_factor_h(const LocalSpectrum& ls, const SpectralParams& params,
                           double s);

struct ZetaProfile {
  std::vector<double> s;
  std::vector<double> f;        // sum_n |lambda_n|^s, prime-tail corrected
  std::vector<double> h;        // sum_n sgn(lambda_n) |lambda_n|^s
  std::vector<double> f_tilde;  // f(s) / zeta((rho-t) s)
  std::vector<double> h_tilde;  // h(s) * zeta((rho-t) s)
  double max_factor_tail = 0.0;    // worst per-prime k-tail bound seen
  double max_prime_tail = 0.0;     // largest |log| prime-tail correction
};

// Spectral zeta functions on a grid of s values to the right of the
// abscissa 1/(rho - t), as Euler products over the primes in ctx with the
// tail over larger primes estimated through the prime zeta function.
ZetaProfile spectral_zeta(const GlobalContext& ctx,
                          const std::vector<double>& s_grid);

// f~(s) = f(s)/zeta((rho-t)s) computed directly as a product of the combined
// per-prime factors f_p(s) * (1 - p^{-(rho-t)s}); this converges on a strip
// below the abscissa of f itself.
double f_tilde_direct(const GlobalContext& ctx, double s);

struct KappaEstimate {
  double kappa_product = 0.0;     // from the local-factor product formula
  double kappa_fit_plus = 0.0;    // prefactor fitted on the positive branch
  double kappa_fit_minus = 0.0;   // prefactor fitted on the negative branch
  double product_remainder = 0.0; // estimated prime-tail of the log-product
};

// kappa = ( (1/2) prod_p (1-1/p) sum_k |lambda_k(E_p)|^{1/(rho-t)} )^{rho-t},
// cross-checked against prefactors fitted on the ledger branches.
KappaEstimate kappa_estimate(const GlobalContext& ctx,
                             const EigenvalueLedger& ledger,
                             std::size_t fit_lo, std::size_t fit_hi);

struct FitResult {
  double exponent = 0.0;          // least-squares slope in log-log scale
  double prefactor = 0.0;         // from the free fit
  double prefactor_fixed = 0.0;   // geometric mean of lambda_r * r^alpha
  double residual = 0.0;          // rms log-residual of the free fit
};

// Fits values[r-1] ~ prefactor * r^exponent over ranks [lo, hi] (1-based)
// on a branch sorted non-increasing; alpha is the pinned decay exponent
// used for prefactor_fixed.
FitResult fit_power_law(const std::vector<double>& branch, std::size_t lo,
                        std::size_t hi, double alpha);

}  // namespace arith
