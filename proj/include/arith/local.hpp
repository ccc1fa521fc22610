#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arith/linalg.hpp"
#include "arith/params.hpp"

namespace arith {

// Truncated spectrum of one local matrix E_p (p > 1 real; primes are the
// arithmetically relevant case).
//
// Enumeration convention: lambda(0) is the unique positive eigenvalue,
// lambda(k) = -lambda_minus[k-1] for k >= 1, with lambda_minus sorted by
// decreasing magnitude. In legacy-definite mode all eigenvalues are positive
// and the enumeration is simply non-increasing.
struct LocalSpectrum {
  double p = 0.0;
  std::size_t K = 0;          // truncation dimension actually used
  double trunc_bound = 0.0;   // Frobenius norm of the discarded block
  double lambda_plus = 0.0;   // the positive eigenvalue (indefinite mode)
  std::vector<double> lambda_minus;  // magnitudes, non-increasing
  std::vector<double> enumeration;   // lambda(k) as described above
  std::size_t resolved = 0;   // entries of `enumeration` with |.| > trunc_bound

  double lambda(std::size_t k) const { return enumeration[k]; }
  bool is_resolved(std::size_t k) const { return k < resolved; }
};

struct Rank2Model {
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;  // negative root
};

// K x K leading section of E_p plus the exact Frobenius norm of the
// discarded infinite block (closed-form geometric sums).
std::pair<SymMatrix, double> build_local_matrix(double p,
                                                const SpectralParams& params,
                                                std::size_t K);

double local_truncation_bound(double p, const SpectralParams& params,
                              std::size_t K);

// trace(E_p) = 1/(1 - p^-rho)
double local_trace_closed_form(double p, const SpectralParams& params);
// ||E_p||_HS^2 = (1 + 2 a/(1-a)) / (1 - p^-2rho), a = p^-(rho-t)
double local_hs_closed_form(double p, const SpectralParams& params);

// Spectrum of an adaptive truncation with trunc_bound <= eps and at least
// k_max + 1 enumerated eigenvalues. eps in [1e-14, 1e-6] for the public
// contract; the ledger internals may push deeper via local_spectrum_raw.
LocalSpectrum local_spectrum(double p, const SpectralParams& params,
                             double eps, std::size_t k_max);

// Same computation without the eps-range clamp; used where the truncation
// requirement is driven by the depth of the global enumeration.
LocalSpectrum local_spectrum_raw(double p, const SpectralParams& params,
                                 double eps, std::size_t k_max);

// Roots of lambda^2 - lambda - p^{-(rho-t)} ||psi~||^2 = 0 with
// ||psi~||^2 = 1/(1 - p^{-(rho-t)}).
Rank2Model rank2_model(double p, const SpectralParams& params);

// Max entrywise deviation of E_p from -(p^t - 1) T*T + p^t psi psi^T.
double verify_factorization(double p, const SpectralParams& params,
                            std::size_t K);

// Max entrywise deviation of the section with row/col 0 deleted from
// p^-rho times the leading (K-1)-section.
double verify_self_similarity(double p, const SpectralParams& params,
                              std::size_t K);

// psi_k = p^{-(rho-t)k/2}
double psi_coordinate(double p, const SpectralParams& params, std::size_t k);

// Local spectra for a batch of primes, parallel across primes with
// deterministic per-prime results. depth[i] is the k_max for primes[i].
std::vector<LocalSpectrum> local_spectra_sweep(
    const std::vector<std::uint64_t>& primes, const SpectralParams& params,
    double eps, const std::vector<std::size_t>& depth);

// Serial reference for the sweep; must produce identical results.
std::vector<LocalSpectrum> local_spectra_sweep_serial(
    const std::vector<std::uint64_t>& primes, const SpectralParams& params,
    double eps, const std::vector<std::size_t>& depth);

}  // namespace arith
