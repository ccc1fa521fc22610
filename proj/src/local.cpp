#include "arith/local.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arith/errors.hpp"
#include "arith/parallel.hpp"

namespace arith {

namespace {

constexpr std::size_t kMaxDim = 256;

void check_base(double p, const SpectralParams& params) {
  if (!(p > 1.0)) throw parameter_error("local matrix requires p > 1");
  if (params.is_indefinite() && !(params.t > 0.0 && params.t < params.rho))
    throw parameter_error(
        "local matrix requires 0 < t < rho (Hilbert-Schmidt condition)");
  if (!(params.rho - params.t > 0.0) || !(params.rho > 0.0))
    throw parameter_error("local matrix requires rho > 0 and rho > t");
}

double entry_exponent(const SpectralParams& params, std::size_t j,
                      std::size_t k) {
  double jd = static_cast<double>(j), kd = static_cast<double>(k);
  return -(params.rho + params.t) / 2.0 * (jd + kd) +
         params.t * std::max(jd, kd);
}

}  // namespace

double psi_coordinate(double p, const SpectralParams& params, std::size_t k) {
  return std::pow(p, -(params.rho - params.t) / 2.0 * static_cast<double>(k));
}

double local_trace_closed_form(double p, const SpectralParams& params) {
  check_base(p, params);
  return 1.0 / (1.0 - std::pow(p, -params.rho));
}

double local_hs_closed_form(double p, const SpectralParams& params) {
  check_base(p, params);
  double b = std::pow(p, -(params.rho - params.t));
  return std::sqrt((1.0 + 2.0 * b / (1.0 - b)) /
                   (1.0 - std::pow(p, -2.0 * params.rho)));
}

double local_truncation_bound(double p, const SpectralParams& params,
                              std::size_t K) {
  check_base(p, params);
  double a = std::pow(p, -(params.rho + params.t));  // may exceed 1 in legacy
  double b = std::pow(p, -(params.rho - params.t));
  double bK = std::pow(b, static_cast<double>(K));
  double abK = std::pow(p, -2.0 * params.rho * static_cast<double>(K));
  // sum_{u<K} a^u * b^K, written to avoid overflow when a > 1
  double mixed;
  if (a == 1.0)
    mixed = static_cast<double>(K) * bK;
  else
    mixed = (bK - abK) / (1.0 - a);
  double hs2 = (1.0 + 2.0 * b / (1.0 - b)) / (1.0 - std::pow(p, -2.0 * params.rho));
  double tail2 = 2.0 * mixed / (1.0 - b) + abK * hs2;
  return std::sqrt(std::max(tail2, 0.0));
}

std::pair<SymMatrix, double> build_local_matrix(double p,
                                                const SpectralParams& params,
                                                std::size_t K) {
  check_base(p, params);
  if (K < 2) throw parameter_error("build_local_matrix: K must be >= 2");
  SymMatrix m(K);
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t k = j; k < K; ++k)
      m.set(j, k, std::pow(p, entry_exponent(params, j, k)));
  return {std::move(m), local_truncation_bound(p, params, K)};
}

Rank2Model rank2_model(double p, const SpectralParams& params) {
  if (!params.is_indefinite())
    throw parameter_error("rank2_model applies to the indefinite mode only");
  check_base(p, params);
  double b = std::pow(p, -(params.rho - params.t));
  double psi2 = 1.0 / (1.0 - b);
  double disc = std::sqrt(1.0 + 4.0 * b * psi2);
  return {(1.0 + disc) / 2.0, (1.0 - disc) / 2.0};
}

double verify_factorization(double p, const SpectralParams& params,
                            std::size_t K) {
  check_base(p, params);
  if (K < 2) throw parameter_error("verify_factorization: K must be >= 2");
  auto [ep, tb] = build_local_matrix(p, params, K);
  (void)tb;
  // T_jk = p^{-t j/2} p^{-(rho-t) k/2} for k >= j, upper triangular, so the
  // K-section of T*T equals the infinite product restricted to the section.
  std::vector<double> T(K * K, 0.0);
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t k = j; k < K; ++k)
      T[j * K + k] = std::pow(p, -params.t / 2.0 * static_cast<double>(j)) *
                     psi_coordinate(p, params, k);
  double pt = std::pow(p, params.t);
  double dev = 0.0;
  for (std::size_t j = 0; j < K; ++j) {
    for (std::size_t k = j; k < K; ++k) {
      double tt = 0.0;
      for (std::size_t l = 0; l <= std::min(j, k); ++l)
        tt += T[l * K + j] * T[l * K + k];
      double v = -(pt - 1.0) * tt +
                 pt * psi_coordinate(p, params, j) * psi_coordinate(p, params, k);
      dev = std::max(dev, std::fabs(v - ep(j, k)));
    }
  }
  return dev;
}

double verify_self_similarity(double p, const SpectralParams& params,
                              std::size_t K) {
  check_base(p, params);
  if (K < 3) throw parameter_error("verify_self_similarity: K must be >= 3");
  auto [ep, tb] = build_local_matrix(p, params, K);
  (void)tb;
  double prho = std::pow(p, -params.rho);
  double dev = 0.0;
  for (std::size_t j = 0; j + 1 < K; ++j) {
    for (std::size_t k = j; k + 1 < K; ++k) {
      double want = prho * ep(j, k);
      double got = ep(j + 1, k + 1);
      dev = std::max(dev, std::fabs(got - want) / std::fabs(want));
    }
  }
  return dev;
}

namespace {

std::size_t choose_dimension(double p, const SpectralParams& params, double eps,
                             std::size_t k_max) {
  double d = params.rho - params.t;
  std::size_t policy = static_cast<std::size_t>(
      std::ceil(std::log(1.0 / eps) / (d * std::log(p)))) + 4;
  std::size_t K = std::max<std::size_t>({k_max + 8, policy, 4});
  K = std::min(K, kMaxDim);
  while (K < kMaxDim && local_truncation_bound(p, params, K) > eps) ++K;
  return K;
}

LocalSpectrum spectrum_impl(double p, const SpectralParams& params, double eps,
                            std::size_t k_max) {
  check_base(p, params);
  if (k_max < 1) throw parameter_error("local_spectrum: k_max must be >= 1");
  if (!(eps > 0.0)) throw parameter_error("local_spectrum: eps must be > 0");
  std::size_t K = choose_dimension(p, params, eps, k_max);
  double bound = local_truncation_bound(p, params, K);
  if (bound > eps)
    throw accuracy_error("local_spectrum: dimension cap " +
                             std::to_string(kMaxDim) +
                             " reached before eps was met",
                         bound);
  auto [m, tb] = build_local_matrix(p, params, K);
  std::vector<double> values = sym_eigvalues(m);  // non-increasing

  LocalSpectrum out;
  out.p = p;
  out.K = K;
  out.trunc_bound = tb;

  if (params.is_indefinite()) {
    std::size_t pos_above = 0;
    for (double v : values)
      if (v > tb) ++pos_above;
      else break;
    if (pos_above != 1)
      throw numeric_error(
          "local_spectrum: expected exactly one positive eigenvalue above the "
          "truncation bound, found " + std::to_string(pos_above), tb);
    out.lambda_plus = values.front();
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
      if (*it < 0.0) out.lambda_minus.push_back(-*it);
      else break;
    }
    out.enumeration.push_back(out.lambda_plus);
    for (std::size_t k = 0; k < k_max && k < out.lambda_minus.size(); ++k)
      out.enumeration.push_back(-out.lambda_minus[k]);
  } else {
    if (!values.empty() && values.back() < -tb)
      throw numeric_error(
          "local_spectrum: negative eigenvalue above the truncation bound in "
          "legacy-definite mode", values.back());
    out.lambda_plus = values.front();
    for (std::size_t k = 0; k <= k_max && k < values.size(); ++k)
      out.enumeration.push_back(values[k]);
  }
  while (out.enumeration.size() < k_max + 1) out.enumeration.push_back(0.0);

  out.resolved = 0;
  for (double v : out.enumeration) {
    if (std::fabs(v) > tb) ++out.resolved;
    else break;
  }
  return out;
}

}  // namespace

LocalSpectrum local_spectrum(double p, const SpectralParams& params, double eps,
                             std::size_t k_max) {
  if (!(eps >= 1e-14 && eps <= 1e-6))
    throw parameter_error("local_spectrum: eps must lie in [1e-14, 1e-6]");
  return spectrum_impl(p, params, eps, k_max);
}

LocalSpectrum local_spectrum_raw(double p, const SpectralParams& params,
                                 double eps, std::size_t k_max) {
  return spectrum_impl(p, params, eps, k_max);
}

std::vector<LocalSpectrum> local_spectra_sweep(
    const std::vector<std::uint64_t>& primes, const SpectralParams& params,
    double eps, const std::vector<std::size_t>& depth) {
  if (primes.size() != depth.size())
    throw parameter_error("local_spectra_sweep: size mismatch");
  std::vector<LocalSpectrum> out(primes.size());
  parallel_for(primes.size(), [&](std::size_t i) {
    out[i] = local_spectrum_raw(static_cast<double>(primes[i]), params, eps,
                                depth[i]);
  });
  return out;
}

std::vector<LocalSpectrum> local_spectra_sweep_serial(
    const std::vector<std::uint64_t>& primes, const SpectralParams& params,
    double eps, const std::vector<std::size_t>& depth) {
  if (primes.size() != depth.size())
    throw parameter_error("local_spectra_sweep: size mismatch");
  std::vector<LocalSpectrum> out(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i)
    out[i] = local_spectrum_raw(static_cast<double>(primes[i]), params, eps,
                                depth[i]);
  return out;
}

}  // namespace arith
