#include "arith/global.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arith/errors.hpp"
#include "arith/parallel.hpp"

namespace arith {

namespace {

// largest k with p^k <= limit
std::size_t depth_for(std::uint64_t p, std::uint64_t limit) {
  std::size_t k = 0;
  std::uint64_t v = 1;
  while (v <= limit / p) {
    v *= p;
    ++k;
  }
  return k;
}

// rough size of lambda(depth), used to pick the per-prime resolution target
double depth_scale(const SpectralParams& params, double p, std::size_t depth) {
  if (params.is_indefinite())
    return std::pow(p, -(params.rho - params.t)) *
           std::pow(p, -params.rho * static_cast<double>(depth - 1));
  return std::pow(p, -params.rho * static_cast<double>(depth));
}

struct LogLogFit {
  double slope = 0.0;
  double log_prefactor = 0.0;
};

LogLogFit fit_loglog(const std::vector<double>& x,
                     const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(y[i] > 0.0)) continue;
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) throw parameter_error("log-log fit needs at least two points");
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw parameter_error("log-log fit: degenerate abscissae");
  LogLogFit f;
  f.slope = (n * sxy - sx * sy) / denom;
  f.log_prefactor = (sy - f.slope * sx) / static_cast<double>(n);
  return f;
}

}  // namespace

GlobalContext::GlobalContext(const SpectralParams& params, std::uint64_t limit,
                             double eps)
    : params_(params), limit_(limit), sieve_(limit) {
  if (limit < 2) throw parameter_error("GlobalContext: limit must be >= 2");
  if (!(eps > 0.0 && eps <= 1e-6))
    throw parameter_error("GlobalContext: eps must lie in (0, 1e-6]");

  const auto& ps = sieve_.primes();
  locals_.resize(ps.size());
  parallel_for(ps.size(), [&](std::size_t i) {
    double p = static_cast<double>(ps[i]);
    std::size_t depth = depth_for(ps[i], limit_);
    double eps_p = std::min(eps, depth_scale(params_, p, depth) / 32.0);
    locals_[i] = local_spectrum_raw(p, params_, eps_p, depth);
  });

  prime_slot_.assign(limit + 1, 0);
  for (std::size_t i = 0; i < ps.size(); ++i)
    prime_slot_[ps[i]] = static_cast<std::uint32_t>(i + 1);

  double alpha = decay_exponent();
  double log_c = 0.0;
  double B_factor = 0.0;
  for (std::size_t i = 0; i < locals_.size(); ++i) {
    const LocalSpectrum& ls = locals_[i];
    if (!(ls.lambda_plus >= 1.0 - 1e-12))
      throw numeric_error(
          "product_constant: non-monotone log increment at p = " +
              std::to_string(ps[i]),
          ls.lambda_plus - 1.0);
    log_c += std::log(ls.lambda_plus);

    double b_p = 1.0, b_last = 1.0;
    for (std::size_t k = 1; k < ls.resolved; ++k) {
      double bk = std::fabs(ls.enumeration[k]) *
                  std::pow(ls.p, alpha * static_cast<double>(k)) /
                  ls.lambda_plus;
      b_p = std::max(b_p, bk);
      b_last = bk;
    }
    // eigenvalues beyond the resolved range obey |lambda_{k+1}| <=
    // p^{-rho} |lambda_k|, so their scaled magnitudes are bounded by the
    // last resolved one times p^{alpha - rho} per step
    b_p = std::max(b_p, b_last * std::pow(ls.p, alpha - params_.rho));
    B_factor += std::log(b_p);
  }
  C_ = std::exp(log_c);
  B_ = std::exp(log_c + B_factor);

  // remainder of log C over primes > limit, from the fitted decay of
  // lambda_0 - 1 ~ c p^{-(rho-t)} over the last decade of computed primes
  double d = params_.rho - params_.t;
  double c_fit = 0.0;
  for (std::size_t i = 0; i < locals_.size(); ++i) {
    if (10 * ps[i] < limit) continue;
    c_fit = std::max(c_fit, (locals_[i].lambda_plus - 1.0) *
                                std::pow(locals_[i].p, d));
  }
  remainder_ = c_fit * std::pow(static_cast<double>(limit), 1.0 - d) / (d - 1.0);
}

const LocalSpectrum& GlobalContext::local_for_prime(std::uint64_t p) const {
  if (p > limit_ || prime_slot_[p] == 0)
    throw range_error("local_for_prime: " + std::to_string(p) +
                      " is not a prime <= limit");
  return locals_[prime_slot_[p] - 1];
}

double GlobalContext::decay_exponent() const {
  return params_.is_indefinite() ? params_.rho - params_.t : params_.rho;
}

double GlobalContext::eigenvalue_at(std::uint64_t n) const {
  if (n == 0 || n > limit_)
    throw range_error("eigenvalue_at: n must lie in [1, limit]");
  double v = C_;
  for (const auto& [p, k] : sieve_.factorize(n).factors) {
    const LocalSpectrum& ls = locals_[prime_slot_[p] - 1];
    if (!ls.is_resolved(k))
      throw accuracy_error("eigenvalue_at: lambda_" + std::to_string(k) +
                               "(E_" + std::to_string(p) +
                               ") is below the truncation bound",
                           ls.trunc_bound);
    v *= ls.enumeration[k] / ls.lambda_plus;
  }
  return v;
}

ProductConstant product_constant(const SpectralParams& params,
                                 std::uint64_t P_max, double eps) {
  GlobalContext ctx(params, P_max, eps);
  return {ctx.product_constant(), ctx.product_remainder()};
}

std::vector<double> EigenvalueLedger::branch(int sign) const {
  std::vector<double> out;
  for (const auto& e : entries)
    if ((sign > 0 && e.value > 0.0) || (sign < 0 && e.value < 0.0))
      out.push_back(std::fabs(e.value));
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

EigenvalueLedger enumerate_above(const GlobalContext& ctx,
                                 double lambda_star) {
  if (!(lambda_star > 0.0))
    throw parameter_error("enumerate_above: lambda_star must be > 0");
  double alpha = ctx.decay_exponent();
  double B = ctx.tail_constant();
  double n_real = std::ceil(std::pow(B / lambda_star, 1.0 / alpha));
  std::uint64_t n_enum =
      n_real < 1.0 ? 1 : static_cast<std::uint64_t>(n_real);
  if (n_enum > ctx.limit())
    throw capacity_error(
        "enumerate_above: N_enum = " + std::to_string(n_enum) +
        " exceeds the sieve limit; raise lambda_star or the prime budget");

  EigenvalueLedger ledger;
  ledger.params = ctx.params();
  ledger.n_enum = n_enum;
  ledger.threshold = lambda_star;
  ledger.tail_constant = B;
  ledger.product_constant = ctx.product_constant();
  ledger.decay_exponent = alpha;
  ledger.entries.resize(n_enum);
  parallel_for(n_enum, [&](std::size_t i) {
    std::uint64_t n = static_cast<std::uint64_t>(i) + 1;
    ledger.entries[i] = {n, ctx.eigenvalue_at(n),
                         static_cast<int>(ctx.sieve().omega(n))};
  });
  return ledger;
}

CountingCurve counting(const EigenvalueLedger& ledger,
                       const std::vector<double>& x_grid) {
  if (x_grid.empty()) throw parameter_error("counting: empty grid");
  for (double x : x_grid)
    if (!(x > 0.0) || 1.0 / x < ledger.threshold)
      throw range_error(
          "counting: 1/x below the certified threshold of the ledger");

  std::vector<double> plus = ledger.branch(+1);
  std::vector<double> minus = ledger.branch(-1);
  CountingCurve curve;
  curve.x = x_grid;
  auto count_above = [](const std::vector<double>& v, double cut) {
    // v is sorted non-increasing; count entries > cut
    return static_cast<std::uint64_t>(
        std::lower_bound(v.begin(), v.end(), cut,
                         [](double a, double b) { return a > b; }) -
        v.begin());
  };
  for (double x : x_grid) {
    curve.mu_plus.push_back(count_above(plus, 1.0 / x));
    curve.mu_minus.push_back(count_above(minus, 1.0 / x));
  }

  std::vector<double> yp(curve.mu_plus.begin(), curve.mu_plus.end());
  LogLogFit fp = fit_loglog(curve.x, yp);
  curve.slope_plus = fp.slope;
  curve.prefactor_plus = std::exp(fp.log_prefactor);
  if (!minus.empty()) {
    std::vector<double> ym(curve.mu_minus.begin(), curve.mu_minus.end());
    LogLogFit fm = fit_loglog(curve.x, ym);
    curve.slope_minus = fm.slope;
    curve.prefactor_minus = std::exp(fm.log_prefactor);
  }
  return curve;
}

SymMatrix truncated_global(std::uint64_t N, const SpectralParams& params) {
  if (N < 2) throw parameter_error("truncated_global: N must be >= 2");
  if (N > 4096)
    throw capacity_error("truncated_global: N exceeds the 4096 cap");
  SymMatrix m(static_cast<std::size_t>(N));
  for (std::uint64_t n = 1; n <= N; ++n)
    for (std::uint64_t k = n; k <= N; ++k)
      m.set(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(k - 1),
            entry(n, k, params));
  return m;
}

CrossValidationReport cross_validate(const EigenvalueLedger& ledger,
                                     std::uint64_t N, std::size_t m) {
  if (m == 0) throw parameter_error("cross_validate: m must be >= 1");
  SymMatrix section = truncated_global(N, ledger.params);
  std::vector<double> section_vals = sym_eigvalues(section);  // non-increasing

  std::vector<std::size_t> order(ledger.entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(ledger.entries[a].value) >
           std::fabs(ledger.entries[b].value);
  });
  std::sort(section_vals.begin(), section_vals.end(),
            [](double a, double b) { return std::fabs(a) > std::fabs(b); });

  if (m > section_vals.size() || m > order.size())
    throw parameter_error("cross_validate: m exceeds the available spectrum");

  CrossValidationReport report;
  report.N = N;
  report.all_signs_match = true;
  for (std::size_t i = 0; i < m; ++i) {
    const LedgerEntry& e = ledger.entries[order[i]];
    CrossValidationRow row;
    row.n = e.n;
    row.ledger_value = e.value;
    row.section_value = section_vals[i];
    row.rel_deviation =
        std::fabs(row.section_value - row.ledger_value) /
        std::fabs(row.ledger_value);
    row.sign_match = (row.section_value > 0.0) == (row.ledger_value > 0.0);
    report.all_signs_match = report.all_signs_match && row.sign_match;
    report.max_rel_deviation =
        std::max(report.max_rel_deviation, row.rel_deviation);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace arith
