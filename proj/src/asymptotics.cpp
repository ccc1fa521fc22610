#include "arith/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arith/errors.hpp"
#include "arith/parallel.hpp"

namespace arith {

namespace {

int mobius_small(int m) {
  int mu = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    mu = -mu;
  }
  if (m > 1) mu = -mu;
  return mu;
}

// sum over the primes of ctx of p^{-y}
double partial_prime_sum(const GlobalContext& ctx, double y) {
  double s = 0.0;
  for (std::uint64_t p : ctx.primes()) s += std::pow(static_cast<double>(p), -y);
  return s;
}

// sum_{p > limit} log(1 + sign * p^{-y}) via the prime zeta function
double log_euler_tail(const GlobalContext& ctx, double y, int sign) {
  double total = 0.0;
  double sgn = static_cast<double>(sign);
  double coeff = sgn;
  for (int m = 1; m <= 64; ++m) {
    double tail = prime_zeta(m * y) - partial_prime_sum(ctx, m * y);
    double term = coeff / m * tail;
    total += term;
    if (std::fabs(tail) < 1e-17) break;
    coeff *= -sgn;
  }
  return total;
}

}  // namespace

double riemann_zeta(double s) {
  if (!(s > 1.0 + 1e-6))
    throw range_error("riemann_zeta: requires s > 1 + 1e-6");
  constexpr int M = 10000;
  double sum = 0.0;
  for (int n = M; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
  double Md = static_cast<double>(M);
  sum += std::pow(Md, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(Md, -s);
  // Euler-Maclaurin corrections with B_2, B_4, B_6, B_8
  static const double bern[4] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0,
                                 -1.0 / 30.0};
  double rising = s;        // s (s+1) ... (s + 2k - 2)
  double fact = 2.0;        // (2k)!
  double power = std::pow(Md, -s - 1.0);
  for (int k = 1; k <= 4; ++k) {
    sum += bern[k - 1] / fact * rising * power;
    rising *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    power /= Md * Md;
  }
  return sum;
}

double prime_zeta(double x) {
  if (!(x > 1.0 + 1e-6))
    throw range_error("prime_zeta: requires x > 1 + 1e-6");
  double sum = 0.0;
  for (int m = 1; m <= 64; ++m) {
    int mu = mobius_small(m);
    if (mu == 0) continue;
    double lz = std::log(riemann_zeta(m * x));
    sum += mu * lz / m;
    if (lz < 1e-18) break;
  }
  return sum;
}

namespace {

EulerFactor factor_impl(const LocalSpectrum& ls, const SpectralParams& params,
                        double s, bool signed_sum) {
  if (!(s > 0.0)) throw range_error("euler_factor: requires s > 0");
  if (ls.resolved == 0)
    throw accuracy_error("euler_factor: unresolved local spectrum",
                         ls.trunc_bound);
  double value = 0.0;
  for (std::size_t k = 0; k < ls.resolved; ++k) {
    double lam = ls.enumeration[k];
    double mag = std::pow(std::fabs(lam), s);
    value += (signed_sum && lam < 0.0) ? -mag : mag;
  }
  // beyond the resolved range the chain continues with ratio ~ p^{-rho}
  // (and stays negative), so sum the geometric continuation explicitly
  double r = std::pow(ls.p, -params.rho * s);
  double last_lam = ls.enumeration[ls.resolved - 1];
  double tail = std::pow(std::fabs(last_lam), s) * r / (1.0 - r);
  EulerFactor out;
  out.tail_bound = tail;
  out.value = value + ((signed_sum && last_lam < 0.0) ? -tail : tail);
  return out;
}

}  // namespace

EulerFactor euler_factor_f(const LocalSpectrum& ls, const SpectralParams& params,
                           double s) {
  return factor_impl(ls, params, s, false);
}

EulerFactor euler_factor_h(const LocalSpectrum& ls, const SpectralParams& params,
                           double s) {
  return factor_impl(ls, params, s, true);
}

ZetaProfile spectral_zeta(const GlobalContext& ctx,
                          const std::vector<double>& s_grid) {
  const SpectralParams& params = ctx.params();
  double d = params.rho - params.t;
  double abscissa = 1.0 / d;
  if (s_grid.empty()) throw parameter_error("spectral_zeta: empty grid");
  for (double s : s_grid)
    if (!(s > abscissa + 0.02))
      throw range_error(
          "spectral_zeta: grid must stay right of the abscissa 1/(rho-t) by "
          "at least 0.02");

  ZetaProfile prof;
  prof.s = s_grid;
  std::size_t np = ctx.primes().size();
  std::vector<double> log_f(np), log_h(np), tails(np);

  // leading coefficient of lambda_0 - 1 ~ c p^{-(rho-t)}, estimated as the
  // geometric mean over the last computed decade of primes
  double c_acc = 0.0;
  std::size_t c_n = 0;
  for (std::size_t i = 0; i < np; ++i) {
    if (10 * ctx.primes()[i] < ctx.limit()) continue;
    c_acc += std::log((ctx.local(i).lambda_plus - 1.0) *
                      std::pow(static_cast<double>(ctx.local(i).p), d));
    ++c_n;
  }
  double c_geo = c_n > 0 ? std::exp(c_acc / static_cast<double>(c_n)) : 1.0;
  double tail_lam0 = c_geo * (prime_zeta(d) - partial_prime_sum(ctx, d));

  for (double s : s_grid) {
    parallel_for(np, [&](std::size_t i) {
      const LocalSpectrum& ls = ctx.local(i);
      EulerFactor ff = euler_factor_f(ls, params, s);
      EulerFactor fh = euler_factor_h(ls, params, s);
      log_f[i] = std::log(ff.value);
      log_h[i] = std::log(fh.value);
      tails[i] = std::max(ff.tail_bound / ff.value,
                          fh.tail_bound / std::fabs(fh.value));
    });
    double lf = 0.0, lh = 0.0;
    for (std::size_t i = 0; i < np; ++i) {
      lf += log_f[i];
      lh += log_h[i];
      prof.max_factor_tail = std::max(prof.max_factor_tail, tails[i]);
    }
    // prime tails beyond the context: f_p ~ 1 + s(lambda_0 - 1) + |lambda_1|^s
    // and h_p ~ 1 + s(lambda_0 - 1) - |lambda_1|^s, with |lambda_1| carrying
    // leading exponent rho - t (indefinite) or rho (legacy) and the first
    // |lambda_1| correction term p^{-t} applied in the indefinite mode
    double e1 = params.is_indefinite() ? d * s : params.rho * s;
    double tf = log_euler_tail(ctx, e1, +1) + s * tail_lam0;
    double th = log_euler_tail(ctx, e1, -1) + s * tail_lam0;
    if (params.is_indefinite() && e1 + params.t > 1.02) {
      double corr =
          s * (prime_zeta(e1 + params.t) - partial_prime_sum(ctx, e1 + params.t));
      tf -= corr;
      th += corr;
    }
    prof.max_prime_tail =
        std::max({prof.max_prime_tail, std::fabs(tf), std::fabs(th)});
    double f = std::exp(lf + tf);
    double h = std::exp(lh + th);
    double zeta_ds = riemann_zeta(d * s);
    prof.f.push_back(f);
    prof.h.push_back(h);
    prof.f_tilde.push_back(f / zeta_ds);
    prof.h_tilde.push_back(h * zeta_ds);
  }
  return prof;
}

double f_tilde_direct(const GlobalContext& ctx, double s) {
  const SpectralParams& params = ctx.params();
  double d = params.rho - params.t;
  if (!(s * d > 0.5 + 0.01))
    throw range_error(
        "f_tilde_direct: requires s > 1/(2(rho-t)) plus a margin");
  std::size_t np = ctx.primes().size();
  std::vector<double> logs(np);
  parallel_for(np, [&](std::size_t i) {
    const LocalSpectrum& ls = ctx.local(i);
    EulerFactor ff = euler_factor_f(ls, params, s);
    logs[i] = std::log(ff.value * (1.0 - std::pow(ls.p, -d * s)));
  });
  double total = 0.0;
  for (double v : logs) total += v;
  return std::exp(total);
}

KappaEstimate kappa_estimate(const GlobalContext& ctx,
                             const EigenvalueLedger& ledger,
                             std::size_t fit_lo, std::size_t fit_hi) {
  const SpectralParams& params = ctx.params();
  double alpha = ctx.decay_exponent();
  double u = 1.0 / alpha;

  std::size_t np = ctx.primes().size();
  std::vector<double> logs(np);
  parallel_for(np, [&](std::size_t i) {
    const LocalSpectrum& ls = ctx.local(i);
    double sum = 0.0;
    for (std::size_t k = 0; k < ls.resolved; ++k)
      sum += std::pow(std::fabs(ls.enumeration[k]), u);
    double r = std::pow(ls.p, -params.rho * u);
    sum += std::pow(std::fabs(ls.enumeration[ls.resolved - 1]), u) * r /
           (1.0 - r);
    logs[i] = std::log(sum * (1.0 - 1.0 / ls.p));
  });
  double log_prod = 0.0;
  for (double v : logs) log_prod += v;

  double branch_share = params.is_indefinite() ? 0.5 : 1.0;
  KappaEstimate est;
  est.kappa_product =
      std::pow(branch_share * std::exp(log_prod), alpha);

  // tail of the log-product, from the decay of the last-decade factors
  double c1 = 0.0, c2 = 0.0;
  const auto& ps = ctx.primes();
  std::uint64_t P = ctx.limit();
  for (std::size_t i = 0; i < np; ++i) {
    if (100 * ps[i] >= P && 10 * ps[i] < P)
      c1 = std::max(c1, std::fabs(logs[i]));
    if (10 * ps[i] >= P) c2 = std::max(c2, std::fabs(logs[i]));
  }
  double beta = 2.0;
  if (c1 > 0.0 && c2 > 0.0)
    beta = std::clamp(std::log(c1 / c2) / std::log(10.0), 1.1, 3.0);
  double c = c2 * std::pow(static_cast<double>(P), beta);
  est.product_remainder =
      c * std::pow(static_cast<double>(P), 1.0 - beta) / (beta - 1.0);

  FitResult plus =
      fit_power_law(ledger.branch(+1), fit_lo, fit_hi, alpha);
  est.kappa_fit_plus = plus.prefactor_fixed;
  if (params.is_indefinite()) {
    FitResult minus =
        fit_power_law(ledger.branch(-1), fit_lo, fit_hi, alpha);
    est.kappa_fit_minus = minus.prefactor_fixed;
  }
  return est;
}

FitResult fit_power_law(const std::vector<double>& branch, std::size_t lo,
                        std::size_t hi, double alpha) {
  if (lo < 1 || hi <= lo || hi > branch.size() || hi - lo + 1 < 50)
    throw parameter_error(
        "fit_power_law: need ranks 1 <= lo < hi <= size with at least 50 "
        "points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = hi - lo + 1;
  for (std::size_t r = lo; r <= hi; ++r) {
    double lx = std::log(static_cast<double>(r));
    double ly = std::log(branch[r - 1]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = n * sxx - sx * sx;
  FitResult fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  double intercept = (sy - fit.exponent * sx) / static_cast<double>(n);
  fit.prefactor = std::exp(intercept);

  double ss = 0.0;
  for (std::size_t r = lo; r <= hi; ++r) {
    double res = std::log(branch[r - 1]) - intercept -
                 fit.exponent * std::log(static_cast<double>(r));
    ss += res * res;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(n));

  // prefactor with the exponent pinned to -alpha, geometric mean over the
  // deep half of the window where completeness and asymptotics are best
  std::size_t deep_lo = std::max(lo, (lo + hi) / 2);
  double acc = 0.0;
  std::size_t cnt = 0;
  for (std::size_t r = deep_lo; r <= hi; ++r) {
    acc += std::log(branch[r - 1]) + alpha * std::log(static_cast<double>(r));
    ++cnt;
  }
  fit.prefactor_fixed = std::exp(acc / static_cast<double>(cnt));
  return fit;
}

}  // namespace arith
