#include "arith/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "arith/asymptotics.hpp"
#include "arith/beurling.hpp"
#include "arith/errors.hpp"
#include "arith/global.hpp"
#include "arith/linalg.hpp"
#include "arith/local.hpp"
#include "arith/numtheory.hpp"

namespace arith {

bool ValidationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void add(ValidationReport& rep, const std::string& name, double metric,
         double limit) {
  rep.checks.push_back({name, metric <= limit, metric, limit});
}

}  // namespace

ValidationReport run_validation(const SpectralParams& params) {
  ValidationReport rep;
  const std::uint64_t test_primes[] = {2, 3, 5, 97, 997};

  {
    double dev = 0.0;
    for (std::uint64_t p : test_primes)
      dev = std::max(dev, verify_factorization(static_cast<double>(p), params, 24));
    add(rep, "local factorization identity", dev, 1e-15);
  }
  {
    double dev = 0.0;
    for (std::uint64_t p : test_primes)
      dev = std::max(dev,
                     verify_self_similarity(static_cast<double>(p), params, 24));
    add(rep, "local self-similarity", dev, 1e-13);
  }
  {
    double dev = 0.0;
    for (std::uint64_t p : test_primes) {
      double pd = static_cast<double>(p);
      std::size_t K = 48;
      auto [m, tb] = build_local_matrix(pd, params, K);
      double trace = 0.0, hs2 = 0.0;
      for (std::size_t j = 0; j < K; ++j) {
        trace += m(j, j);
        for (std::size_t k = 0; k < K; ++k) hs2 += m(j, k) * m(j, k);
      }
      double trace_tail = std::pow(pd, -params.rho * static_cast<double>(K)) /
                          (1.0 - std::pow(pd, -params.rho));
      double tc = local_trace_closed_form(pd, params);
      double hc = local_hs_closed_form(pd, params);
      dev = std::max(dev, std::fabs(trace + trace_tail - tc) / tc);
      dev = std::max(dev, std::fabs(hs2 + tb * tb - hc * hc) / (hc * hc));
    }
    add(rep, "trace/HS closed forms", dev, 1e-12);
  }
  if (params.is_indefinite()) {
    double worst = 0.0;
    for (std::uint64_t p = 2; p <= 199; ++p) {
      bool prime = true;
      for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) prime = false;
      if (!prime) continue;
      double pd = static_cast<double>(p);
      LocalSpectrum ls = local_spectrum(pd, params, 1e-12, 1);
      Rank2Model model = rank2_model(pd, params);
      double allow = 2.0 * std::pow(pd, -params.rho) *
                     local_hs_closed_form(pd, params);
      double dev = std::max(std::fabs(ls.lambda_plus - model.lambda_plus),
                            std::fabs(ls.enumeration[1] - model.lambda_minus));
      worst = std::max(worst, dev / allow);
    }
    add(rep, "rank-2 displacement bound", worst, 1.0);
  }
  {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    SymMatrix a(32);
    for (std::size_t j = 0; j < 32; ++j)
      for (std::size_t k = j; k < 32; ++k) a.set(j, k, uni(rng));
    EigenDecomposition eig = sym_eig(a, 1e-11);
    add(rep, "eigensolver residual contract",
        eig.residual / (1e-11 * hs_norm(a)), 1.0);
    double ortho = 0.0;
    for (std::size_t i = 0; i < 32; ++i)
      for (std::size_t j = 0; j < 32; ++j) {
        double dot = 0.0;
        for (std::size_t r = 0; r < 32; ++r)
          dot += eig.vector(r, i) * eig.vector(r, j);
        ortho = std::max(ortho, std::fabs(dot - (i == j ? 1.0 : 0.0)));
      }
    add(rep, "eigenvector orthogonality", ortho, 1e-12);
  }
  {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::uint64_t> pick(1, 60);
    double dev = 0.0;
    for (int it = 0; it < 200; ++it) {
      std::uint64_t n = pick(rng), m = pick(rng), k = 1 + rng() % 7;
      double want = std::pow(static_cast<double>(k), -params.rho) *
                    entry(n, m, params);
      double got = entry(k * n, k * m, params);
      dev = std::max(dev, std::fabs(got - want) / std::fabs(want));
    }
    add(rep, "entry homogeneity k^-rho", dev, 1e-13);
  }

  GlobalContext ctx(params, 3000, 1e-12);
  double alpha = ctx.decay_exponent();
  double lambda_star =
      ctx.tail_constant() * std::pow(3000.0, -alpha) * 1.0000001;
  EigenvalueLedger ledger = enumerate_above(ctx, lambda_star);
  {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> pick(2, 54);
    double dev = 0.0;
    for (int it = 0; it < 500; ++it) {
      std::uint64_t a = pick(rng), b = pick(rng);
      if (gcd_u64(a, b) != 1 || a * b > ledger.n_enum) continue;
      double lhs = ledger.value_at(a * b) * ledger.product_constant;
      double rhs = ledger.value_at(a) * ledger.value_at(b);
      dev = std::max(dev, std::fabs(lhs - rhs) / std::fabs(rhs));
    }
    add(rep, "coprime multiplicativity", dev, 1e-12);
  }
  if (params.is_indefinite()) {
    std::size_t bad = 0;
    for (const auto& e : ledger.entries) {
      int sign = e.omega % 2 == 0 ? 1 : -1;
      if ((e.value > 0.0) != (sign > 0)) ++bad;
    }
    add(rep, "sign law (-1)^omega(n)", static_cast<double>(bad), 0.0);
  }
  {
    CrossValidationReport cv = cross_validate(ledger, 256, 5);
    add(rep, "ledger vs 256-section extremes", cv.max_rel_deviation, 0.02);
    add(rep, "ledger vs section sign match",
        cv.all_signs_match ? 0.0 : 1.0, 0.0);
  }
  if (params.is_indefinite()) {
    double d = params.rho - params.t;
    double dev = 0.0;
    for (double s : {0.8, 1.0, 1.5}) {
      ZetaProfile prof = spectral_zeta(ctx, {s});
      double direct = f_tilde_direct(ctx, s) * riemann_zeta(d * s);
      dev = std::max(dev, std::fabs(direct - prof.f[0]) / prof.f[0]);
    }
    add(rep, "zeta profile vs direct factor product", dev, 2e-4);
    KappaEstimate kap =
        kappa_estimate(ctx, ledger, ledger.n_enum / 8, ledger.n_enum / 3);
    double via_ftilde =
        std::pow(0.5 * f_tilde_direct(ctx, 1.0 / d), d);
    add(rep, "kappa product vs f~ at the abscissa",
        std::fabs(kap.kappa_product - via_ftilde) / via_ftilde, 1e-8);
  }
  {
    // 5-smooth oracle with classical Mobius
    BeurlingSystem sys = generate_integers({2.0, 3.0, 5.0}, 10000.0);
    std::vector<std::pair<double, int>> oracle;
    for (std::uint64_t a = 1; a <= 10000; a *= 2)
      for (std::uint64_t b = 1; a * b <= 10000; b *= 3)
        for (std::uint64_t c = 1; a * b * c <= 10000; c *= 5) {
          std::uint64_t n = a * b * c;
          int omega_n = (a > 1) + (b > 1) + (c > 1);
          bool squarefree = a <= 2 && b <= 3 && c <= 5;
          int mu = squarefree ? (omega_n % 2 ? -1 : 1) : 0;
          oracle.push_back({static_cast<double>(n), mu});
        }
    std::sort(oracle.begin(), oracle.end());
    double bad = sys.integers.size() != oracle.size() ? 1.0 : 0.0;
    if (bad == 0.0)
      for (std::size_t i = 0; i < oracle.size(); ++i)
        if (sys.integers[i] != oracle[i].first ||
            sys.mobius[i] != oracle[i].second)
          bad = 1.0;
    add(rep, "5-smooth generator oracle", bad, 0.0);
  }
  {
    std::vector<std::uint64_t> primes = ctx.primes();
    std::vector<std::size_t> depth(primes.size(), 2);
    auto par = local_spectra_sweep(primes, params, 1e-10, depth);
    auto ser = local_spectra_sweep_serial(primes, params, 1e-10, depth);
    double bad = 0.0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (par[i].enumeration != ser[i].enumeration ||
          par[i].K != ser[i].K || par[i].trunc_bound != ser[i].trunc_bound)
        bad = 1.0;
    add(rep, "parallel sweep matches serial bitwise", bad, 0.0);
  }
  return rep;
}

}  // namespace arith
