#include "doctest.h"

#include <cmath>
#include <random>

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

TEST_CASE("product constant against independent oracle") {
  // prod_{p <= 1e4} lambda_0(E_p), frozen from a high-precision run
  CHECK(ctx13().product_constant() ==
        doctest::Approx(1.5815990683807484).epsilon(1e-11));
  CHECK(ctx13().product_remainder() > 0.0);
  CHECK(ctx13().product_remainder() < 1e-3);
  ProductConstant pc = product_constant(kP13, 10000);
  CHECK(pc.value == ctx13().product_constant());
}

TEST_CASE("eigenvalue product formula and sign law") {
  const GlobalContext& ctx = ctx13();
  double C = ctx.product_constant();
  CHECK(ctx.eigenvalue_at(1) == C);
  // lambda_2 = C * lambda_1(E_2)/lambda_0(E_2)
  double gamma2 = ctx.local_for_prime(2).enumeration[1] /
                  ctx.local_for_prime(2).lambda_plus;
  CHECK(ctx.eigenvalue_at(2) == doctest::Approx(C * gamma2).epsilon(1e-15));
  // multiplicativity across coprime factors
  CHECK(ctx.eigenvalue_at(6) * C ==
        doctest::Approx(ctx.eigenvalue_at(2) * ctx.eigenvalue_at(3))
            .epsilon(1e-14));
  // sign of lambda_n is (-1)^omega(n), omega = distinct prime factors
  CHECK(ctx.eigenvalue_at(2) < 0.0);
  CHECK(ctx.eigenvalue_at(6) > 0.0);
  CHECK(ctx.eigenvalue_at(30) < 0.0);
  CHECK(ctx.eigenvalue_at(4) < 0.0);
  CHECK(ctx.eigenvalue_at(12) > 0.0);
  CHECK_THROWS_AS(ctx.eigenvalue_at(0), range_error);
  CHECK_THROWS_AS(ctx.eigenvalue_at(10001), range_error);
}

TEST_CASE("ledger completeness certificate") {
  const GlobalContext& ctx = ctx13();
  double alpha = ctx.decay_exponent();
  CHECK(alpha == doctest::Approx(2.0));
  double star = ctx.tail_constant() * std::pow(2000.0, -alpha);
  EigenvalueLedger ledger = enumerate_above(ctx, star * 1.000001);
  CHECK(ledger.n_enum >= 1990);
  CHECK(ledger.n_enum <= 2000);
  CHECK(ledger.entries.size() == ledger.n_enum);
  CHECK(ledger.tail_constant >= ledger.product_constant);
  // every |lambda_n| for n <= N_enum is below B n^-alpha
  for (const auto& e : ledger.entries)
    CHECK(std::fabs(e.value) <=
          ledger.tail_constant * std::pow(double(e.n), -alpha) * (1 + 1e-12));
  // branches are complete above the threshold: values just above the
  // threshold must exceed it, and the count above 4*star is stable when
  // recomputed from a deeper ledger
  EigenvalueLedger deeper = enumerate_above(ctx, star / 4.0);
  auto count_above = [](const EigenvalueLedger& l, double cut) {
    std::size_t c = 0;
    for (const auto& e : l.entries)
      if (std::fabs(e.value) > cut) ++c;
    return c;
  };
  CHECK(count_above(ledger, 2.0 * star) == count_above(deeper, 2.0 * star));
  CHECK_THROWS_AS(enumerate_above(ctx, -1.0), parameter_error);
  CHECK_THROWS_AS(enumerate_above(ctx, star / 1e6), capacity_error);
}

TEST_CASE("counting curve and fitted exponent") {
  const GlobalContext& ctx = ctx13();
  double star = ctx.tail_constant() * std::pow(8000.0, -2.0);
  EigenvalueLedger ledger = enumerate_above(ctx, star);
  std::vector<double> grid;
  for (int i = 0; i <= 12; ++i) grid.push_back(1e4 * std::pow(10.0, i / 4.0));
  CountingCurve curve = counting(ledger, grid);
  REQUIRE(curve.x.size() == grid.size());
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    CHECK(curve.mu_plus[i] <= curve.mu_plus[i + 1]);
    CHECK(curve.mu_minus[i] <= curve.mu_minus[i + 1]);
  }
  // mu_pm(x) ~ kappa^{1/2} x^{1/2}
  CHECK(curve.slope_plus == doctest::Approx(0.5).epsilon(0.1));
  CHECK(curve.slope_minus == doctest::Approx(0.5).epsilon(0.1));
  CHECK_THROWS_AS(counting(ledger, {1e12}), range_error);
}

TEST_CASE("truncated global section") {
  SymMatrix m = truncated_global(8, kP13);
  CHECK(m.dim() == 8);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(m(3, 5) == doctest::Approx(entry(4, 6, kP13)).epsilon(1e-16));
  CHECK_THROWS_AS(truncated_global(5000, kP13), capacity_error);
}

TEST_CASE("ledger cross-validates against a dense section") {
  const GlobalContext& ctx = ctx13();
  double star = ctx.tail_constant() * std::pow(3000.0, -2.0);
  EigenvalueLedger ledger = enumerate_above(ctx, star);
  CrossValidationReport rep = cross_validate(ledger, 256, 5);
  CHECK(rep.rows.size() == 5);
  CHECK(rep.all_signs_match);
  CHECK(rep.max_rel_deviation <= 0.02);
  CHECK(rep.rows[0].n == 1);  // the positive leader comes from n = 1
}
