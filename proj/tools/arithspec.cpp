#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arith/asymptotics.hpp"
#include "arith/beurling.hpp"
#include "arith/errors.hpp"
#include "arith/global.hpp"
#include "arith/local.hpp"
#include "arith/parallel.hpp"
#include "arith/params.hpp"
#include "arith/validate.hpp"

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Common {
  double t = 1.0, rho = 3.0;
  double sigma = 0.0, tau = 1.0;
  bool legacy = false;
  int threads = 0;
  std::string out;

  arith::SpectralParams params() const {
    return legacy ? arith::SpectralParams::legacy(sigma, tau)
                  : arith::SpectralParams::indefinite(t, rho);
  }

  std::string config_line(const std::string& op) const {
    std::ostringstream os;
    os << "op=" << op << " " << params().describe();
    std::string body = os.str();
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016" PRIx64, fnv1a(body));
    return body + " config=" + hash;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--t", c.t, "exponent t (indefinite mode)");
  app->add_option("--rho", c.rho, "exponent rho (indefinite mode)");
  app->add_flag("--legacy", c.legacy, "use the legacy-definite (sigma,tau) mode");
  app->add_option("--sigma", c.sigma, "legacy sigma");
  app->add_option("--tau", c.tau, "legacy tau");
  app->add_option("--threads", c.threads, "worker thread cap (0 = default)");
  app->add_option("--out", c.out, "output path (default: stdout)");
}

class Out {
 public:
  explicit Out(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw arith::parameter_error("cannot open output: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> parse_grid(const std::string& spec, bool log_spaced) {
  double lo = 0, hi = 0;
  int n = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 1 ||
      !(hi >= lo))
    throw arith::parameter_error("grid must be lo:hi:count with hi >= lo");
  std::vector<double> g;
  for (int i = 0; i < n; ++i) {
    double u = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    g.push_back(log_spaced ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u);
  }
  return g;
}

int run(int argc, char** argv) {
  CLI::App app{"spectral toolkit for arithmetical matrices E = "
               "{[n,m]^t/(nm)^((rho+t)/2)}"};
  app.require_subcommand(1);
  Common c;

  auto* local = app.add_subcommand("local", "spectrum of one local matrix E_p");
  std::uint64_t local_p = 2;
  double local_eps = 1e-10;
  std::size_t local_kmax = 8;
  add_common(local, c);
  local->add_option("--p", local_p, "prime p")->required();
  local->add_option("--eps", local_eps, "truncation bound target");
  local->add_option("--kmax", local_kmax, "eigenvalues to enumerate");

  auto* global = app.add_subcommand("global", "eigenvalue ledger of E");
  double lambda_star = 1e-6;
  std::uint64_t pmax = 100000;
  add_common(global, c);
  global->add_option("--lambda-star", lambda_star,
                     "completeness threshold")->required();
  global->add_option("--pmax", pmax, "sieve / prime budget");

  auto* count = app.add_subcommand("counting", "branch counting functions");
  std::string x_grid = "10:1000:20";
  add_common(count, c);
  count->add_option("--lambda-star", lambda_star, "ledger threshold")
      ->required();
  count->add_option("--pmax", pmax, "sieve / prime budget");
  count->add_option("--x-grid", x_grid, "log-spaced grid lo:hi:count");

  auto* kap = app.add_subcommand("kappa", "asymptotic prefactor estimates");
  std::uint64_t kappa_n = 100000;
  add_common(kap, c);
  kap->add_option("--pmax", pmax, "sieve / prime budget");
  kap->add_option("--n-enum", kappa_n, "ledger depth used for the fits");

  auto* zeta = app.add_subcommand("zeta", "spectral zeta profile");
  std::string s_grid = "0.6:2.0:15";
  add_common(zeta, c);
  zeta->add_option("--pmax", pmax, "sieve / prime budget");
  zeta->add_option("--s-grid", s_grid, "grid lo:hi:count");

  auto* beu = app.add_subcommand("beurling", "spectral Beurling system");
  double beu_x = 1e6;
  std::string beu_ratios;
  std::string beu_grid = "1000:1000000:16";
  add_common(beu, c);
  beu->add_option("--pmax", pmax, "prime budget for the generators");
  beu->add_option("--x", beu_x, "generate integers up to x");
  beu->add_option("--x-grid", beu_grid, "counting grid lo:hi:count");
  beu->add_option("--ratios-out", beu_ratios, "CSV of generator ratios");

  auto* val = app.add_subcommand("validate", "exact-identity and invariant suite");
  add_common(val, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (c.threads > 0) arith::set_thread_cap(c.threads);
  arith::SpectralParams params = c.params();

  if (*local) {
    arith::LocalSpectrum ls = arith::local_spectrum(
        static_cast<double>(local_p), params, local_eps, local_kmax);
    json j;
    j["config"] = c.config_line("local");
    j["p"] = local_p;
    j["K"] = ls.K;
    j["trunc_bound"] = fmt17(ls.trunc_bound);
    j["lambda_plus"] = fmt17(ls.lambda_plus);
    j["resolved"] = ls.resolved;
    for (double v : ls.lambda_minus) j["lambda_minus"].push_back(fmt17(v));
    for (double v : ls.enumeration) j["enumeration"].push_back(fmt17(v));
    Out out(c.out);
    out.stream() << j.dump(2) << "\n";
  } else if (*global) {
    arith::GlobalContext ctx(params, pmax);
    arith::EigenvalueLedger ledger = arith::enumerate_above(ctx, lambda_star);
    Out out(c.out);
    auto& os = out.stream();
    os << "# " << c.config_line("global") << "\n";
    os << "# C=" << fmt17(ledger.product_constant)
       << " B=" << fmt17(ledger.tail_constant)
       << " threshold=" << fmt17(ledger.threshold)
       << " alpha=" << fmt17(ledger.decay_exponent)
       << " N_enum=" << ledger.n_enum << "\n";
    os << "n,value,omega\n";
    for (const auto& e : ledger.entries)
      os << e.n << "," << fmt17(e.value) << "," << e.omega << "\n";
  } else if (*count) {
    arith::GlobalContext ctx(params, pmax);
    arith::EigenvalueLedger ledger = arith::enumerate_above(ctx, lambda_star);
    arith::CountingCurve curve =
        arith::counting(ledger, parse_grid(x_grid, true));
    Out out(c.out);
    auto& os = out.stream();
    os << "# " << c.config_line("counting") << "\n";
    os << "# slope_plus=" << fmt17(curve.slope_plus)
       << " prefactor_plus=" << fmt17(curve.prefactor_plus)
       << " slope_minus=" << fmt17(curve.slope_minus)
       << " prefactor_minus=" << fmt17(curve.prefactor_minus) << "\n";
    os << "x,mu_plus,mu_minus\n";
    for (std::size_t i = 0; i < curve.x.size(); ++i)
      os << fmt17(curve.x[i]) << "," << curve.mu_plus[i] << ","
         << curve.mu_minus[i] << "\n";
  } else if (*kap) {
    arith::GlobalContext ctx(params, pmax);
    if (kappa_n > pmax)
      throw arith::parameter_error("kappa: --n-enum must not exceed --pmax");
    double star = ctx.tail_constant() *
                  std::pow(static_cast<double>(kappa_n), -ctx.decay_exponent());
    arith::EigenvalueLedger ledger = arith::enumerate_above(ctx, star * 1.0000001);
    arith::KappaEstimate est = arith::kappa_estimate(
        ctx, ledger, ledger.n_enum / 8, ledger.n_enum / 3);
    json j;
    j["config"] = c.config_line("kappa");
    j["kappa_product"] = fmt17(est.kappa_product);
    j["kappa_fit_plus"] = fmt17(est.kappa_fit_plus);
    j["kappa_fit_minus"] = fmt17(est.kappa_fit_minus);
    j["product_remainder"] = fmt17(est.product_remainder);
    Out out(c.out);
    out.stream() << j.dump(2) << "\n";
  } else if (*zeta) {
    arith::GlobalContext ctx(params, pmax);
    arith::ZetaProfile prof =
        arith::spectral_zeta(ctx, parse_grid(s_grid, false));
    Out out(c.out);
    auto& os = out.stream();
    os << "# " << c.config_line("zeta") << "\n";
    os << "# max_factor_tail=" << fmt17(prof.max_factor_tail)
       << " max_prime_tail=" << fmt17(prof.max_prime_tail) << "\n";
    os << "s,f,h,f_tilde,h_tilde\n";
    for (std::size_t i = 0; i < prof.s.size(); ++i)
      os << fmt17(prof.s[i]) << "," << fmt17(prof.f[i]) << ","
         << fmt17(prof.h[i]) << "," << fmt17(prof.f_tilde[i]) << ","
         << fmt17(prof.h_tilde[i]) << "\n";
  } else if (*beu) {
    arith::GlobalContext ctx(params, pmax);
    arith::GammaRatios ratios = arith::spectral_beurling_primes(ctx);
    if (!beu_ratios.empty()) {
      std::ofstream rs(beu_ratios);
      if (!rs)
        throw arith::parameter_error("cannot open output: " + beu_ratios);
      rs << "# " << c.config_line("beurling-ratios") << "\n";
      rs << "p,r,deviation\n";
      for (std::size_t i = 0; i < ratios.primes.size(); ++i)
        rs << ratios.primes[i] << "," << fmt17(ratios.r[i]) << ","
           << fmt17(ratios.deviation[i]) << "\n";
    }
    std::vector<double> gens;
    for (double r : ratios.r)
      if (r <= beu_x) gens.push_back(r);
    arith::BeurlingSystem sys = arith::generate_integers(gens, beu_x);
    arith::BeurlingCounts counts =
        arith::beurling_counting(sys, parse_grid(beu_grid, true));
    Out out(c.out);
    auto& os = out.stream();
    os << "# " << c.config_line("beurling") << "\n";
    os << "# generators=" << gens.size() << " integers=" << sys.integers.size()
       << " collisions=" << sys.collision_warnings << "\n";
    os << "x,N,M\n";
    for (std::size_t i = 0; i < counts.x.size(); ++i)
      os << fmt17(counts.x[i]) << "," << counts.N[i] << ","
         << fmt17(counts.M[i]) << "\n";
  } else if (*val) {
    arith::ValidationReport rep = arith::run_validation(params);
    Out out(c.out);
    auto& os = out.stream();
    os << "# " << c.config_line("validate") << "\n";
    for (const auto& chk : rep.checks)
      os << (chk.pass ? "PASS" : "FAIL") << " " << chk.name
         << " metric=" << fmt17(chk.metric) << " limit=" << fmt17(chk.limit)
         << "\n";
    os << (rep.all_pass() ? "OK" : "FAILED") << "\n";
    return rep.all_pass() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const arith::parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const arith::range_error& e) {
    std::cerr << "range error: " << e.what() << "\n";
    return 2;
  } catch (const arith::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const arith::accuracy_error& e) {
    std::cerr << "accuracy error: " << e.what()
              << " (achieved " << fmt17(e.achieved_bound) << ")\n";
    return 3;
  } catch (const arith::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
