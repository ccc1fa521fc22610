#include "arith/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "arith/errors.hpp"

namespace arith {

double hs_norm(const SymMatrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

namespace {

// One cyclic-by-row Jacobi pass. Rotations are applied when the off-diagonal
// entry is significant relative to sqrt(|a_pp a_qq|); this relative criterion
// keeps small eigenvalues of graded matrices accurate. Returns the number of
// rotations performed.
std::size_t jacobi_sweep(std::vector<double>& a, std::vector<double>* v,
                         std::size_t n) {
  constexpr double kRel = 5.0e-17;
  std::size_t rotations = 0;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      double apq = a[p * n + q];
      double app = a[p * n + p];
      double aqq = a[q * n + q];
      double thresh = kRel * std::sqrt(std::fabs(app) * std::fabs(aqq));
      if (std::fabs(apq) <= thresh + 1e-306) continue;
      ++rotations;
      double theta = (aqq - app) / (2.0 * apq);
      double t;
      if (std::fabs(theta) > 1e154) {
        t = 1.0 / (2.0 * theta);  // avoid overflow in theta^2
      } else {
        t = ((theta >= 0.0) ? 1.0 : -1.0) /
            (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
      }
      double c = 1.0 / std::sqrt(t * t + 1.0);
      double s = t * c;
      double tau = s / (1.0 + c);
      a[p * n + p] = app - t * apq;
      a[q * n + q] = aqq + t * apq;
      a[p * n + q] = 0.0;
      a[q * n + p] = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        double aip = a[i * n + p];
        double aiq = a[i * n + q];
        a[i * n + p] = aip - s * (aiq + tau * aip);
        a[i * n + q] = aiq + s * (aip - tau * aiq);
        a[p * n + i] = a[i * n + p];
        a[q * n + i] = a[i * n + q];
      }
      if (v) {
        for (std::size_t i = 0; i < n; ++i) {
          double vip = (*v)[i * n + p];
          double viq = (*v)[i * n + q];
          (*v)[i * n + p] = vip - s * (viq + tau * vip);
          (*v)[i * n + q] = viq + s * (vip - tau * viq);
        }
      }
    }
  }
  return rotations;
}

void check_input(const SymMatrix& m, double tol) {
  if (m.dim() < 1) throw parameter_error("sym_eig: dimension must be >= 1");
  if (!(tol >= 1e-14 && tol <= 1e-6))
    throw parameter_error("sym_eig: tol must lie in [1e-14, 1e-6]");
  for (double x : m.data())
    if (!std::isfinite(x))
      throw parameter_error("sym_eig: non-finite matrix entry");
}

std::vector<std::size_t> sorted_order(const std::vector<double>& diag) {
  std::vector<std::size_t> order(diag.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return diag[i] > diag[j];  // ties keep original index order
  });
  return order;
}

void run_sweeps(std::vector<double>& a, std::vector<double>* v, std::size_t n,
                int max_sweeps, double norm_f, double tol) {
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (jacobi_sweep(a, v, n) == 0) return;
  }
  // Sweep budget exhausted: acceptable only if the off-diagonal part already
  // meets the residual contract.
  double off = 0.0;
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a[p * n + q] * a[p * n + q];
  off = std::sqrt(off);
  if (off > tol * norm_f)
    throw numeric_error("sym_eig: no convergence after " +
                            std::to_string(max_sweeps) + " sweeps",
                        off);
}

}  // namespace

EigenDecomposition sym_eig(const SymMatrix& m, double tol, int max_sweeps) {
  check_input(m, tol);
  const std::size_t n = m.dim();
  const double norm_f = hs_norm(m);
  std::vector<double> a = m.data();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  run_sweeps(a, &v, n, max_sweeps, norm_f, tol);

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  auto order = sorted_order(diag);

  EigenDecomposition out;
  out.dim = n;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t src = order[col];
    out.values[col] = diag[src];
    // sign convention: largest-magnitude component positive
    std::size_t imax = 0;
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double w = std::fabs(v[i * n + src]);
      if (w > vmax) {
        vmax = w;
        imax = i;
      }
    }
    double sign = (v[imax * n + src] >= 0.0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i)
      out.vectors[col * n + i] = sign * v[i * n + src];
  }

  // Residual check against the original matrix.
  double worst = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double avi = 0.0;
      for (std::size_t k = 0; k < n; ++k) avi += m(i, k) * out.vectors[col * n + k];
      double r = avi - out.values[col] * out.vectors[col * n + i];
      r2 += r * r;
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  out.residual = worst;
  if (worst > tol * norm_f && norm_f > 0.0)
    throw numeric_error("sym_eig: residual contract violated", worst);
  return out;
}

std::vector<double> sym_eigvalues(const SymMatrix& m, double tol,
                                  int max_sweeps) {
  check_input(m, tol);
  const std::size_t n = m.dim();
  std::vector<double> a = m.data();
  run_sweeps(a, nullptr, n, max_sweeps, hs_norm(m), tol);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  auto order = sorted_order(diag);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = diag[order[i]];
  return out;
}

}  // namespace arith
