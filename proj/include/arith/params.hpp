#pragma once

#include <string>

namespace arith {

enum class SpectralMode { Indefinite, LegacyDefinite };

// Exponent pair for the matrix E = { [n,m]^t / (nm)^{(rho+t)/2} } together
// with the derived quantities used throughout.
//
// Indefinite mode requires t > 0 and rho > t + 1; the legacy-definite mode
// is parametrised by (sigma, tau) with tau > 0, rho = tau - 2*sigma > 0 and
// tau - sigma > 1/2, and corresponds to t = -tau.
struct SpectralParams {
  double t = 0.0;
  double rho = 0.0;
  double sigma = 0.0;  // -(rho+t)/2
  double tau = 0.0;    // -t
  double delta = 0.0;  // min(rho - t, t); meaningful in indefinite mode
  SpectralMode mode = SpectralMode::Indefinite;

  static SpectralParams indefinite(double t, double rho);
  static SpectralParams legacy(double sigma, double tau);

  bool is_indefinite() const { return mode == SpectralMode::Indefinite; }

  // rho - t, the decay exponent of the eigenvalue branches.
  double branch_exponent() const { return rho - t; }

  std::string describe() const;
};

}  // namespace arith
