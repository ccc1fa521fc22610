#include "arith/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "arith/errors.hpp"

namespace arith {

SpectralParams SpectralParams::indefinite(double t, double rho) {
  if (!(t > 0.0))
    throw parameter_error("indefinite mode requires t > 0 (got t = " +
                          std::to_string(t) + ")");
  if (!(rho > t + 1.0))
    throw parameter_error("indefinite mode requires rho > t + 1 (got rho = " +
                          std::to_string(rho) + ", t = " + std::to_string(t) +
                          ")");
  SpectralParams p;
  p.t = t;
  p.rho = rho;
  p.sigma = -(rho + t) / 2.0;
  p.tau = -t;
  p.delta = std::min(rho - t, t);
  p.mode = SpectralMode::Indefinite;
  return p;
}

SpectralParams SpectralParams::legacy(double sigma, double tau) {
  if (!(tau > 0.0))
    throw parameter_error("legacy mode requires tau > 0");
  double rho = tau - 2.0 * sigma;
  if (!(rho > 0.0))
    throw parameter_error("legacy mode requires rho = tau - 2*sigma > 0");
  if (!(tau - sigma > 0.5))
    throw parameter_error("legacy mode requires tau - sigma > 1/2");
  SpectralParams p;
  p.t = -tau;
  p.rho = rho;
  p.sigma = sigma;
  p.tau = tau;
  p.delta = rho - p.t;  // only the branch decay matters here
  p.mode = SpectralMode::LegacyDefinite;
  return p;
}

std::string SpectralParams::describe() const {
  std::ostringstream os;
  if (is_indefinite())
    os << "indefinite t=" << t << " rho=" << rho;
  else
    os << "legacy sigma=" << sigma << " tau=" << tau << " (rho=" << rho << ")";
  return os.str();
}

}  // namespace arith
