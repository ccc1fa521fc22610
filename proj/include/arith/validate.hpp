#pragma once

#include <string>
#include <vector>

#include "arith/params.hpp"

namespace arith {

struct ValidationCheck {
  std::string name;
  bool pass = false;
  double metric = 0.0;  // measured deviation
  double limit = 0.0;   // allowed deviation
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
};

// Exact-identity and invariant suite: factorization and self-similarity of
// the local matrices, closed-form trace/HS sums, rank-2 displacement bounds,
// eigensolver contracts, ledger multiplicativity and sign law, zeta and
// kappa consistency, generalized-integer oracles, and parallel/serial
// agreement. Runs in seconds.
ValidationReport run_validation(const SpectralParams& params);

}  // namespace arith
