#pragma once

#include <cstddef>
#include <vector>

namespace arith {

// Dense symmetric matrix; writes go through set() which mirrors (j,k)/(k,j).
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t j, std::size_t k) const {
    return a_[j * dim_ + k];
  }
  void set(std::size_t j, std::size_t k, double v) {
    a_[j * dim_ + k] = v;
    a_[k * dim_ + j] = v;
  }
  const std::vector<double>& data() const { return a_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> a_;
};

struct EigenDecomposition {
  std::vector<double> values;   // non-increasing
  std::vector<double> vectors;  // column-major, column i pairs with values[i]
  double residual = 0.0;        // max_i ||A v_i - lambda_i v_i||_2
  std::size_t dim = 0;

  double vector(std::size_t row, std::size_t col) const {
    return vectors[col * dim + row];
  }
};

// Frobenius norm.
double hs_norm(const SymMatrix& a);

// Cyclic-by-row Jacobi. Deterministic: fixed sweep order, ties in the final
// ordering broken by original index, eigenvector sign fixed by making the
// largest-magnitude component positive.
EigenDecomposition sym_eig(const SymMatrix& a, double tol = 1e-11,
                           int max_sweeps = 64);

// Eigenvalues only (same rotations, no vector accumulation).
std::vector<double> sym_eigvalues(const SymMatrix& a, double tol = 1e-11,
                                  int max_sweeps = 64);

}  // namespace arith
