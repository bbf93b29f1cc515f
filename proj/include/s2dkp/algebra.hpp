#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace s2dkp {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ComplexMatrix adjoint() const;

  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const ComplexMatrix& block);

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// a b - b a for square matrices of equal size.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/**
 * Duffin-Kemmer beta matrices in the cyclic representation, 1-3-3-3 block
 * layout (Phi_0 | Phi | E | H).
 */
struct DkpBasis {
  ComplexMatrix beta0, beta1, beta2, beta3;
  ComplexMatrix e1, e2, e3;        // 1x3 rows
  ComplexMatrix tau1, tau2, tau3;  // 3x3

  const ComplexMatrix& beta(int i) const;
  const ComplexMatrix& e(int i) const;
  const ComplexMatrix& tau(int i) const;
};

DkpBasis build_basis();

/// blockdiag(0, tau3, tau3, tau3).
ComplexMatrix spin_projection_s3(const DkpBasis& basis);

/// max |[beta1, beta2] + i S3|.
double verify_j12(const DkpBasis& basis);

struct TauCommutatorDeviations {
  double tau12 = 0.0;  // |[tau1, tau2] - i tau3|
  double tau23 = 0.0;  // |[tau2, tau3] - i tau1|
  double tau31 = 0.0;  // |[tau3, tau1] - i tau2|

  double max() const;
};

TauCommutatorDeviations verify_tau_algebra(const DkpBasis& basis);

}  // namespace s2dkp
