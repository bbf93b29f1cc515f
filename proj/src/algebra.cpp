#include "s2dkp/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "s2dkp/errors.hpp"

namespace s2dkp {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

constexpr Complex kI{0.0, 1.0};

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix out(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    std::size_t j = 0;
    for (const auto& x : row) out(i, j++) = x;
    ++i;
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

void ComplexMatrix::set_block(std::size_t row, std::size_t col, const ComplexMatrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block does not fit");
  }
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(row + i, col + j) = block(i, j);
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  ComplexMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "multiply: inner dimensions differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "compare");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "commutator needs square matrices of equal size");
  }
  return a * b - b * a;
}

const ComplexMatrix& DkpBasis::beta(int i) const {
  switch (i) {
    case 0: return beta0;
    case 1: return beta1;
    case 2: return beta2;
    case 3: return beta3;
    default: throw Error(ErrorCode::InvalidArgument, "beta index must be 0..3");
  }
}

const ComplexMatrix& DkpBasis::e(int i) const {
  switch (i) {
    case 1: return e1;
    case 2: return e2;
    case 3: return e3;
    default: throw Error(ErrorCode::InvalidArgument, "e index must be 1..3");
  }
}

const ComplexMatrix& DkpBasis::tau(int i) const {
  switch (i) {
    case 1: return tau1;
    case 2: return tau2;
    case 3: return tau3;
    default: throw Error(ErrorCode::InvalidArgument, "tau index must be 1..3");
  }
}

DkpBasis build_basis() {
  const double h = 1.0 / std::sqrt(2.0);
  DkpBasis b;
  b.e1 = ComplexMatrix::from_rows({{-kI * h, 0.0, kI * h}});
  b.e2 = ComplexMatrix::from_rows({{h, 0.0, h}});
  b.e3 = ComplexMatrix::from_rows({{0.0, kI, 0.0}});
  b.tau1 = ComplexMatrix::from_rows({{0.0, h, 0.0}, {h, 0.0, h}, {0.0, h, 0.0}});
  b.tau2 = ComplexMatrix::from_rows({{0.0, -kI * h, 0.0}, {kI * h, 0.0, -kI * h}, {0.0, kI * h, 0.0}});
  b.tau3 = ComplexMatrix::from_rows({{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}});

  // Block offsets for the 1-3-3-3 split.
  constexpr std::size_t kPhi0 = 0, kPhi = 1, kE = 4, kH = 7;
  const ComplexMatrix eye3 = ComplexMatrix::identity(3);

  b.beta0 = ComplexMatrix(10, 10);
  b.beta0.set_block(kPhi, kE, kI * eye3);
  b.beta0.set_block(kE, kPhi, -kI * eye3);

  auto spatial = [&](const ComplexMatrix& e, const ComplexMatrix& tau) {
    ComplexMatrix beta(10, 10);
    beta.set_block(kPhi0, kE, e);
    beta.set_block(kPhi, kH, tau);
    beta.set_block(kE, kPhi0, Complex(-1.0) * e.adjoint());
    beta.set_block(kH, kPhi, Complex(-1.0) * tau);
    return beta;
  };
  b.beta1 = spatial(b.e1, b.tau1);
  b.beta2 = spatial(b.e2, b.tau2);
  b.beta3 = spatial(b.e3, b.tau3);
  return b;
}

ComplexMatrix spin_projection_s3(const DkpBasis& basis) {
  ComplexMatrix s3(10, 10);
  s3.set_block(1, 1, basis.tau3);
  s3.set_block(4, 4, basis.tau3);
  s3.set_block(7, 7, basis.tau3);
  return s3;
}

double verify_j12(const DkpBasis& basis) {
  const ComplexMatrix j12 = commutator(basis.beta1, basis.beta2);
  return max_abs_diff(j12, -kI * spin_projection_s3(basis));
}

double TauCommutatorDeviations::max() const { return std::max({tau12, tau23, tau31}); }

TauCommutatorDeviations verify_tau_algebra(const DkpBasis& basis) {
  TauCommutatorDeviations d;
  d.tau12 = max_abs_diff(commutator(basis.tau1, basis.tau2), kI * basis.tau3);
  d.tau23 = max_abs_diff(commutator(basis.tau2, basis.tau3), kI * basis.tau1);
  d.tau31 = max_abs_diff(commutator(basis.tau3, basis.tau1), kI * basis.tau2);
  return d;
}

}  // namespace s2dkp
