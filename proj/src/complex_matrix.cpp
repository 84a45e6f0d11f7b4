#include "symmea/complex_matrix.hpp"

#include <cmath>
#include <cstring>

#include "symmea/errors.hpp"
#include "symmea/kernels.hpp"

namespace symmea {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DimensionMismatch("entry count does not match matrix shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition shape mismatch");
  kernels::axpy(1.0, o.a_.data(), a_.data(), a_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction shape mismatch");
  kernels::axpy(-1.0, o.a_.data(), a_.data(), a_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l)
      kernels::axpy(a(i, l), b.row(l), c.row(i), b.cols());
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

cplx trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("trace of non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionMismatch("trace_of_product shape mismatch");
  // Tr(AB) = sum_ij A_ij B_ji: contract rows of A against rows of B^T; for
  // the common square case walk B column-wise.
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k) {
      cplx* dst = c.row(i * b.rows() + k);
      for (std::size_t j = 0; j < a.cols(); ++j)
        kernels::axpy(a(i, j), b.row(k), dst + j * b.cols(), b.cols());
    }
  return c;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i]));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("max_abs_diff shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double frobenius_norm(const ComplexMatrix& a) { return std::sqrt(kernels::sumsq(a.data(), a.size())); }

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("hermiticity defect of non-square matrix");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

RealMatrix RealMatrix::identity(std::size_t d) {
  RealMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

double orthogonality_defect(const RealMatrix& o) {
  if (o.rows() != o.cols()) return 1.0;
  double m = 0.0;
  for (std::size_t i = 0; i < o.cols(); ++i)
    for (std::size_t j = 0; j < o.cols(); ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < o.rows(); ++k) dot += o(k, i) * o(k, j);
      m = std::max(m, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  return m;
}

}  // namespace symmea
