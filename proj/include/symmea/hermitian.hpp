#pragma once

#include <vector>

#include "symmea/complex_matrix.hpp"

namespace symmea {

/// A d x d Hermitian matrix. Ingestion symmetrizes (A + A^dagger)/2 when the
/// defect is below tolerance and rejects otherwise, so downstream code can
/// rely on exact Hermiticity.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m, double tol = 1e-12);

  static HermitianOperator identity(std::size_t d);
  static HermitianOperator zero(std::size_t d);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  HermitianOperator& operator+=(const HermitianOperator& o);
  HermitianOperator& operator-=(const HermitianOperator& o);
  HermitianOperator& operator*=(double s);

 private:
  struct trusted_tag {};
  HermitianOperator(ComplexMatrix m, trusted_tag) : m_(std::move(m)) {}
  friend HermitianOperator hermitian_unchecked(ComplexMatrix m);

  ComplexMatrix m_;
};

/// Wraps a matrix already known to be exactly Hermitian (library-internal
/// construction paths); skips the defect check.
HermitianOperator hermitian_unchecked(ComplexMatrix m);

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator*(double s, HermitianOperator a);

/// Hilbert-Schmidt inner product Tr(A B). Real for Hermitian inputs; the
/// imaginary residual is checked against tolerance and discarded.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

/// Flip (swap) operator F_d = sum |m><n| x |n><m| on C^d x C^d.
HermitianOperator flip_operator(std::size_t d);

/// Unit-trace positive semidefinite operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator op, double trace_tol = 1e-10, double psd_tol = 1e-10);

  std::size_t dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  double purity() const;

 private:
  HermitianOperator op_;
};

/// Projector onto the maximally entangled state of C^d x C^d.
DensityMatrix max_entangled_projector(std::size_t d);

}  // namespace symmea
