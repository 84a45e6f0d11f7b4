#include "symmea/hermitian.hpp"

#include <cmath>

#include "symmea/eigh.hpp"
#include "symmea/errors.hpp"
#include "symmea/kernels.hpp"

namespace symmea {

HermitianOperator::HermitianOperator(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionMismatch("Hermitian operator must be square");
  const double defect = hermiticity_defect(m_);
  if (defect > tol) throw NonHermitianError("matrix is not Hermitian: defect " + std::to_string(defect));
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    m_(i, i) = m_(i, i).real();
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      const cplx v = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

HermitianOperator HermitianOperator::identity(std::size_t d) {
  return hermitian_unchecked(ComplexMatrix::identity(d));
}

HermitianOperator HermitianOperator::zero(std::size_t d) {
  return hermitian_unchecked(ComplexMatrix(d, d));
}

HermitianOperator hermitian_unchecked(ComplexMatrix m) {
  return HermitianOperator(std::move(m), HermitianOperator::trusted_tag{});
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  m_ += o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
  m_ -= o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
  m_ *= cplx{s, 0.0};
  return *this;
}

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("hs_inner dimension mismatch");
  // For Hermitian A: Tr(AB) = sum_ij conj(A_ij) B_ij, a plain dot product.
  const cplx v = kernels::dotc(a.matrix().data(), b.matrix().data(), a.matrix().size());
  const double scale = std::max({1.0, std::abs(v.real()), max_abs(a.matrix()) * max_abs(b.matrix())});
  if (std::abs(v.imag()) > 1e-12 * scale)
    throw NonHermitianError("hs_inner produced a non-real value");
  return v.real();
}

HermitianOperator flip_operator(std::size_t d) {
  if (d < 2) throw Error("flip operator needs d >= 2");
  ComplexMatrix f(d * d, d * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) f(m * d + n, n * d + m) = 1.0;
  return hermitian_unchecked(std::move(f));
}

DensityMatrix::DensityMatrix(HermitianOperator op, double trace_tol, double psd_tol) : op_(std::move(op)) {
  const double tr = trace(op_.matrix()).real();
  if (std::abs(tr - 1.0) > trace_tol)
    throw Error("density matrix trace " + std::to_string(tr) + " differs from 1");
  const auto ev = eigvalsh(op_.matrix());
  if (!ev.empty() && ev.front() < -psd_tol)
    throw Error("density matrix has negative eigenvalue " + std::to_string(ev.front()));
}

double DensityMatrix::purity() const { return hs_inner(op_, op_); }

DensityMatrix max_entangled_projector(std::size_t d) {
  if (d < 2) throw Error("maximally entangled projector needs d >= 2");
  ComplexMatrix p(d * d, d * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) p(m * d + m, n * d + n) = 1.0 / static_cast<double>(d);
  return DensityMatrix(hermitian_unchecked(std::move(p)));
}

}  // namespace symmea
