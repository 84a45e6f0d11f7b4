#include "symmea/designs.hpp"

#include <cmath>

#include "symmea/basis.hpp"
#include "symmea/errors.hpp"
#include "symmea/kernels.hpp"

namespace symmea {

namespace {

// Tr(X E) for Hermitian E and arbitrary X: sum_ij X_ij E_ji = sum conj(E)_ij X_ij.
cplx overlap(const ComplexMatrix& x, const HermitianOperator& e) {
  return kernels::dotc(e.matrix().data(), x.data(), x.size());
}

ComplexMatrix apply_channel_matrix(const GeneralizedSymmetricMeasurement& g, std::size_t alpha,
                                   const ComplexMatrix& x, bool weighted) {
  const std::size_t d = g.dim;
  if (x.rows() != d || x.cols() != d) throw DimensionMismatch("channel input dimension mismatch");
  ComplexMatrix out(d, d);
  const double scale = weighted ? 1.0 / g.params.w[alpha] : 1.0;
  for (const auto& e : g.blocks[alpha])
    kernels::axpy(scale * overlap(x, e), e.matrix().data(), out.data(), out.size());
  return out;
}

struct TwoParamFit {
  double kappa_plus = 0.0, kappa_minus = 0.0, residual = 0.0;
};

// Least-squares projection of S onto span{I x I, F_d} under the
// Hilbert-Schmidt inner product. The basis is not orthogonal
// (Tr[(IxI)F] = d), so solve the 2x2 Gram system
//   [d^2  d ] [k+]   [Tr S    ]
//   [d    d^2] [k-] = [Tr(F S)].
TwoParamFit fit_identity_flip(const ComplexMatrix& s, std::size_t d) {
  const double dd = static_cast<double>(d);
  const HermitianOperator f = flip_operator(d);
  const double tr_s = trace(s).real();
  const double tr_fs = trace_of_product(f.matrix(), s).real();
  const double det = dd * dd * dd * dd - dd * dd;  // d^4 - d^2
  TwoParamFit fit;
  fit.kappa_plus = (dd * dd * tr_s - dd * tr_fs) / det;
  fit.kappa_minus = (dd * dd * tr_fs - dd * tr_s) / det;

  ComplexMatrix model(d * d, d * d);
  for (std::size_t i = 0; i < d * d; ++i) model(i, i) = fit.kappa_plus;
  model += cplx{fit.kappa_minus, 0.0} * f.matrix();
  fit.residual = max_abs_diff(s, model);
  return fit;
}

ComplexMatrix tensor_square_sum(const GeneralizedSymmetricMeasurement& g, bool weighted) {
  const std::size_t d = g.dim;
  ComplexMatrix s(d * d, d * d);
  for (std::size_t a = 0; a < g.n_povms(); ++a) {
    const double scale = weighted ? 1.0 / g.params.w[a] : 1.0;
    for (const auto& e : g.blocks[a]) {
      const ComplexMatrix k = kron(e.matrix(), e.matrix());
      kernels::axpy(scale, k.data(), s.data(), s.size());
    }
  }
  return s;
}

// Deviation of sum_alpha Phi_alpha = kappa_minus Id + kappa_plus d Phi_0,
// probed on the complete operator basis {I/sqrt(d), Gell-Mann}.
double map_identity_residual(const GeneralizedSymmetricMeasurement& g, bool weighted, double kappa_plus,
                             double kappa_minus) {
  const std::size_t d = g.dim;
  std::vector<HermitianOperator> basis = gell_mann_basis(d);
  basis.push_back((1.0 / std::sqrt(static_cast<double>(d))) * HermitianOperator::identity(d));

  double worst = 0.0;
  for (const auto& b : basis) {
    ComplexMatrix lhs(d, d);
    for (std::size_t a = 0; a < g.n_povms(); ++a) lhs += apply_channel_matrix(g, a, b.matrix(), weighted);
    ComplexMatrix rhs = cplx{kappa_minus, 0.0} * b.matrix();
    const cplx tr_b = trace(b.matrix());
    for (std::size_t i = 0; i < d; ++i) rhs(i, i) += kappa_plus * tr_b;
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

}  // namespace

HermitianOperator apply_measurement_channel(const GeneralizedSymmetricMeasurement& g, std::size_t alpha,
                                            const HermitianOperator& x, bool weighted) {
  if (alpha >= g.n_povms()) throw Error("channel block index out of range");
  return hermitian_unchecked(apply_channel_matrix(g, alpha, x.matrix(), weighted));
}

HermitianOperator depolarizing_channel(const HermitianOperator& x) {
  const std::size_t d = x.dim();
  ComplexMatrix out(d, d);
  const cplx t = trace(x.matrix()) / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) out(i, i) = t;
  return hermitian_unchecked(std::move(out));
}

ComplexMatrix choi_of_channel_sum(const GeneralizedSymmetricMeasurement& g) {
  const std::size_t d = g.dim;
  ComplexMatrix c(d * d, d * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      // (id x Phi T) acting on d P+ touches the (m, n) block via Phi[|n><m|].
      ComplexMatrix unit(d, d);
      unit(n, m) = 1.0;
      ComplexMatrix y(d, d);
      for (std::size_t a = 0; a < g.n_povms(); ++a) y += apply_channel_matrix(g, a, unit, false);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = 0; l < d; ++l) c(m * d + j, n * d + l) = y(j, l);
    }
  return c;
}

DesignCertificate certify_design(const GeneralizedSymmetricMeasurement& g, double tol) {
  const std::size_t d = g.dim;
  DesignCertificate cert;
  cert.mu = g.mu();

  const ComplexMatrix s = tensor_square_sum(g, false);
  const TwoParamFit fit_u = fit_identity_flip(s, d);
  cert.unweighted_kappa_plus = fit_u.kappa_plus;
  cert.unweighted_kappa_minus = fit_u.kappa_minus;
  cert.unweighted_residual = fit_u.residual;
  const double map_u = map_identity_residual(g, false, fit_u.kappa_plus, fit_u.kappa_minus);

  const ComplexMatrix sw = tensor_square_sum(g, true);
  const TwoParamFit fit_w = fit_identity_flip(sw, d);
  cert.weighted_kappa_plus = fit_w.kappa_plus;
  cert.weighted_kappa_minus = fit_w.kappa_minus;
  cert.weighted_residual = fit_w.residual;
  const double map_w = map_identity_residual(g, true, fit_w.kappa_plus, fit_w.kappa_minus);

  cert.consistency_residual = max_abs_diff(s, choi_of_channel_sum(g));
  cert.paths_consistent = cert.consistency_residual <= tol;

  if (fit_u.residual <= tol && map_u <= tol && fit_u.kappa_plus >= fit_u.kappa_minus &&
      fit_u.kappa_minus > 0.0) {
    cert.kind = DesignKind::conical_2_design;
    cert.kappa_plus = fit_u.kappa_plus;
    cert.kappa_minus = fit_u.kappa_minus;
    cert.r = fit_u.kappa_minus;
    cert.residual_operator = fit_u.residual;
    cert.residual_map = map_u;
  } else if (fit_w.residual <= tol && map_w <= tol && fit_w.kappa_minus > 0.0) {
    cert.kind = DesignKind::weighted_identity_only;
    cert.kappa_plus = fit_w.kappa_plus;
    cert.kappa_minus = fit_w.kappa_minus;
    cert.s = fit_w.kappa_minus;
    cert.residual_operator = fit_w.residual;
    cert.residual_map = map_w;
  } else {
    cert.kind = DesignKind::none;
    cert.kappa_plus = fit_u.kappa_plus;
    cert.kappa_minus = fit_u.kappa_minus;
    cert.residual_operator = fit_u.residual;
    cert.residual_map = map_u;
  }
  return cert;
}

}  // namespace symmea
