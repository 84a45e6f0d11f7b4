#include "symmea/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symmea/errors.hpp"
#include "symmea/kernels.hpp"

namespace symmea {

namespace {

// Rutishauser tangent choice: the smaller rotation angle that zeroes the
// target entry; tau = (aqq - app) / (2|apq|).
double jacobi_tangent(double tau) {
  if (std::abs(tau) > 1e12) return 1.0 / (2.0 * tau);
  const double sign = tau >= 0.0 ? 1.0 : -1.0;
  return sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
}

double offdiag_sumsq(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return s;
}

}  // namespace

EighResult eigh(const ComplexMatrix& input, double hermiticity_tol) {
  if (input.rows() != input.cols()) throw DimensionMismatch("eigh requires a square matrix");
  const std::size_t d = input.rows();
  if (hermiticity_defect(input) > hermiticity_tol)
    throw NonHermitianError("eigh input is not Hermitian within tolerance");

  // Symmetrize and work on a copy; accumulate W = V^dagger row-wise so the
  // rotation kernel sees contiguous memory.
  ComplexMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = 0.5 * (input(i, i) + std::conj(input(i, i)));
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx v = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix w = ComplexMatrix::identity(d);

  const double scale = std::max(max_abs(a), 1e-300);
  const double stop = d * d * 1e-30 * scale * scale;

  for (int sweep = 0; sweep < 60 && offdiag_sumsq(a) > stop; ++sweep) {
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const cplx phase = apq / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = jacobi_tangent(tau);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;

        // A <- J^dagger A J with J = [[c, s], [-conj(s), c]] on (p, q).
        // Row stage (J^dagger A): contiguous, goes through the kernel.
        kernels::rot(a.row(p), a.row(q), d, c, -s);
        // Column stage (A J).
        for (std::size_t i = 0; i < d; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - std::conj(s) * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        // W = V^dagger picks up J^dagger from the left.
        kernels::rot(w.row(p), w.row(q), d, c, -s);
      }
    }
  }

  EighResult r;
  r.eigenvalues.resize(d);
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(d);
  for (std::size_t i = 0; i < d; ++i) diag[i] = a(i, i).real();
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

  r.eigenvectors = ComplexMatrix(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    r.eigenvalues[k] = diag[order[k]];
    for (std::size_t i = 0; i < d; ++i) r.eigenvectors(i, k) = std::conj(w(order[k], i));
  }
  return r;
}

std::vector<double> eigvalsh(const ComplexMatrix& a, double hermiticity_tol) {
  return eigh(a, hermiticity_tol).eigenvalues;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  // One-sided Jacobi on the rows of M^T (= columns of M): right rotations
  // become contiguous row rotations. Transposition leaves singular values
  // unchanged.
  ComplexMatrix a = transpose(m);
  const std::size_t nrows = a.rows(), len = a.cols();
  if (nrows == 0 || len == 0) return {};

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < nrows; ++p) {
      for (std::size_t q = p + 1; q < nrows; ++q) {
        const double app = kernels::sumsq(a.row(p), len);
        const double aqq = kernels::sumsq(a.row(q), len);
        const cplx g = kernels::dotc(a.row(p), a.row(q), len);
        const double mag = std::abs(g);
        if (mag <= 1e-15 * std::sqrt(app * aqq) || mag <= 1e-300) continue;
        rotated = true;
        const cplx phase = g / mag;
        const double tau = (app - aqq) / (2.0 * mag);
        const double t = jacobi_tangent(tau);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * std::conj(phase);
        // Orthogonalize rows p and q of A (columns of M).
        kernels::rot(a.row(p), a.row(q), len, c, s);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(nrows);
  for (std::size_t p = 0; p < nrows; ++p) sv[p] = std::sqrt(kernels::sumsq(a.row(p), len));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double trace_norm(const ComplexMatrix& m) {
  const auto sv = singular_values(m);
  double s = 0.0;
  for (double v : sv) s += v;
  return s;
}

std::size_t numerical_rank(const ComplexMatrix& m, double rel_tol) {
  const auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = rel_tol * sv.front();
  std::size_t r = 0;
  for (double v : sv)
    if (v > cut) ++r;
  return r;
}

}  // namespace symmea
