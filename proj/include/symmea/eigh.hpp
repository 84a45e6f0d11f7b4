#pragma once

#include <vector>

#include "symmea/complex_matrix.hpp"

namespace symmea {

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, A = V diag(w) V^dagger
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. The input must be
/// Hermitian within `hermiticity_tol` (max entrywise |A - A^dagger|).
EighResult eigh(const ComplexMatrix& a, double hermiticity_tol = 1e-12);

std::vector<double> eigvalsh(const ComplexMatrix& a, double hermiticity_tol = 1e-12);

/// Singular values by one-sided Jacobi, descending. Works for any shape.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Number of singular values above rel_tol * sigma_max.
std::size_t numerical_rank(const ComplexMatrix& m, double rel_tol = 1e-8);

}  // namespace symmea
