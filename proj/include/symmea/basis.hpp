#pragma once

#include <span>
#include <vector>

#include "symmea/hermitian.hpp"

namespace symmea {

/// Generalized Gell-Mann basis of the traceless Hermitian operators on C^d:
/// d^2 - 1 operators, orthonormal in the Hilbert-Schmidt inner product.
/// Ordering: symmetric pairs, antisymmetric pairs, then diagonal, each in
/// lexicographic index order. For d = 2 this is sigma_x/sqrt2, sigma_y/sqrt2,
/// sigma_z/sqrt2.
std::vector<HermitianOperator> gell_mann_basis(std::size_t d);

/// Traceless orthonormal Hermitian operators grouped into blocks of sizes
/// M_alpha - 1. Block alpha holds the generators of the alpha-th POVM.
class BasisPartition {
 public:
  /// Consumes the first sum(M_alpha - 1) operators, in order, into blocks.
  /// Validates tracelessness and pairwise orthonormality against tol.
  BasisPartition(std::vector<HermitianOperator> ops, std::vector<std::size_t> block_sizes,
                 double tol = 1e-10);

  std::size_t dim() const { return dim_; }
  std::size_t n_blocks() const { return block_sizes_.size(); }
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  std::size_t block_size(std::size_t alpha) const { return block_sizes_[alpha]; }

  /// The M_alpha - 1 generators of block alpha.
  std::span<const HermitianOperator> block(std::size_t alpha) const;

  /// G_alpha = sum_k G_{alpha,k}.
  HermitianOperator block_sum(std::size_t alpha) const;

  const std::vector<HermitianOperator>& operators() const { return ops_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> block_sizes_;
  std::vector<std::size_t> offsets_;  // start of each block in ops_
  std::vector<HermitianOperator> ops_;
};

/// Replaces block alpha by orthogonal @ block operators (real mixing that
/// preserves orthonormality). `orthogonal` must be (M_alpha-1) square.
BasisPartition rotate_block(const BasisPartition& p, std::size_t alpha, const RealMatrix& orthogonal,
                            double tol = 1e-10);

}  // namespace symmea
