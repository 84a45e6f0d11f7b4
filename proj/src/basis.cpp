#include "symmea/basis.hpp"

#include <cmath>

#include "symmea/errors.hpp"

namespace symmea {

std::vector<HermitianOperator> gell_mann_basis(std::size_t d) {
  if (d < 2) throw Error("gell_mann_basis needs d >= 2");
  std::vector<HermitianOperator> ops;
  ops.reserve(d * d - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix m(d, d);
      m(j, k) = m(k, j) = inv_sqrt2;
      ops.push_back(hermitian_unchecked(std::move(m)));
    }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix m(d, d);
      m(j, k) = cplx{0.0, -inv_sqrt2};
      m(k, j) = cplx{0.0, inv_sqrt2};
      ops.push_back(hermitian_unchecked(std::move(m)));
    }
  for (std::size_t l = 1; l < d; ++l) {
    ComplexMatrix m(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (std::size_t j = 0; j < l; ++j) m(j, j) = norm;
    m(l, l) = -static_cast<double>(l) * norm;
    ops.push_back(hermitian_unchecked(std::move(m)));
  }
  return ops;
}

BasisPartition::BasisPartition(std::vector<HermitianOperator> ops, std::vector<std::size_t> block_sizes,
                               double tol)
    : block_sizes_(std::move(block_sizes)), ops_(std::move(ops)) {
  if (ops_.empty()) throw Error("basis partition needs at least one operator");
  dim_ = ops_.front().dim();

  std::size_t needed = 0;
  for (std::size_t m : block_sizes_) {
    if (m < 2) throw Error("every block needs M_alpha >= 2");
    needed += m - 1;
  }
  if (needed > ops_.size())
    throw Error("partition needs " + std::to_string(needed) + " operators, got " +
                std::to_string(ops_.size()));
  if (needed > dim_ * dim_ - 1)
    throw Error("partition exceeds the d^2 - 1 traceless operators available");
  ops_.resize(needed, HermitianOperator::zero(dim_));

  offsets_.resize(block_sizes_.size());
  std::size_t pos = 0;
  for (std::size_t a = 0; a < block_sizes_.size(); ++a) {
    offsets_[a] = pos;
    pos += block_sizes_[a] - 1;
  }

  for (const auto& g : ops_) {
    if (g.dim() != dim_) throw DimensionMismatch("partition operators must share one dimension");
    if (std::abs(trace(g.matrix())) > tol) throw Error("partition operator is not traceless");
  }
  for (std::size_t i = 0; i < ops_.size(); ++i)
    for (std::size_t j = i; j < ops_.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      const double v = hs_inner(ops_[i], ops_[j]);
      if (std::abs(v - expected) > tol)
        throw Error("partition operators are not orthonormal: pair (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") deviates by " + std::to_string(std::abs(v - expected)));
    }
}

std::span<const HermitianOperator> BasisPartition::block(std::size_t alpha) const {
  if (alpha >= block_sizes_.size()) throw Error("block index out of range");
  return {ops_.data() + offsets_[alpha], block_sizes_[alpha] - 1};
}

HermitianOperator BasisPartition::block_sum(std::size_t alpha) const {
  auto b = block(alpha);
  HermitianOperator g = HermitianOperator::zero(dim_);
  for (const auto& op : b) g += op;
  return g;
}

BasisPartition rotate_block(const BasisPartition& p, std::size_t alpha, const RealMatrix& orthogonal,
                            double tol) {
  const auto b = p.block(alpha);
  const std::size_t n = b.size();
  if (orthogonal.rows() != n || orthogonal.cols() != n)
    throw DimensionMismatch("rotation must be (M_alpha - 1) square");
  if (orthogonality_defect(orthogonal) > tol) throw Error("block rotation is not orthogonal");

  std::vector<HermitianOperator> rotated;
  rotated.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    HermitianOperator g = HermitianOperator::zero(p.dim());
    for (std::size_t j = 0; j < n; ++j) g += orthogonal(i, j) * b[j];
    rotated.push_back(std::move(g));
  }

  std::vector<HermitianOperator> ops = p.operators();
  std::size_t offset = 0;
  for (std::size_t a = 0; a < alpha; ++a) offset += p.block_size(a) - 1;
  for (std::size_t i = 0; i < n; ++i) ops[offset + i] = rotated[i];
  return BasisPartition(std::move(ops), p.block_sizes(), tol);
}

}  // namespace symmea
