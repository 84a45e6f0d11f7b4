#pragma once

#include <span>
#include <vector>

#include "symmea/basis.hpp"

namespace symmea {

/// One of the four construction variants per block: the unprimed/primed
/// H-operator family and the sign of the strength parameter t.
struct VariantTag {
  bool primed = false;
  int sign = +1;  // +1 or -1
};

struct Interval {
  double lo = 0.0, hi = 0.0;
  bool contains(double v, double slack = 0.0) const { return v >= lo - slack && v <= hi + slack; }
};

/// Traceless operators H_{alpha,k} (k = 1..M_alpha) derived from block alpha.
/// Unprimed: H_k = G_alpha - sqrt(M)(1 + sqrt(M)) G_k for k < M and
/// H_M = (1 + sqrt(M)) G_alpha. Primed uses (1 - sqrt(M)) factors. The
/// returned operators always sum to zero.
std::vector<HermitianOperator> build_h_operators(const BasisPartition& p, std::size_t alpha, bool primed);

/// Admissible strength interval [-1/(M lambda_max), 1/(M |lambda_min|)] from
/// the extreme eigenvalues over all H operators of the block.
Interval t_range(std::span<const HermitianOperator> h_ops, std::size_t m_alpha);

/// Measurement block E_k = I/M_alpha + t H_k. Throws InfeasibleConstruction
/// naming the offending operator and eigenvalue when positivity fails.
std::vector<HermitianOperator> build_measurement_block(const BasisPartition& p, std::size_t alpha,
                                                       VariantTag variant, double t);

/// Purity parameter x_alpha of the block built with strength t.
double x_from_t(double t, std::size_t m_alpha, std::size_t d, bool primed);

/// |t| that realizes a given x_alpha (sign chosen by the caller).
double t_magnitude_from_x(double x, std::size_t m_alpha, std::size_t d, bool primed);

/// Inverts the construction: recovers the M_alpha - 1 basis operators from a
/// measurement block built with (variant, t). Throws if the recovered
/// operators fail orthonormality, which signals inconsistent inputs.
std::vector<HermitianOperator> recover_basis_block(std::span<const HermitianOperator> e_ops, double t,
                                                   VariantTag variant, double tol = 1e-8);

/// Outcome of comparing the unprimed(+) and primed(-) constructions at equal
/// x: whether the two POVMs coincide as sets, and under which pairing.
struct VariantCoincidenceReport {
  bool equal_sets = false;
  std::vector<std::size_t> pairing;  // pairing[k] = index of E'_j matching E_k
  double max_pair_deviation = 0.0;
  double x = 0.0;
  double t_unprimed = 0.0;
  double t_primed = 0.0;
};

VariantCoincidenceReport variant_coincidence(const BasisPartition& p, std::size_t alpha, double x,
                                             double tol = 1e-9);

/// Per-block construction request for a full measurement.
struct BlockSpec {
  VariantTag variant;
  double t = 0.0;
};

std::vector<std::vector<HermitianOperator>> build_measurement_blocks(const BasisPartition& p,
                                                                     std::span<const BlockSpec> specs);

}  // namespace symmea
