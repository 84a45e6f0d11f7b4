#pragma once

#include <optional>

#include "symmea/gsm.hpp"

namespace symmea {

enum class DesignKind { conical_2_design, weighted_identity_only, none };

/// Outcome of the conical 2-design certification. Both certification paths
/// (operator-level tensor sum, map-level channel identity) always run, and
/// the Choi construction cross-checks them.
struct DesignCertificate {
  DesignKind kind = DesignKind::none;
  double kappa_plus = 0.0;
  double kappa_minus = 0.0;
  std::optional<double> r;  // set for conical 2-designs (r = kappa_minus)
  std::optional<double> s;  // set for the weighted identity class
  double mu = 0.0;
  double residual_operator = 0.0;  // classified identity, entrywise max
  double residual_map = 0.0;       // channel-sum identity over a basis
  double consistency_residual = 0.0;  // |direct sum - Choi of channel sum|
  bool paths_consistent = false;

  // Raw two-parameter fits for both identities, kept for diagnostics.
  double unweighted_kappa_plus = 0.0, unweighted_kappa_minus = 0.0, unweighted_residual = 0.0;
  double weighted_kappa_plus = 0.0, weighted_kappa_minus = 0.0, weighted_residual = 0.0;
};

/// Phi_alpha[X] = sum_k E_{alpha,k} Tr(X E_{alpha,k}); `weighted` divides by
/// w_alpha (the entanglement-breaking normalization).
HermitianOperator apply_measurement_channel(const GeneralizedSymmetricMeasurement& g, std::size_t alpha,
                                            const HermitianOperator& x, bool weighted = false);

/// Maximally depolarizing channel reference: I Tr(X)/d.
HermitianOperator depolarizing_channel(const HermitianOperator& x);

/// Choi matrix of the transposed channel sum, sum_alpha (id x Phi_alpha T)[d P+].
/// Equals the direct tensor sum sum E x E for any measurement.
ComplexMatrix choi_of_channel_sum(const GeneralizedSymmetricMeasurement& g);

DesignCertificate certify_design(const GeneralizedSymmetricMeasurement& g, double tol = 1e-8);

}  // namespace symmea
