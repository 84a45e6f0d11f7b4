#pragma once

#include <vector>

#include "symmea/gsm.hpp"
#include "symmea/random.hpp"

namespace symmea {

/// Operators F_{alpha,k} = a_alpha E_{alpha,k} - b_alpha I reconstructing any
/// state from its outcome probabilities. Exists only for informationally
/// complete measurements.
struct DualFrame {
  std::vector<std::vector<HermitianOperator>> blocks;
  std::vector<double> a, b;
};

DualFrame dual_frame(const GeneralizedSymmetricMeasurement& g);

/// rho reconstructed as sum p_{alpha,k} F_{alpha,k}.
HermitianOperator reconstruct(const DualFrame& f, const std::vector<std::vector<double>>& probabilities);

struct ProbabilityTable {
  std::vector<std::vector<double>> blocks;  // p_{alpha,k}, clipped at -1e-12
  std::size_t n_povms() const { return blocks.size(); }
};

ProbabilityTable probabilities(const GeneralizedSymmetricMeasurement& g, const DensityMatrix& rho);

/// C = sum over all blocks and outcomes of p^2.
double index_of_coincidence(const ProbabilityTable& t);

/// Closed-form bound C_max = (d-1) r / d + mu. Only available when
/// x_alpha - y_alpha is constant; throws BoundUnavailable otherwise.
double c_max(const GeneralizedSymmetricMeasurement& g);

struct EurBound {
  double nats = 0.0;
  double bits = 0.0;
};

/// State-independent entropy bound log(N / C_max).
EurBound eur_bound(const GeneralizedSymmetricMeasurement& g);

/// State-dependent bound log(N / C(rho)) in nats.
double eur_state_bound(const ProbabilityTable& t);

struct EntropyReport {
  struct Block {
    double shannon = 0.0;  // nats
    double renyi2 = 0.0;   // nats
  };
  std::vector<Block> blocks;
  double mean_shannon = 0.0;
  double state_bound = 0.0;  // log(N / C), nats
  bool jensen_ok = false;    // H >= R per block
  bool mean_bound_ok = false;
};

EntropyReport shannon_renyi_check(const ProbabilityTable& t);

/// Joint outcome probabilities P_{alpha,k;beta,l} = Tr[rho (E^A x E^B)].
struct CorrelationMatrix {
  std::vector<std::size_t> row_blocks, col_blocks;
  RealMatrix p;
  double trace() const;
  double trace_norm() const;
};

CorrelationMatrix correlation_matrix(const GeneralizedSymmetricMeasurement& a,
                                     const GeneralizedSymmetricMeasurement& b, const DensityMatrix& rho_ab);

enum class Verdict { entangled, inconclusive };

struct SeparabilityReport {
  bool trace_applicable = false;  // only for d_A = d_B
  double trace_value = 0.0, trace_bound = 0.0, trace_margin = 0.0;
  double norm_value = 0.0, norm_bound = 0.0, norm_margin = 0.0;
  double c_max_a = 0.0, c_max_b = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

/// Necessary separability conditions; ENTANGLED when a bound is exceeded
/// beyond tolerance, INCONCLUSIVE otherwise. Requires both measurements to
/// admit the closed-form C_max.
SeparabilityReport separability_test(const GeneralizedSymmetricMeasurement& a,
                                     const GeneralizedSymmetricMeasurement& b, const DensityMatrix& rho_ab,
                                     double tol = 1e-9);

/// Convex mixture of up to max_terms Haar-random product states.
DensityMatrix sample_separable_state(std::size_t d_a, std::size_t d_b, std::size_t max_terms, Rng& rng);

}  // namespace symmea
