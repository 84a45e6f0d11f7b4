#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symmea/complex_matrix.hpp"
#include "symmea/hermitian.hpp"

namespace symmea {

/// Deterministic sampler. Normal variates come from an explicit Box-Muller
/// transform so streams are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  cplx gaussian();  // independent N(0,1) real and imaginary parts

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Ginibre-based mixed state: G G^dagger / Tr(G G^dagger) with G a d x rank
/// complex Gaussian matrix. rank = 1 gives a Haar-random pure state.
DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, std::uint64_t seed);
DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, Rng& rng);

std::vector<cplx> haar_state(std::size_t d, Rng& rng);
DensityMatrix pure_state(const std::vector<cplx>& psi);

ComplexMatrix random_unitary(std::size_t d, Rng& rng);
RealMatrix random_orthogonal(std::size_t n, Rng& rng);

/// Flat Dirichlet weight vector (normalized exponentials).
std::vector<double> dirichlet_weights(std::size_t n, Rng& rng);

}  // namespace symmea
