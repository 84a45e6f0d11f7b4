#include "symmea/random.hpp"

#include <cmath>
#include <numbers>

#include "symmea/errors.hpp"
#include "symmea/kernels.hpp"

namespace symmea {

double Rng::uniform() {
  // 53-bit mantissa from the top bits of the generator output.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

cplx Rng::gaussian() {
  const double re = normal();
  return {re, normal()};
}

DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix(d, rank, rng);
}

DensityMatrix random_density_matrix(std::size_t d, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > d) throw Error("random_density_matrix: rank must be in [1, d]");
  ComplexMatrix g(d, rank);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.gaussian();
  ComplexMatrix rho = g * adjoint(g);
  rho *= cplx{1.0 / trace(rho).real(), 0.0};
  return DensityMatrix(hermitian_unchecked(std::move(rho)));
}

std::vector<cplx> haar_state(std::size_t d, Rng& rng) {
  std::vector<cplx> v(d);
  double n2 = 0.0;
  for (auto& c : v) {
    c = rng.gaussian();
    n2 += std::norm(c);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : v) c *= inv;
  return v;
}

DensityMatrix pure_state(const std::vector<cplx>& psi) {
  const std::size_t d = psi.size();
  ComplexMatrix rho(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  return DensityMatrix(hermitian_unchecked(std::move(rho)));
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  // Gram-Schmidt on a complex Ginibre matrix; columns become the unitary.
  ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.gaussian();
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < d; ++i) proj += std::conj(g(i, prev)) * g(i, c);
      for (std::size_t i = 0; i < d; ++i) g(i, c) -= proj * g(i, prev);
    }
    double n2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) n2 += std::norm(g(i, c));
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < d; ++i) g(i, c) *= inv;
  }
  return g;
}

RealMatrix random_orthogonal(std::size_t n, Rng& rng) {
  RealMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.normal();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      double proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += g(i, prev) * g(i, c);
      for (std::size_t i = 0; i < n; ++i) g(i, c) -= proj * g(i, prev);
    }
    double n2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) n2 += g(i, c) * g(i, c);
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < n; ++i) g(i, c) *= inv;
  }
  return g;
}

std::vector<double> dirichlet_weights(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& v : w) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    v = -std::log(u);
    total += v;
  }
  for (auto& v : w) v /= total;
  return w;
}

}  // namespace symmea
