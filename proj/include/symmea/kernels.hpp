#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace symmea::kernels {

using cplx = std::complex<double>;

/// Array kernels behind the dense-matrix layer. Each entry has a scalar
/// reference implementation plus optional SIMD variants selected at runtime.
/// Variants may differ from the reference only by floating-point
/// reassociation (FMA contraction, vector-lane partial sums).
struct KernelTable {
  const char* name;
  // sum_i conj(x[i]) * y[i]
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(cplx a, const cplx* x, cplx* y, std::size_t n);
  // [x; y] <- [c*x + s*y; -conj(s)*x + c*y], c real
  void (*rot)(cplx* x, cplx* y, std::size_t n, double c, cplx s);
  // sum_i |x[i]|^2
  double (*sumsq)(const cplx* x, std::size_t n);
};

const KernelTable& scalar();

/// Table currently in use (best variant the CPU supports unless overridden).
const KernelTable& active();

/// All tables usable on this CPU, scalar first.
std::vector<const KernelTable*> available();

/// Force a specific table by name ("scalar", "avx2"). Returns false if the
/// name is unknown or the CPU lacks the required features.
bool select(std::string_view name);

inline cplx dotc(const cplx* x, const cplx* y, std::size_t n) { return active().dotc(x, y, n); }
inline void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) { active().axpy(a, x, y, n); }
inline void rot(cplx* x, cplx* y, std::size_t n, double c, cplx s) { active().rot(x, y, n, c, s); }
inline double sumsq(const cplx* x, std::size_t n) { return active().sumsq(x, n); }

}  // namespace symmea::kernels
