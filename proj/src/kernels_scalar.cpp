#include "symmea/kernels.hpp"

namespace symmea::kernels {

namespace {

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
  // Accumulate real and imaginary parts separately; std::complex operator*
  // would do the same arithmetic with more temporaries.
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void axpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

void rot_scalar(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
  const cplx ms = -std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i], yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = ms * xi + c * yi;
  }
}

double sumsq_scalar(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return acc;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", dotc_scalar, axpy_scalar, rot_scalar, sumsq_scalar};
  return table;
}

}  // namespace symmea::kernels
