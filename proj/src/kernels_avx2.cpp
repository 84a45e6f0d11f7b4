// AVX2+FMA variants of the array kernels. This translation unit is compiled
// with -mavx2 -mfma; callers must check CPU support before dispatching here.

#include "symmea/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace symmea::kernels {

namespace {

// Two complex<double> per __m256d, laid out [re0, im0, re1, im1].

inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d br = _mm256_movedup_pd(b);       // [br0, br0, br1, br1]
  const __m256d bi = _mm256_permute_pd(b, 0xF);  // [bi0, bi0, bi1, bi1]
  const __m256d as = _mm256_permute_pd(a, 0x5);  // [ai0, ar0, ai1, ar1]
  return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

inline __m256d conj4(__m256d a) {
  const __m256d mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  return _mm256_xor_pd(a, mask);
}

inline cplx hsum_cplx(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return {out[0], out[1]};
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = conj4(_mm256_loadu_pd(xd + 2 * i));
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc = _mm256_add_pd(acc, cmul(xv, yv));
  }
  cplx total = hsum_cplx(acc);
  for (; i < n; ++i) total += std::conj(x[i]) * y[i];
  return total;
}

void axpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const __m256d av = _mm256_set_pd(a.imag(), a.real(), a.imag(), a.real());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(av, xv)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void rot_avx2(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
  auto* xd = reinterpret_cast<double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const cplx ms = -std::conj(s);
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sv = _mm256_set_pd(s.imag(), s.real(), s.imag(), s.real());
  const __m256d msv = _mm256_set_pd(ms.imag(), ms.real(), ms.imag(), ms.real());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(xd + 2 * i, _mm256_fmadd_pd(cv, xv, cmul(sv, yv)));
    _mm256_storeu_pd(yd + 2 * i, _mm256_fmadd_pd(cv, yv, cmul(msv, xv)));
  }
  for (; i < n; ++i) {
    const cplx xi = x[i], yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = ms * xi + c * yi;
  }
}

double sumsq_avx2(const cplx* x, std::size_t n) {
  const auto* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d s2 = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s2);
  double total = out[0] + out[1];
  for (; i < n; ++i) total += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return total;
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2", dotc_avx2, axpy_avx2, rot_avx2, sumsq_avx2};
  return &table;
}

}  // namespace symmea::kernels

#else

namespace symmea::kernels {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace symmea::kernels

#endif
