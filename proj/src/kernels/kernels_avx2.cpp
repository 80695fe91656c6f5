#include "tyw/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

// One __m256d holds two interleaved complex doubles: [re0 im0 re1 im1].

namespace tyw::kernels::avx2 {

namespace {

inline const double* dptr(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* dptr(cplx* p) { return reinterpret_cast<double*>(p); }

// [ar*xr - ai*xi, ar*xi + ai*xr] for both lanes; same operation order as
// the scalar reference so results are bit-identical.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d x) {
  const __m256d xs = _mm256_permute_pd(x, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(ar, x), _mm256_mul_pd(ai, xs));
}

// [|z0|^2, |z0|^2, |z1|^2, |z1|^2]
inline __m256d cabs2(__m256d x) {
  const __m256d sq = _mm256_mul_pd(x, x);
  return _mm256_hadd_pd(sq, sq);
}

}  // namespace

void axpy(cplx* y, cplx a, const cplx* x, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(dptr(x + i));
    const __m256d yv = _mm256_loadu_pd(dptr(y + i));
    _mm256_storeu_pd(dptr(y + i), _mm256_add_pd(yv, cmul(ar, ai, xv)));
  }
  if (i < n) scalar::axpy(y + i, a, x + i, n - i);
}

void scale(cplx* x, cplx a, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(dptr(x + i));
    _mm256_storeu_pd(dptr(x + i), cmul(ar, ai, xv));
  }
  if (i < n) scalar::scale(x + i, a, n - i);
}

double norm2(const cplx* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(dptr(x + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(xv, xv));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  if (i < n) s += scalar::norm2(x + i, n - i);
  return s;
}

std::size_t argmax_abs(const cplx* x, std::size_t n) {
  if (n == 0) return n;
  __m256d best = _mm256_set1_pd(-1.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    best = _mm256_max_pd(best, cabs2(_mm256_loadu_pd(dptr(x + i))));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m = std::max(lanes[0], lanes[2]);
  for (; i < n; ++i) {
    const double r = x[i].real(), im = x[i].imag();
    m = std::max(m, r * r + im * im);
  }
  // Second pass recovers the lowest index attaining the maximum.
  for (std::size_t j = 0; j < n; ++j) {
    const double r = x[j].real(), im = x[j].imag();
    if (r * r + im * im == m) return j;
  }
  return 0;
}

double max_abs_diff(const cplx* x, const cplx* y, std::size_t n) {
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(dptr(x + i)), _mm256_loadu_pd(dptr(y + i)));
    best = _mm256_max_pd(best, cabs2(d));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m = std::max(lanes[0], lanes[2]);
  for (; i < n; ++i) {
    const double dr = x[i].real() - y[i].real();
    const double di = x[i].imag() - y[i].imag();
    m = std::max(m, dr * dr + di * di);
  }
  return std::sqrt(m);
}

}  // namespace tyw::kernels::avx2
