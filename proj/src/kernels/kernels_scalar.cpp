#include "tyw/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace tyw::kernels::scalar {

// Complex products are written out by hand: std::complex operator* carries
// NaN recovery branches and its rounding would not match the AVX2 path.

void axpy(cplx* y, cplx a, const cplx* x, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double pr = ar * xr - ai * xi;
    const double pi = ar * xi + ai * xr;
    y[i] = cplx(y[i].real() + pr, y[i].imag() + pi);
  }
}

void scale(cplx* x, cplx a, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

double norm2(const cplx* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = x[i].real(), im = x[i].imag();
    s += r * r + im * im;
  }
  return s;
}

std::size_t argmax_abs(const cplx* x, std::size_t n) {
  std::size_t best = n;
  double best_v = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = x[i].real(), im = x[i].imag();
    const double v = r * r + im * im;
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  return best;
}

double max_abs_diff(const cplx* x, const cplx* y, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = x[i].real() - y[i].real();
    const double di = x[i].imag() - y[i].imag();
    m = std::max(m, dr * dr + di * di);
  }
  return std::sqrt(m);
}

}  // namespace tyw::kernels::scalar
