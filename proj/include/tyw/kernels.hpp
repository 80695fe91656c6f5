#pragma once

// Dense complex row kernels used by the echelon and verification sweeps.
//
// Every kernel has a portable scalar reference in kernels::scalar and, on
// x86-64, an AVX2 variant in kernels::avx2. The free functions in
// namespace kernels dispatch once at startup to the best variant the CPU
// supports. Elementwise kernels (axpy, scale, sub) round identically in
// both variants; reductions (norm2, max_abs_diff) may differ in the last
// bits because the summation order differs.

#include <complex>
#include <cstddef>
#include <string_view>

namespace tyw::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  // y[i] += a * x[i]
  void (*axpy)(cplx* y, cplx a, const cplx* x, std::size_t n);
  // x[i] *= a
  void (*scale)(cplx* x, cplx a, std::size_t n);
  // sum |x[i]|^2
  double (*norm2)(const cplx* x, std::size_t n);
  // index of the entry of largest modulus, lowest index on ties; n if n == 0
  std::size_t (*argmax_abs)(const cplx* x, std::size_t n);
  // max_i |x[i] - y[i]|
  double (*max_abs_diff)(const cplx* x, const cplx* y, std::size_t n);
};

namespace scalar {
void axpy(cplx* y, cplx a, const cplx* x, std::size_t n);
void scale(cplx* x, cplx a, std::size_t n);
double norm2(const cplx* x, std::size_t n);
std::size_t argmax_abs(const cplx* x, std::size_t n);
double max_abs_diff(const cplx* x, const cplx* y, std::size_t n);
}  // namespace scalar

#if defined(TYW_HAVE_AVX2)
namespace avx2 {
void axpy(cplx* y, cplx a, const cplx* x, std::size_t n);
void scale(cplx* x, cplx a, std::size_t n);
double norm2(const cplx* x, std::size_t n);
std::size_t argmax_abs(const cplx* x, std::size_t n);
double max_abs_diff(const cplx* x, const cplx* y, std::size_t n);
}  // namespace avx2
#endif

const KernelTable& table_for(Isa isa);
bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

// Active variant. Starts at the best available; tests may force Scalar.
Isa active_isa();
void set_active_isa(Isa isa);

inline const KernelTable& active() { return table_for(active_isa()); }

inline void axpy(cplx* y, cplx a, const cplx* x, std::size_t n) { active().axpy(y, a, x, n); }
inline void scale(cplx* x, cplx a, std::size_t n) { active().scale(x, a, n); }
inline double norm2(const cplx* x, std::size_t n) { return active().norm2(x, n); }
inline std::size_t argmax_abs(const cplx* x, std::size_t n) { return active().argmax_abs(x, n); }
inline double max_abs_diff(const cplx* x, const cplx* y, std::size_t n) {
  return active().max_abs_diff(x, y, n);
}

}  // namespace tyw::kernels
