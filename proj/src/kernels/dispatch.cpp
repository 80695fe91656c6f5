#include "tyw/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace tyw::kernels {

namespace {

constexpr KernelTable kScalarTable{scalar::axpy, scalar::scale, scalar::norm2, scalar::argmax_abs,
                                   scalar::max_abs_diff};
#if defined(TYW_HAVE_AVX2)
constexpr KernelTable kAvx2Table{avx2::axpy, avx2::scale, avx2::norm2, avx2::argmax_abs,
                                 avx2::max_abs_diff};
#endif

bool cpu_has_avx2() {
#if defined(TYW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa best_available() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{best_available()};
  return slot;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return kScalarTable;
    case Isa::Avx2:
#if defined(TYW_HAVE_AVX2)
      if (cpu_has_avx2()) return kAvx2Table;
#endif
      break;
  }
  throw std::invalid_argument("kernel variant not available on this CPU");
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("kernel variant not available on this CPU");
  active_slot().store(isa, std::memory_order_relaxed);
}

}  // namespace tyw::kernels
