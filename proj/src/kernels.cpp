#include "wordcensus/kernels.hpp"

#include "wordcensus/error.hpp"

namespace wordcensus {

namespace kernels {

void census_scalar(const uint32_t* table, const uint32_t* inv, uint32_t order, uint32_t identity,
                   const uint8_t* kinds, const uint32_t* operands, size_t num_steps,
                   uint32_t x_begin, uint32_t x_end, uint64_t* counts);

#if defined(__x86_64__) || defined(__i386__)
void census_avx2(const uint32_t* table, const uint32_t* inv, uint32_t order, uint32_t identity,
                 const uint8_t* kinds, const uint32_t* operands, size_t num_steps,
                 uint32_t x_begin, uint32_t x_end, uint64_t* counts);
#endif

#if defined(__aarch64__)
void census_neon(const uint32_t* table, const uint32_t* inv, uint32_t order, uint32_t identity,
                 const uint8_t* kinds, const uint32_t* operands, size_t num_steps,
                 uint32_t x_begin, uint32_t x_end, uint64_t* counts);
#endif

}  // namespace kernels

namespace {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool neon_available() {
#if defined(__aarch64__)
  return true;
#else
  return false;
#endif
}

}  // namespace

KernelInfo resolve_kernel(KernelKind kind) {
  switch (kind) {
    case KernelKind::Scalar:
      return {"scalar", kernels::census_scalar};
    case KernelKind::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      if (avx2_available()) return {"avx2", kernels::census_avx2};
#endif
      throw Error(Errc::InvalidParameter, "kernel 'avx2' is not available on this machine");
    case KernelKind::Neon:
#if defined(__aarch64__)
      if (neon_available()) return {"neon", kernels::census_neon};
#endif
      throw Error(Errc::InvalidParameter, "kernel 'neon' is not available on this machine");
    case KernelKind::Auto:
#if defined(__x86_64__) || defined(__i386__)
      if (avx2_available()) return {"avx2", kernels::census_avx2};
#endif
#if defined(__aarch64__)
      if (neon_available()) return {"neon", kernels::census_neon};
#endif
      return {"scalar", kernels::census_scalar};
  }
  throw Error(Errc::InvalidParameter, "unhandled kernel kind");
}

KernelKind parse_kernel_name(const std::string& name) {
  if (name == "auto") return KernelKind::Auto;
  if (name == "scalar") return KernelKind::Scalar;
  if (name == "avx2") return KernelKind::Avx2;
  if (name == "neon") return KernelKind::Neon;
  throw Error(Errc::InvalidParameter, "unknown kernel '" + name + "'");
}

std::vector<std::string> available_kernel_names() {
  std::vector<std::string> names = {"scalar"};
  if (avx2_available()) names.push_back("avx2");
  if (neon_available()) names.push_back("neon");
  return names;
}

}  // namespace wordcensus
