#pragma once

// Dense vector kernels over a prime field F_p, p < 2^31, values stored as
// reduced uint32 residues. The scalar implementations are the reference;
// vectorized variants must agree with them bit for bit.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace colonlab::kernels {

enum class Isa { Scalar, Avx2 };

struct ModKernels {
  Isa isa;
  // dst[i] = (dst[i] + scale * src[i]) mod p
  void (*axpy)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
               std::uint32_t scale, std::uint32_t p);
  // dst[i] = (scale * dst[i]) mod p
  void (*scale)(std::span<std::uint32_t> dst, std::uint32_t scale, std::uint32_t p);
};

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
std::vector<Isa> available_isas();

// Throws UsageError when the ISA is not supported by this build or CPU.
const ModKernels& kernels_for(Isa isa);

// Best available ISA; COLONLAB_ISA=scalar in the environment forces the
// reference kernels. Selected once per process.
const ModKernels& active();

inline void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                     std::uint32_t scale, std::uint32_t p) {
  active().axpy(dst, src, scale, p);
}

inline void scale_mod(std::span<std::uint32_t> dst, std::uint32_t scale, std::uint32_t p) {
  active().scale(dst, scale, p);
}

namespace scalar {
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
          std::uint32_t scale, std::uint32_t p);
void scale(std::span<std::uint32_t> dst, std::uint32_t scale, std::uint32_t p);
}  // namespace scalar

#if defined(COLONLAB_HAVE_AVX2)
namespace avx2 {
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
          std::uint32_t scale, std::uint32_t p);
void scale(std::span<std::uint32_t> dst, std::uint32_t scale, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace colonlab::kernels
