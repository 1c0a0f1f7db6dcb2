#include <cassert>

#include "colonlab/kernels.hpp"

namespace colonlab::kernels::scalar {

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
          std::uint32_t scale, std::uint32_t p) {
  assert(dst.size() == src.size());
  if (scale == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const std::uint64_t prod = std::uint64_t{scale} * src[i] % p;
    dst[i] = static_cast<std::uint32_t>((dst[i] + prod) % p);
  }
}

void scale(std::span<std::uint32_t> dst, std::uint32_t scale, std::uint32_t p) {
  for (auto& v : dst) v = static_cast<std::uint32_t>(std::uint64_t{scale} * v % p);
}

}  // namespace colonlab::kernels::scalar
