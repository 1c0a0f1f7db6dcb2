// Compiled with -mavx2; only reached through the runtime dispatcher after a
// CPU feature check.

#include <immintrin.h>

#include <cassert>

#include "colonlab/kernels.hpp"

namespace colonlab::kernels::avx2 {

namespace {

// Shoup multiplication: for fixed c < p, c_shoup = floor(c * 2^32 / p). Then
// q = floor(c_shoup * x / 2^32) satisfies c*x - q*p in [0, 2p), which fits a
// 32-bit lane because p < 2^31.
struct ShoupConstant {
  __m256i c;
  __m256i c_shoup;
  __m256i p;
};

ShoupConstant make_constant(std::uint32_t c, std::uint32_t p) {
  const auto shoup = static_cast<std::uint32_t>((std::uint64_t{c} << 32) / p);
  return {_mm256_set1_epi32(static_cast<int>(c)), _mm256_set1_epi32(static_cast<int>(shoup)),
          _mm256_set1_epi32(static_cast<int>(p))};
}

inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0b10101010);
}

// x in [0, 2p) -> x mod p
inline __m256i reduce_once(__m256i x, __m256i p) {
  return _mm256_min_epu32(x, _mm256_sub_epi32(x, p));
}

inline __m256i mul_mod(__m256i x, const ShoupConstant& k) {
  const __m256i q = mulhi_epu32(x, k.c_shoup);
  const __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, k.c), _mm256_mullo_epi32(q, k.p));
  return reduce_once(r, k.p);
}

inline __m256i load(const std::uint32_t* ptr) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ptr));
}

inline void store(std::uint32_t* ptr, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(ptr), v);
}

}  // namespace

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
          std::uint32_t scale, std::uint32_t p) {
  assert(dst.size() == src.size());
  if (scale == 0) return;
  const ShoupConstant k = make_constant(scale, p);
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i prod = mul_mod(load(src.data() + i), k);
    store(dst.data() + i, reduce_once(_mm256_add_epi32(load(dst.data() + i), prod), k.p));
  }
  if (i < n) scalar::axpy(dst.subspan(i), src.subspan(i), scale, p);
}

void scale(std::span<std::uint32_t> dst, std::uint32_t scale, std::uint32_t p) {
  const ShoupConstant k = make_constant(scale, p);
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) store(dst.data() + i, mul_mod(load(dst.data() + i), k));
  if (i < n) scalar::scale(dst.subspan(i), scale, p);
}

}  // namespace colonlab::kernels::avx2
