#ifdef __x86_64__
#ifndef __AVX2__
#error "this should be compiled with AVX2"
#endif
#endif

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace cubic::simd::detail {

// 32x32->64 products via _mm256_mul_epu32, which reads the low half of each
// 64-bit lane; widening the source with cvtepu32 puts each value there.
void mul_add_row_avx2(std::uint64_t* acc, const std::uint32_t* src, std::size_t len,
                      std::uint32_t scalar) {
  const __m256i s = _mm256_set1_epi64x(static_cast<long long>(scalar));
  std::size_t j = 0;
  for (; j + 8 <= len; j += 8) {
    const __m256i w0 =
        _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + j)));
    const __m256i w1 =
        _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + j + 4)));
    __m256i c0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j));
    __m256i c1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j + 4));
    c0 = _mm256_add_epi64(c0, _mm256_mul_epu32(w0, s));
    c1 = _mm256_add_epi64(c1, _mm256_mul_epu32(w1, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + j), c0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + j + 4), c1);
  }
  for (; j + 4 <= len; j += 4) {
    const __m256i w =
        _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + j)));
    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j));
    c = _mm256_add_epi64(c, _mm256_mul_epu32(w, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + j), c);
  }
  const std::uint64_t s64 = scalar;
  for (; j < len; ++j) acc[j] += s64 * src[j];
}

}  // namespace cubic::simd::detail
