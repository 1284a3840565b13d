#pragma once

#include <cstddef>
#include <cstdint>

namespace cubic::simd::detail {

void mul_add_row_scalar(std::uint64_t* acc, const std::uint32_t* src, std::size_t len,
                        std::uint32_t scalar);
void reduce_row_scalar(std::uint64_t* acc, std::size_t len, std::uint32_t m);

#if defined(CUBIC_HAVE_AVX2_KERNELS)
void mul_add_row_avx2(std::uint64_t* acc, const std::uint32_t* src, std::size_t len,
                      std::uint32_t scalar);
#endif

}  // namespace cubic::simd::detail
