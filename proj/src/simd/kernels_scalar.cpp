#include "kernels_internal.hpp"

namespace cubic::simd::detail {

void mul_add_row_scalar(std::uint64_t* acc, const std::uint32_t* src, std::size_t len,
                        std::uint32_t scalar) {
  const std::uint64_t s = scalar;
  for (std::size_t j = 0; j < len; ++j) acc[j] += s * src[j];
}

void reduce_row_scalar(std::uint64_t* acc, std::size_t len, std::uint32_t m) {
  for (std::size_t j = 0; j < len; ++j) acc[j] %= m;
}

}  // namespace cubic::simd::detail
