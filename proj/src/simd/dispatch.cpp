#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string_view>

#include "cubic/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace cubic::simd {
namespace {

constexpr Kernels kScalar{Level::scalar, "scalar", &detail::mul_add_row_scalar,
                          &detail::reduce_row_scalar};

#if defined(CUBIC_HAVE_AVX2_KERNELS)
// No 64-bit vector remainder exists in AVX2; reduction stays scalar.
constexpr Kernels kAvx2{Level::avx2, "avx2", &detail::mul_add_row_avx2,
                        &detail::reduce_row_scalar};
#endif

bool cpu_has_avx2() {
#if defined(CUBIC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Kernels& select_kernels() {
  if (const char* forced = std::getenv("CUBIC_SIMD")) {
    if (std::string_view(forced) == "scalar") return kScalar;
  }
  if (const Kernels* k = avx2_kernels()) return *k;
  return kScalar;
}

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels* avx2_kernels() {
#if defined(CUBIC_HAVE_AVX2_KERNELS)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active_kernels() {
  static const Kernels& chosen = select_kernels();
  return chosen;
}

std::vector<const Kernels*> available_kernels() {
  std::vector<const Kernels*> out{&kScalar};
  if (const Kernels* k = avx2_kernels()) out.push_back(k);
  return out;
}

std::uint64_t rows_between_reductions(std::uint32_t m) {
  const std::uint64_t top = m - 1ull;
  if (top == 0) return std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t headroom = std::numeric_limits<std::uint64_t>::max() - top;
  return headroom / (top * top);
}

std::vector<std::uint32_t> convolve_mod(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b, std::size_t out_len,
                                        std::uint32_t m, const Kernels& k) {
  std::vector<std::uint64_t> acc(out_len, 0);
  const std::uint64_t budget = rows_between_reductions(m);
  std::uint64_t pending = 0;
  const std::size_t rows = std::min(a.size(), out_len);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i] == 0) continue;
    const std::size_t len = std::min(b.size(), out_len - i);
    if (len == 0) continue;
    k.mul_add_row(acc.data() + i, b.data(), len, a[i]);
    if (++pending == budget) {
      k.reduce_row(acc.data(), out_len, m);
      pending = 0;
    }
  }
  k.reduce_row(acc.data(), out_len, m);
  return std::vector<std::uint32_t>(acc.begin(), acc.end());
}

std::vector<std::uint32_t> reciprocal_mod(std::span<const std::uint32_t> a, std::size_t out_len,
                                          std::uint32_t m, std::uint32_t a0_inverse,
                                          const Kernels& k) {
  std::vector<std::uint32_t> out(out_len, 0);
  if (out_len == 0) return out;
  // acc[n] collects sum_{i>=1} a[i]*out[n-i] as each out[k] becomes known.
  std::vector<std::uint64_t> acc(out_len, 0);
  const std::uint64_t budget = rows_between_reductions(m);
  const std::uint64_t inv = a0_inverse;
  std::uint64_t pending = 0;
  const std::span<const std::uint32_t> tail = a.size() > 1 ? a.subspan(1) : a.subspan(0, 0);
  for (std::size_t n = 0; n < out_len; ++n) {
    if (n == 0) {
      out[0] = static_cast<std::uint32_t>(inv % m);
    } else {
      const std::uint64_t s = acc[n] % m;
      out[n] = static_cast<std::uint32_t>(((m - s) % m) * inv % m);
    }
    if (out[n] == 0) continue;
    const std::size_t len = std::min(tail.size(), out_len - n - 1);
    if (len == 0) continue;
    k.mul_add_row(acc.data() + n + 1, tail.data(), len, out[n]);
    if (++pending == budget) {
      k.reduce_row(acc.data() + n + 1, out_len - n - 1, m);
      pending = 0;
    }
  }
  return out;
}

}  // namespace cubic::simd
