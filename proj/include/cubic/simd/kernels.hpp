#pragma once

// Inner loops of modular power-series arithmetic. Every kernel has a portable
// scalar reference and, on x86-64, an AVX2 variant. The variant is picked once
// at runtime from CPU support; CUBIC_SIMD=scalar in the environment forces the
// reference path.
//
// Accumulators are 64-bit. A row update adds one product (< 2^64 since both
// factors are < m <= 2^32 - 1) per slot, so callers must reduce at least every
// rows_between_reductions(m) rows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cubic::simd {

enum class Level { scalar, avx2 };

struct Kernels {
  Level level;
  const char* name;
  /// acc[j] += scalar * src[j] for j < len, wrapping mod 2^64.
  void (*mul_add_row)(std::uint64_t* acc, const std::uint32_t* src, std::size_t len,
                      std::uint32_t scalar);
  /// acc[j] %= m for j < len.
  void (*reduce_row)(std::uint64_t* acc, std::size_t len, std::uint32_t m);
};

const Kernels& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks AVX2.
const Kernels* avx2_kernels();

/// Best kernels for this machine.
const Kernels& active_kernels();

/// Every variant usable on this machine, scalar first.
std::vector<const Kernels*> available_kernels();

/// Number of row updates an accumulator slot holding a value < m can absorb
/// before it may overflow 64 bits.
std::uint64_t rows_between_reductions(std::uint32_t m);

/// out[n] = sum_{i+j=n} a[i]*b[j] mod m for n < out_len. Inputs must be reduced.
std::vector<std::uint32_t> convolve_mod(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b, std::size_t out_len,
                                        std::uint32_t m, const Kernels& k = active_kernels());

/// Reciprocal of the power series a mod m to out_len terms. a[0]*a0_inverse must be 1 mod m.
std::vector<std::uint32_t> reciprocal_mod(std::span<const std::uint32_t> a, std::size_t out_len,
                                          std::uint32_t m, std::uint32_t a0_inverse,
                                          const Kernels& k = active_kernels());

}  // namespace cubic::simd
