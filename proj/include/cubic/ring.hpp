#pragma once

// Coefficient rings for truncated series: the integers, or Z/mZ with a
// modulus that fits in 32 bits so products fit in a machine word.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubic {

class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Ring {
 public:
  static constexpr std::uint64_t kMaxModulus = 0xFFFFFFFFull;

  static Ring integers() { return Ring(0); }

  /// Z/mZ. Throws RingError unless 2 <= m <= kMaxModulus. Primality is not required.
  static Ring modulo(std::int64_t m);

  bool is_exact() const { return modulus_ == 0; }
  bool is_modular() const { return modulus_ != 0; }

  /// 0 for the integers.
  std::uint32_t modulus() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(std::uint32_t m) : modulus_(m) {}

  std::uint32_t modulus_;
};

}  // namespace cubic
