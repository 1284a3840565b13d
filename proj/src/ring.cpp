#include "cubic/ring.hpp"

namespace cubic {

Ring Ring::modulo(std::int64_t m) {
  if (m < 2) {
    throw RingError("modulus must be >= 2, got " + std::to_string(m));
  }
  if (static_cast<std::uint64_t>(m) > kMaxModulus) {
    throw RingError("modulus " + std::to_string(m) + " does not fit in 32 bits");
  }
  return Ring(static_cast<std::uint32_t>(m));
}

std::string Ring::to_string() const {
  if (is_exact()) return "ZZ";
  return "Z/" + std::to_string(modulus_) + "Z";
}

}  // namespace cubic
