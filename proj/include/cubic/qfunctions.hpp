#pragma once

// Standard q-series: Euler products f_k = (q^k; q^k)_inf, the theta functions
// psi and phi, and q-expansions of eta-quotients prod eta(delta z)^r_delta.

#include <cstdint>
#include <map>
#include <stdexcept>

#include "cubic/series.hpp"

namespace cubic::q {

class EtaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// prod_{j>=1} (1 - q^{kj}), from the pentagonal number expansion of f_1.
TruncatedSeries euler_product(Exponent k, Exponent order, Ring ring);

/// sum_{k>=0} q^{k(k+1)/2}
TruncatedSeries psi(Exponent order, Ring ring);

/// 1 + 2 sum_{j>=1} q^{j^2}
TruncatedSeries phi(Exponent order, Ring ring);

struct EtaExpansionRequest {
  std::int64_t level = 1;
  /// delta -> r_delta; every delta must divide level.
  std::map<std::int64_t, std::int64_t> exponents;
  Exponent order = 0;
  Ring ring = Ring::integers();
};

/// Integral leading exponent sum(delta * r_delta) / 24. Throws EtaError when
/// the request is malformed or the sum is not divisible by 24.
Exponent eta_leading_exponent(std::int64_t level, const std::map<std::int64_t, std::int64_t>& exponents);

/// prod_delta (q^{delta/24} f_delta)^{r_delta} to the requested (absolute) order.
TruncatedSeries eta_expansion(const EtaExpansionRequest& req);

}  // namespace cubic::q
