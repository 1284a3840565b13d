#pragma once

/**
 * @file modform.hpp
 * @brief Eta-quotient metadata and the operators used by the Sturm-bound proofs.
 *
 * For f = prod_{delta | N} eta(delta z)^{r_delta} this computes the weight,
 * the level-N modularity conditions and Nebentypus character, the orders of
 * vanishing at the cusps 1/d (d | N), the Sturm bound, and the Hecke operator
 * T_p on q-expansions.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubic/series.hpp"

namespace cubic::modform {

class ModformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EtaQuotient {
  std::int64_t level = 1;
  std::map<std::int64_t, std::int64_t> exponents;  // delta -> r_delta

  /// Throws ModformError unless level >= 1 and every delta divides level.
  void validate() const;

  /// "1:76,2:-2"
  std::string exponents_string() const;
};

/// (1/2) sum r_delta, exactly.
mpq_class weight(const EtaQuotient& eq);

/// chi(d) = ((-1)^weight s / d) with s = numerator/denominator in lowest terms.
struct CharacterDescriptor {
  std::int64_t weight = 0;
  mpz_class s_numerator = 1;
  mpz_class s_denominator = 1;

  /// (-1)^weight times the squarefree parts of numerator and denominator:
  /// the integer whose Kronecker symbol the character evaluates.
  mpz_class kernel() const;

  std::string to_string() const;
};

struct CandidacyReport {
  mpq_class weight;
  bool weight_integral = false;
  std::int64_t sum_delta_r = 0;
  std::int64_t sum_level_over_delta_r = 0;
  std::optional<CharacterDescriptor> character;  // present iff the weight is integral

  bool delta_condition() const { return sum_delta_r % 24 == 0; }
  bool level_condition() const { return sum_level_over_delta_r % 24 == 0; }
  bool passes() const { return weight_integral && delta_condition() && level_condition(); }
};

CandidacyReport check_candidacy(const EtaQuotient& eq);

int character_eval(const CharacterDescriptor& ch, std::int64_t d);

struct CuspOrderTable {
  std::vector<std::pair<std::int64_t, mpq_class>> entries;  // d | N, increasing

  bool holomorphic() const;
  std::string to_string() const;
};

/// Order of vanishing at each cusp 1/d, d | N:
/// (N/24) sum_delta gcd(d,delta)^2 r_delta / (gcd(d, N/d) d delta).
CuspOrderTable cusp_orders(const EtaQuotient& eq);

/// floor((weight * level / 12) prod_{p | level} (1 + 1/p)).
std::int64_t sturm_bound(std::int64_t weight, std::int64_t level);

/// f | T_p with b(n) = a(pn) + chi(p) p^(weight-1) a(n/p). Requires offset 0.
TruncatedSeries hecke_tp(const TruncatedSeries& f, std::int64_t p, std::int64_t weight,
                         const CharacterDescriptor& ch);

/// (g|T_p) * h(q^(1/p)) for h supported on multiples of p, in Z/pZ. Congruent
/// mod p to hecke_tp(g*h) when the p^(weight-1) term vanishes.
TruncatedSeries hecke_tp_factored(const TruncatedSeries& g, const TruncatedSeries& h_of_qp,
                                  std::int64_t p, std::int64_t weight,
                                  const CharacterDescriptor& ch);

}  // namespace cubic::modform
