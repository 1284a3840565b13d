#pragma once

// Generalized cubic partitions a_c(n) (even parts in c colors) and generalized
// overcubic partitions (additionally, each kind of part may have one
// overlined copy). Counts come from generating-function series and, as an
// independent route, from a combinatorial dynamic program.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubic/series.hpp"

namespace cubic {

enum class FamilyKind { cubic, overcubic };

struct PartitionFamily {
  FamilyKind kind = FamilyKind::cubic;
  std::int64_t colors = 1;

  static PartitionFamily cubic(std::int64_t c);
  static PartitionFamily overcubic(std::int64_t c);

  std::string to_string() const;

  friend auto operator<=>(const PartitionFamily&, const PartitionFamily&) = default;
};

std::string to_string(FamilyKind kind);
/// Accepts "cubic" and "overcubic".
FamilyKind parse_family_kind(const std::string& text);

namespace partitions {

/// cubic: 1/(f1 f2^(c-1)); overcubic: f4^(c-1) / (f1^2 f2^(2c-3)).
TruncatedSeries generating_series(const PartitionFamily& family, Exponent order, Ring ring);

/// Count of partitions of n by dynamic programming over part kinds.
mpz_class count_direct(const PartitionFamily& family, std::int64_t n);

/// count_direct for every n in [0, n_max].
std::vector<mpz_class> count_direct_table(const PartitionFamily& family, std::int64_t n_max);

/// Outcome of comparing two independently built series coefficient by coefficient.
struct IdentityReport {
  bool equal = true;
  Exponent order = 0;
  std::optional<Exponent> first_mismatch;
  mpz_class lhs_at_mismatch;
  mpz_class rhs_at_mismatch;

  std::string to_string() const;
};

/// Compares at every exponent below the smaller of the two orders.
IdentityReport compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

/// psi(q) psi(q^2)^psi_q2_exponent F_c(q^2)^2. The functional equation uses
/// psi_q2_exponent = c - 1; other values exist for mutation testing.
TruncatedSeries functional_equation_rhs(std::int64_t c, std::int64_t psi_q2_exponent,
                                        Exponent order);

/// F_c(q) = psi(q) psi(q^2)^(c-1) F_c(q^2)^2 over ZZ.
IdentityReport check_functional_equation(std::int64_t c, Exponent order);

/// psi(q) prod_{i>=1} psi(q^(2^i))^(p 2^(i-1)) truncated at the first i with
/// 2^i >= order.
TruncatedSeries lemma_product(std::int64_t p, Exponent order);

/// F_{p-1}(q) against lemma_product(p, order). p must be an odd prime.
IdentityReport check_lemma_product(std::int64_t p, Exponent order);

enum class NamedIdentity {
  ramanujan_p5n4,  // sum p(5n+4) q^n = 5 f5^5 / f1^6
  chan_a2_3n2,     // sum a2(3n+2) q^n = 3 f3^3 f6^3 / (f1^4 f2^4)
};

NamedIdentity parse_named_identity(const std::string& id);
std::string to_string(NamedIdentity id);

IdentityReport check_named_identity(NamedIdentity id, Exponent order);

}  // namespace partitions
}  // namespace cubic
