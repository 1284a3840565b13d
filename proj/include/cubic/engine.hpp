#pragma once

// Congruence claims and their numerical verification, the theorem families
// that generate claims from residue criteria, empirical congruence search,
// and Sturm-bound certificates for the two isolated congruences.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubic/modform.hpp"
#include "cubic/partitions.hpp"
#include "cubic/series.hpp"

namespace cubic::engine {

/// count(family, p*n + r) == 0 (mod m) for all n >= 0.
struct CongruenceClaim {
  PartitionFamily family;
  std::int64_t modulus = 2;
  std::int64_t progression = 1;
  std::int64_t residue = 0;

  void validate() const;
  std::string to_string() const;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

/// Orders by (kind, colors, progression, residue, modulus).
bool claim_less(const CongruenceClaim& a, const CongruenceClaim& b);

enum class Verdict { holds_up_to_bound, refuted };

std::string to_string(Verdict v);

struct Witness {
  std::int64_t index = 0;        // p*n + r
  std::uint32_t value_mod = 0;   // count(index) mod m, nonzero
};

struct VerificationResult {
  CongruenceClaim claim;
  std::int64_t n_max = 0;
  std::int64_t values_checked = 0;
  Verdict verdict = Verdict::holds_up_to_bound;
  std::optional<Witness> witness;
};

/// Scans every index p*n + r <= n_max. The witness, if any, is the smallest.
VerificationResult verify_claim(const CongruenceClaim& claim, std::int64_t n_max);

/// Same scan over a precomputed series (ring Z/mZ, order > n_max).
VerificationResult verify_claim_on_series(const CongruenceClaim& claim,
                                          const TruncatedSeries& series, std::int64_t n_max);

/// Verifies many claims, expanding each (family, modulus) series once.
/// Results come back in input order.
std::vector<VerificationResult> verify_claims(std::span<const CongruenceClaim> claims,
                                              std::int64_t n_max, unsigned threads = 1);

enum class TheoremId {
  thm_1_1,   // a_2(5^j n + d_j) mod 5^floor(j/2), d_j = 8^-1 mod 5^j
  thm_1_2,   // a_{p-1}(pn + r) mod p, 8r+1 a nonresidue
  cor_1_3,   // a_{kp-1}(pn + r) mod p, same r
  thm_1_5,   // a_3(7n+4) mod 7, a_5(11n+10) mod 11
  thm_4_1,   // overcubic a_{kp-1}(pn + r) mod p, r a nonresidue
  remarks,   // a_{pj+1} inherits p(5n+4), p(7n+5), p(11n+6)
};

/// Accepts 1.1, 1.2, cor1.3 (or cor-1.3), 1.5, 4.1, remarks.
TheoremId parse_theorem_id(const std::string& text);
std::string to_string(TheoremId id);

/// The claims a theorem asserts for prime p and multiplier k (k is j for 1.1
/// and the remarks). Theorem 1.1 with j = 1 is vacuous and yields no claims.
std::vector<CongruenceClaim> theorem_claims(TheoremId id, std::int64_t p, std::int64_t k);

std::vector<VerificationResult> verify_theorem_family(TheoremId id, std::int64_t p,
                                                      std::int64_t k, std::int64_t n_max,
                                                      unsigned threads = 1);

struct SearchOptions {
  std::int64_t c_max = 6;
  std::vector<std::int64_t> primes{3, 5, 7, 11};
  std::int64_t n_max = 2000;
  std::int64_t min_confirmations = 10;
  unsigned threads = 1;
};

/// Empirical congruences count(pn + r) == 0 mod p for both family kinds,
/// c <= c_max, every listed prime p and r in [0, p-1]. Sorted by claim_less.
std::vector<CongruenceClaim> search_congruences(const SearchOptions& options);

// ---------------------------------------------------------------------------
// Sturm certificates

enum class IsolatedId { a3_mod7, a5_mod11 };

IsolatedId parse_isolated_id(const std::string& text);
std::string to_string(IsolatedId id);

/// Everything the certificate pipeline needs for one congruence.
struct ProofPlan {
  std::string id;
  modform::EtaQuotient eta;
  std::int64_t hecke_prime = 2;
  std::int64_t modulus = 2;
  /// Progression the T_p image encodes; cross-checked against count_direct.
  CongruenceClaim claim;
};

ProofPlan isolated_plan(IsolatedId id);

enum class CertificateVerdict { proven, failed };

std::string to_string(CertificateVerdict v);

struct SturmCertificate {
  std::string id;
  modform::EtaQuotient eta;
  mpq_class weight;
  std::optional<modform::CharacterDescriptor> character;
  modform::CuspOrderTable cusp_orders;
  std::int64_t sturm_bound = -1;
  std::int64_t prime = 0;
  std::int64_t modulus = 0;
  /// Residues of the T_p image at exponents 0..sturm_bound.
  std::vector<std::uint32_t> coefficients_checked;
  /// First progression values count(p*n + r) mod m from the combinatorial oracle.
  std::vector<std::uint32_t> oracle_values;
  CertificateVerdict verdict = CertificateVerdict::failed;
  std::string failure_stage;
  std::optional<std::pair<std::int64_t, std::uint32_t>> witness;  // (exponent, residue)
};

inline constexpr std::int64_t kOracleCrossCheckValues = 10;

SturmCertificate prove(const ProofPlan& plan);
SturmCertificate prove_isolated(IsolatedId id);

/// `key: value` lines in the fixed order id, level, weight, exponents,
/// character, cusp-orders, sturm-bound, prime, modulus, coefficients-checked,
/// verdict; then oracle-check, and failure-stage / witness for failures.
std::string to_text(const SturmCertificate& cert);

/// Splits certificate text into (key, value) pairs in file order.
std::vector<std::pair<std::string, std::string>> parse_certificate_text(const std::string& text);

}  // namespace cubic::engine
