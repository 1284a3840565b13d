#pragma once

// Elementary number theory for the congruence families: quadratic characters,
// the Kronecker symbol, modular inverses, and the residue classes r that the
// nonresidue criteria select for a prime p.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic::arith {

class ArithError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertible : public ArithError {
 public:
  NotInvertible(std::int64_t a, std::int64_t m, std::int64_t gcd);
  std::int64_t gcd() const { return gcd_; }

 private:
  std::int64_t gcd_;
};

/// Deterministic trial division; adequate for the moduli this tool handles.
bool is_prime(std::int64_t n);

/// Throws ArithError unless p is an odd prime.
void require_odd_prime(std::int64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Legendre symbol by Euler's criterion: a^((p-1)/2) mod p mapped to {-1, 0, 1}.
int legendre_euler(std::int64_t a, std::int64_t p);

/// True iff a is nonzero mod p and not a square mod p. p must be an odd prime.
bool is_quadratic_nonresidue(std::int64_t a, std::int64_t p);

/// Kronecker symbol (a|n) on all of Z x Z.
int kronecker(std::int64_t a, std::int64_t n);

/// a^-1 mod m in [0, m-1]. Throws NotInvertible carrying gcd(a, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

enum class ResidueCriterion {
  cubic,      // 8r+1 must be a nonresidue mod p
  overcubic,  // r must be a nonresidue mod p
};

std::string to_string(ResidueCriterion c);

struct ResidueClassReport {
  std::int64_t p = 0;
  ResidueCriterion criterion = ResidueCriterion::cubic;
  std::vector<std::int64_t> admissible;
  /// r -> Legendre symbol of the tested quantity (8r+1 or r) mod p.
  std::map<std::int64_t, int> justification;

  /// The quantity whose quadratic character decides r.
  std::int64_t tested_value(std::int64_t r) const;
};

ResidueClassReport admissible_residues(std::int64_t p, ResidueCriterion criterion);

}  // namespace cubic::arith
