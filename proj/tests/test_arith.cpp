#include <doctest.h>

#include <random>

#include "cubic/arith.hpp"
#include "oracles.hpp"

using namespace cubic::arith;

TEST_SUITE("arith") {

TEST_CASE("primality") {
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13, 97, 7919, 2147483647};
  for (auto p : primes) CHECK(is_prime(p));
  for (std::int64_t n : std::vector<std::int64_t>{-7, 0, 1, 4, 9, 91, 7917, 2147483649ll}) CHECK_FALSE(is_prime(n));
}

TEST_CASE("quadratic nonresidues") {
  CHECK(is_quadratic_nonresidue(2, 5));
  CHECK_FALSE(is_quadratic_nonresidue(4, 5));
  CHECK_FALSE(is_quadratic_nonresidue(0, 7));
  CHECK_FALSE(is_quadratic_nonresidue(14, 7));
  CHECK(is_quadratic_nonresidue(-1, 7));
  CHECK_THROWS_AS(is_quadratic_nonresidue(1, 2), ArithError);
  CHECK_THROWS_AS(is_quadratic_nonresidue(1, 9), ArithError);
}

TEST_CASE("admissible residues") {
  CHECK(admissible_residues(3, ResidueCriterion::cubic).admissible == std::vector<std::int64_t>{2});
  CHECK(admissible_residues(5, ResidueCriterion::cubic).admissible == std::vector<std::int64_t>{2, 4});
  CHECK(admissible_residues(3, ResidueCriterion::overcubic).admissible == std::vector<std::int64_t>{2});
  CHECK(admissible_residues(7, ResidueCriterion::cubic).admissible == std::vector<std::int64_t>{2, 4, 5});
  const auto report = admissible_residues(7, ResidueCriterion::cubic);
  // 8*6+1 = 49 = 0 mod 7 is rejected, with symbol 0
  CHECK(report.justification.at(6) == 0);
  CHECK_THROWS_AS(admissible_residues(9, ResidueCriterion::cubic), ArithError);
}

TEST_CASE("property: residue reports are consistent with brute-force squares") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (std::int64_t x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
    const auto over = admissible_residues(p, ResidueCriterion::overcubic);
    CHECK(over.admissible.size() == static_cast<std::size_t>((p - 1) / 2));
    const auto cub = admissible_residues(p, ResidueCriterion::cubic);
    for (std::int64_t r = 1; r < p; ++r) {
      const std::int64_t t = (8 * r + 1) % p;
      const bool expected = t != 0 && !square[static_cast<std::size_t>(t)];
      const bool admitted = std::find(cub.admissible.begin(), cub.admissible.end(), r) != cub.admissible.end();
      CHECK(admitted == expected);
    }
  }
}

TEST_CASE("kronecker") {
  for (std::int64_t a : {-9, -1, 0, 1, 2, 17}) CHECK(kronecker(a, 1) == 1);
  CHECK(kronecker(-1, 3) == -1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(2, 3) == -1);
  CHECK(kronecker(3, 2) == -1);
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(4, 2) == 0);
  CHECK(kronecker(-5, -1) == -1);
  CHECK(kronecker(5, 0) == 0);
  CHECK(kronecker(-1, 0) == 1);
}

TEST_CASE("property: Kronecker agrees with Euler's criterion and GMP, and is multiplicative") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> da(-100000, 100000), dn(-5000, 5000);
  const std::vector<std::int64_t> primes{3, 5, 7, 11, 13, 101, 7919};
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t a = da(rng), b = da(rng), n = dn(rng);
    CHECK(kronecker(a, n) == oracle::gmp_kronecker(a, n));
    CHECK(kronecker(a, n) * kronecker(b, n) == kronecker(a * b, n));
    const std::int64_t p = primes[static_cast<std::size_t>(trial) % primes.size()];
    const mpz_class euler = oracle::pow_mod_mpz(((a % p) + p) % p, (p - 1) / 2, p);
    const int expected = euler == 0 ? 0 : (euler == 1 ? 1 : -1);
    CHECK(kronecker(a, p) == expected);
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(8, 25) == 22);
  CHECK(mod_inverse(8, 5) == 2);
  CHECK(mod_inverse(1, 97) == 1);
  CHECK(mod_inverse(-3, 7) == 2);
  try {
    mod_inverse(10, 25);
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& e) {
    CHECK(e.gcd() == 5);
  }
  CHECK_THROWS_AS(mod_inverse(3, 1), ArithError);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 100000);
    const std::int64_t a = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m));
    if (std::gcd(a, m) != 1) continue;
    const std::int64_t inv = mod_inverse(a, m);
    CHECK((static_cast<__int128>(a) * inv) % m == 1 % m);
    CHECK(mod_inverse(inv, m) == a % m);
  }
}

TEST_CASE("divisors and prime factors") {
  CHECK(divisors(8) == std::vector<std::int64_t>{1, 2, 4, 8});
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(prime_factors(1).empty());
}

}  // TEST_SUITE
