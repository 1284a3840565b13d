#include "cubic/arith.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace cubic::arith {

NotInvertible::NotInvertible(std::int64_t a, std::int64_t m, std::int64_t gcd)
    : ArithError(std::to_string(a) + " is not invertible modulo " + std::to_string(m) +
                 " (gcd = " + std::to_string(gcd) + ")"),
      gcd_(gcd) {}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw ArithError(std::to_string(p) + " is not an odd prime");
  }
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % m;
  while (exp > 0) {
    if (exp & 1u) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

std::uint64_t non_negative_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

}  // namespace

int legendre_euler(std::int64_t a, std::int64_t p) {
  require_odd_prime(p);
  const std::uint64_t x = non_negative_mod(a, p);
  if (x == 0) return 0;
  const std::uint64_t e = pow_mod(x, static_cast<std::uint64_t>(p - 1) / 2, static_cast<std::uint64_t>(p));
  return e == 1 ? 1 : -1;
}

bool is_quadratic_nonresidue(std::int64_t a, std::int64_t p) { return legendre_euler(a, p) == -1; }

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  // Work with unsigned magnitudes so INT64_MIN is harmless.
  std::uint64_t un = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  if (n < 0 && a < 0) result = -result;  // (a|-1)
  const int twos = std::countr_zero(un);
  un >>= twos;
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    const std::uint64_t a8 = non_negative_mod(a, 8);
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a|un) for odd un.
  std::uint64_t x = a >= 0 ? static_cast<std::uint64_t>(a) % un
                           : (un - (0 - static_cast<std::uint64_t>(a)) % un) % un;
  std::uint64_t y = un;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::uint64_t r = y % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) result = -result;
    x %= y;
  }
  return y == 1 ? result : 0;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 2) throw ArithError("modulus must be >= 2, got " + std::to_string(m));
  std::int64_t r0 = m, r1 = static_cast<std::int64_t>(non_negative_mod(a, m));
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 != 1) throw NotInvertible(a, m, r0);
  return t0 < 0 ? t0 + m : t0;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw ArithError("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n < 1) throw ArithError("prime_factors: n must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string to_string(ResidueCriterion c) {
  return c == ResidueCriterion::cubic ? "cubic" : "overcubic";
}

std::int64_t ResidueClassReport::tested_value(std::int64_t r) const {
  return criterion == ResidueCriterion::cubic ? 8 * r + 1 : r;
}

ResidueClassReport admissible_residues(std::int64_t p, ResidueCriterion criterion) {
  require_odd_prime(p);
  ResidueClassReport report;
  report.p = p;
  report.criterion = criterion;
  for (std::int64_t r = 1; r <= p - 1; ++r) {
    const int symbol = legendre_euler(report.tested_value(r), p);
    report.justification[r] = symbol;
    if (symbol == -1) report.admissible.push_back(r);
  }
  return report;
}

}  // namespace cubic::arith
