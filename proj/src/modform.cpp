#include "cubic/modform.hpp"

#include <numeric>
#include <sstream>

#include "cubic/arith.hpp"

namespace cubic::modform {

namespace {

std::string rational_string(const mpq_class& x) {
  return x.get_den() == 1 ? x.get_num().get_str() : x.get_str();
}

// Product of the primes dividing x to an odd power.
mpz_class squarefree_part(mpz_class x) {
  mpz_class out = 1;
  for (mpz_class d = 2; d * d <= x; ++d) {
    unsigned parity = 0;
    while (mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
      x /= d;
      parity ^= 1u;
    }
    if (parity) out *= d;
  }
  if (x > 1) out *= x;
  return out;
}

}  // namespace

void EtaQuotient::validate() const {
  if (level < 1) throw ModformError("level must be >= 1");
  for (const auto& [delta, r] : exponents) {
    if (delta < 1 || level % delta != 0) {
      throw ModformError("delta=" + std::to_string(delta) + " does not divide level " +
                         std::to_string(level));
    }
  }
}

std::string EtaQuotient::exponents_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [delta, r] : exponents) {
    if (!first) os << ',';
    os << delta << ':' << r;
    first = false;
  }
  return os.str();
}

mpq_class weight(const EtaQuotient& eq) {
  eq.validate();
  mpz_class total = 0;
  for (const auto& [delta, r] : eq.exponents) total += static_cast<long>(r);
  mpq_class w(total, 2);
  w.canonicalize();
  return w;
}

mpz_class CharacterDescriptor::kernel() const {
  mpz_class k = squarefree_part(s_numerator) * squarefree_part(s_denominator);
  if (weight % 2 != 0) k = -k;
  return k;
}

std::string CharacterDescriptor::to_string() const {
  std::ostringstream os;
  os << "((" << (weight % 2 == 0 ? "" : "-") << s_numerator;
  if (s_denominator != 1) os << "/" << s_denominator;
  os << ")/.) kernel=" << kernel();
  return os.str();
}

CandidacyReport check_candidacy(const EtaQuotient& eq) {
  eq.validate();
  CandidacyReport report;
  report.weight = weight(eq);
  report.weight_integral = report.weight.get_den() == 1;
  mpz_class num = 1, den = 1;
  for (const auto& [delta, r] : eq.exponents) {
    report.sum_delta_r += delta * r;
    report.sum_level_over_delta_r += (eq.level / delta) * r;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(delta),
                  static_cast<unsigned long>(r < 0 ? -r : r));
    (r < 0 ? den : num) *= power;
  }
  if (report.weight_integral) {
    mpq_class s(num, den);
    s.canonicalize();
    report.character = CharacterDescriptor{report.weight.get_num().get_si(), s.get_num(), s.get_den()};
  }
  return report;
}

int character_eval(const CharacterDescriptor& ch, std::int64_t d) {
  mpz_class k = ch.kernel();
  if (!k.fits_slong_p()) {
    // (k|d) only depends on k modulo 8|d| once the sign of k is kept.
    if (d == 0) return 0;
    const mpz_class period = 8 * mpz_class(static_cast<long>(d < 0 ? -d : d));
    mpz_class r = abs(k) % period;
    if (r == 0) r = period;
    k = sgn(k) * r;
  }
  return arith::kronecker(k.get_si(), d);
}

bool CuspOrderTable::holomorphic() const {
  for (const auto& [d, order] : entries) {
    if (order < 0) return false;
  }
  return true;
}

std::string CuspOrderTable::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, order] : entries) {
    if (!first) os << ',';
    os << d << ':' << rational_string(order);
    first = false;
  }
  return os.str();
}

CuspOrderTable cusp_orders(const EtaQuotient& eq) {
  eq.validate();
  CuspOrderTable table;
  for (std::int64_t d : arith::divisors(eq.level)) {
    const std::int64_t g = std::gcd(d, eq.level / d);
    mpq_class sum = 0;
    for (const auto& [delta, r] : eq.exponents) {
      const std::int64_t gd = std::gcd(d, delta);
      sum += mpq_class(mpz_class(static_cast<long>(gd * gd * r)),
                       mpz_class(static_cast<long>(g * d * delta)));
    }
    mpq_class order = mpq_class(static_cast<long>(eq.level), 24) * sum;
    order.canonicalize();
    table.entries.emplace_back(d, order);
  }
  return table;
}

std::int64_t sturm_bound(std::int64_t weight, std::int64_t level) {
  if (weight < 1) throw ModformError("sturm_bound: weight must be >= 1");
  if (level < 1) throw ModformError("sturm_bound: level must be >= 1");
  mpq_class bound(mpz_class(static_cast<long>(weight * level)), 12);
  for (std::int64_t p : arith::prime_factors(level)) {
    bound *= mpq_class(static_cast<long>(p + 1), static_cast<unsigned long>(p));
  }
  bound.canonicalize();
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return floor_value.get_si();
}

TruncatedSeries hecke_tp(const TruncatedSeries& f, std::int64_t p, std::int64_t weight,
                         const CharacterDescriptor& ch) {
  if (!arith::is_prime(p)) throw ModformError("hecke_tp: " + std::to_string(p) + " is not prime");
  if (weight < 1) throw ModformError("hecke_tp: weight must be >= 1");
  if (f.offset() != 0) {
    throw ModformError("hecke_tp: series must have offset 0 (pad leading zeros first)");
  }
  if (f.order() < 1) throw ModformError("hecke_tp: series order must be >= 1");
  const Exponent order = (f.order() - 1) / p + 1;
  mpz_class twist;
  mpz_ui_pow_ui(twist.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(weight - 1));
  twist *= character_eval(ch, p);
  std::vector<mpz_class> out(static_cast<std::size_t>(order));
  for (Exponent n = 0; n < order; ++n) {
    mpz_class b = f.coefficient(p * n);
    if (n % p == 0 && twist != 0) b += twist * f.coefficient(n / p);
    out[static_cast<std::size_t>(n)] = std::move(b);
  }
  return TruncatedSeries(f.ring(), std::move(out), 0, order);
}

TruncatedSeries hecke_tp_factored(const TruncatedSeries& g, const TruncatedSeries& h_of_qp,
                                  std::int64_t p, std::int64_t weight,
                                  const CharacterDescriptor& ch) {
  if (g.ring() != h_of_qp.ring()) throw ModformError("hecke_tp_factored: ring mismatch");
  if (g.ring().is_exact() || g.ring().modulus() != static_cast<std::uint32_t>(p)) {
    throw ModformError("hecke_tp_factored: computation must be in Z/" + std::to_string(p) + "Z");
  }
  for (Exponent n = h_of_qp.offset(); n < h_of_qp.order(); ++n) {
    if (n % p != 0 && h_of_qp.residue(n) != 0) {
      throw ModformError("hecke_tp_factored: h has a nonzero coefficient at q^" +
                         std::to_string(n) + ", which is not a multiple of " + std::to_string(p));
    }
  }
  return mul(hecke_tp(g, p, weight, ch), extract_progression(h_of_qp, p, 0));
}

}  // namespace cubic::modform
