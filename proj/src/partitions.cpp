#include "cubic/partitions.hpp"

#include <sstream>
#include <stdexcept>

#include "cubic/arith.hpp"
#include "cubic/qfunctions.hpp"

namespace cubic {

PartitionFamily PartitionFamily::cubic(std::int64_t c) {
  if (c < 1) throw std::invalid_argument("number of colors must be >= 1");
  return {FamilyKind::cubic, c};
}

PartitionFamily PartitionFamily::overcubic(std::int64_t c) {
  if (c < 1) throw std::invalid_argument("number of colors must be >= 1");
  return {FamilyKind::overcubic, c};
}

std::string PartitionFamily::to_string() const {
  return ::cubic::to_string(kind) + " c=" + std::to_string(colors);
}

std::string to_string(FamilyKind kind) {
  return kind == FamilyKind::cubic ? "cubic" : "overcubic";
}

FamilyKind parse_family_kind(const std::string& text) {
  if (text == "cubic") return FamilyKind::cubic;
  if (text == "overcubic") return FamilyKind::overcubic;
  throw std::invalid_argument("unknown family '" + text + "' (expected cubic or overcubic)");
}

namespace partitions {

using q::euler_product;

TruncatedSeries generating_series(const PartitionFamily& family, Exponent order, Ring ring) {
  const std::int64_t c = family.colors;
  if (c < 1) throw std::invalid_argument("number of colors must be >= 1");
  if (family.kind == FamilyKind::cubic) {
    const TruncatedSeries denominator =
        mul(euler_product(1, order, ring), pow(euler_product(2, order, ring), c - 1));
    return inverse(denominator);
  }
  // c = 1 gives f2^(-1) in the denominator, i.e. f2 in the numerator.
  TruncatedSeries numerator = mul(pow(euler_product(4, order, ring), c - 1),
                                  pow(euler_product(2, order, ring), -(2 * c - 3)));
  return mul(numerator, pow(euler_product(1, order, ring), -2));
}

std::vector<mpz_class> count_direct_table(const PartitionFamily& family, std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("n must be >= 0");
  if (family.colors < 1) throw std::invalid_argument("number of colors must be >= 1");
  const auto n = static_cast<std::size_t>(n_max);
  std::vector<mpz_class> ways(n + 1);
  ways[0] = 1;
  for (std::size_t v = 1; v <= n; ++v) {
    const std::int64_t kinds = (v % 2 == 1) ? 1 : family.colors;
    for (std::int64_t k = 0; k < kinds; ++k) {
      // any number of plain copies of this kind
      for (std::size_t s = v; s <= n; ++s) ways[s] += ways[s - v];
      if (family.kind == FamilyKind::overcubic) {
        // at most one overlined copy
        for (std::size_t s = n; s >= v; --s) ways[s] += ways[s - v];
      }
    }
  }
  return ways;
}

mpz_class count_direct(const PartitionFamily& family, std::int64_t n) {
  return count_direct_table(family, n).back();
}

std::string IdentityReport::to_string() const {
  std::ostringstream os;
  if (equal) {
    os << "equal to order " << order;
  } else {
    os << "unequal: first mismatch at q^" << *first_mismatch << " (lhs " << lhs_at_mismatch
       << ", rhs " << rhs_at_mismatch << ")";
  }
  return os.str();
}

IdentityReport compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (lhs.ring() != rhs.ring()) throw SeriesError("compare_series: ring mismatch");
  IdentityReport report;
  report.order = std::min(lhs.order(), rhs.order());
  for (Exponent n = 0; n < report.order; ++n) {
    mpz_class a = lhs.coefficient(n);
    mpz_class b = rhs.coefficient(n);
    if (a != b) {
      report.equal = false;
      report.first_mismatch = n;
      report.lhs_at_mismatch = std::move(a);
      report.rhs_at_mismatch = std::move(b);
      break;
    }
  }
  return report;
}

TruncatedSeries functional_equation_rhs(std::int64_t c, std::int64_t psi_q2_exponent,
                                        Exponent order) {
  const Ring zz = Ring::integers();
  const Exponent half = (order + 1) / 2;
  const TruncatedSeries psi_q2 = substitute_power(q::psi(half, zz), 2);
  const TruncatedSeries f_q2 =
      substitute_power(generating_series(PartitionFamily::cubic(c), half, zz), 2);
  TruncatedSeries rhs = mul(q::psi(order, zz), pow(psi_q2, psi_q2_exponent));
  return mul(rhs, pow(f_q2, 2)).truncated(order);
}

IdentityReport check_functional_equation(std::int64_t c, Exponent order) {
  if (c < 1) throw std::invalid_argument("number of colors must be >= 1");
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const TruncatedSeries lhs =
      generating_series(PartitionFamily::cubic(c), order, Ring::integers());
  return compare_series(lhs, functional_equation_rhs(c, c - 1, order));
}

TruncatedSeries lemma_product(std::int64_t p, Exponent order) {
  const Ring zz = Ring::integers();
  TruncatedSeries product = q::psi(order, zz);
  // psi(q^(2^i)) = 1 + O(q^(2^i)), so factors with 2^i >= order are 1 here.
  for (Exponent step = 2, weight = p; step < order; step *= 2, weight *= 2) {
    const Exponent inner = (order + step - 1) / step;
    const TruncatedSeries factor = substitute_power(q::psi(inner, zz), step).truncated(order);
    product = mul(product, pow(factor, weight));
  }
  return product;
}

IdentityReport check_lemma_product(std::int64_t p, Exponent order) {
  arith::require_odd_prime(p);
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const TruncatedSeries lhs =
      generating_series(PartitionFamily::cubic(p - 1), order, Ring::integers());
  return compare_series(lhs, lemma_product(p, order));
}

NamedIdentity parse_named_identity(const std::string& id) {
  if (id == "ramanujan-p5n4") return NamedIdentity::ramanujan_p5n4;
  if (id == "chan-a2-3n2") return NamedIdentity::chan_a2_3n2;
  throw std::invalid_argument("unknown identity '" + id +
                              "' (expected ramanujan-p5n4 or chan-a2-3n2)");
}

std::string to_string(NamedIdentity id) {
  return id == NamedIdentity::ramanujan_p5n4 ? "ramanujan-p5n4" : "chan-a2-3n2";
}

IdentityReport check_named_identity(NamedIdentity id, Exponent order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const Ring zz = Ring::integers();
  if (id == NamedIdentity::ramanujan_p5n4) {
    const TruncatedSeries counts = generating_series(PartitionFamily::cubic(1), 5 * order, zz);
    const TruncatedSeries lhs = extract_progression(counts, 5, 4);
    const TruncatedSeries rhs =
        scale(mul(pow(euler_product(5, order, zz), 5), pow(euler_product(1, order, zz), -6)), 5);
    return compare_series(lhs, rhs);
  }
  const TruncatedSeries counts = generating_series(PartitionFamily::cubic(2), 3 * order, zz);
  const TruncatedSeries lhs = extract_progression(counts, 3, 2);
  TruncatedSeries rhs =
      mul(pow(euler_product(3, order, zz), 3), pow(euler_product(6, order, zz), 3));
  rhs = mul(rhs, pow(mul(euler_product(1, order, zz), euler_product(2, order, zz)), -4));
  return compare_series(lhs, scale(rhs, 3));
}

}  // namespace partitions
}  // namespace cubic
