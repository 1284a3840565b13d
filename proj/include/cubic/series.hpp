#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series over ZZ or Z/mZ.
 *
 * A TruncatedSeries stores the coefficients of q^offset .. q^(order-1). The
 * coefficients at exponents >= order are unknown, not zero, and every
 * operation propagates the truncation order pessimistically so that no
 * coefficient is ever reported beyond what its inputs determine.
 *
 * Exact coefficients are GMP integers; modular coefficients are reduced
 * 32-bit words and go through the kernels in simd/kernels.hpp.
 */

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cubic/ring.hpp"

namespace cubic {

using Exponent = std::int64_t;

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TruncatedSeries {
 public:
  using ExactCoeffs = std::vector<mpz_class>;
  using ModCoeffs = std::vector<std::uint32_t>;

  /// Empty series over ZZ with order 0.
  TruncatedSeries();

  /// Coefficients for exponents offset, offset+1, ...; anything missing below
  /// `order` is an explicit zero. Modular rings reduce the input.
  TruncatedSeries(Ring ring, std::vector<mpz_class> coeffs, Exponent offset, Exponent order);

  static TruncatedSeries from_integers(Ring ring, std::span<const std::int64_t> coeffs,
                                       Exponent offset, Exponent order);
  static TruncatedSeries zero(Ring ring, Exponent order);
  static TruncatedSeries one(Ring ring, Exponent order);
  /// q^k to the given order.
  static TruncatedSeries monomial(Ring ring, Exponent k, Exponent order);

  const Ring& ring() const { return ring_; }
  Exponent offset() const { return offset_; }
  Exponent order() const { return order_; }
  /// Number of stored coefficients, order - offset (or 0).
  std::size_t size() const;

  /// Coefficient at exponent n as an integer (the reduced representative for
  /// modular rings). Throws SeriesError when n is negative or >= order.
  mpz_class coefficient(Exponent n) const;

  /// Reduced residue at exponent n; modular rings only.
  std::uint32_t residue(Exponent n) const;

  bool is_zero() const;

  /// Same series reported with offset 0: exponents below the old offset
  /// become explicit zeros.
  TruncatedSeries with_zero_offset() const;

  /// Lowers the truncation order; orders above the current one are ignored.
  TruncatedSeries truncated(Exponent order) const;

  const ExactCoeffs& exact_coefficients() const;
  const ModCoeffs& modular_coefficients() const;

  /// All coefficients from exponent 0 to order-1, as integers.
  std::vector<mpz_class> dense_coefficients() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string(std::size_t max_terms = 12) const;

 private:
  struct Raw {};
  TruncatedSeries(Raw, Ring ring, Exponent offset, Exponent order, ExactCoeffs coeffs);
  TruncatedSeries(Raw, Ring ring, Exponent offset, Exponent order, ModCoeffs coeffs);

  friend class SeriesAccess;

  Ring ring_;
  Exponent offset_ = 0;
  Exponent order_ = 0;
  std::variant<ExactCoeffs, ModCoeffs> coeffs_;
};

/// Sum; offset is the smaller offset and order the smaller order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const mpz_class& factor);

/// Multiplication by q^k, k >= 0.
TruncatedSeries shift(const TruncatedSeries& a, Exponent k);

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Reciprocal. Requires offset 0 and a unit constant term.
TruncatedSeries inverse(const TruncatedSeries& a);

/// a^e by repeated squaring; e < 0 goes through inverse().
TruncatedSeries pow(const TruncatedSeries& a, std::int64_t e);

/// q -> q^k.
TruncatedSeries substitute_power(const TruncatedSeries& a, Exponent k);

/// Reduction of an exact series into Z/mZ.
TruncatedSeries reduce_mod(const TruncatedSeries& a, std::int64_t m);

/// Coefficient n of the result is coefficient p*n + r of a.
TruncatedSeries extract_progression(const TruncatedSeries& a, Exponent p, Exponent r);

}  // namespace cubic
