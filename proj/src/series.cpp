#include "cubic/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cubic/simd/kernels.hpp"

namespace cubic {

class SeriesAccess {
 public:
  static TruncatedSeries exact(Exponent offset, Exponent order, TruncatedSeries::ExactCoeffs c) {
    return TruncatedSeries(TruncatedSeries::Raw{}, Ring::integers(), offset, order, std::move(c));
  }
  static TruncatedSeries modular(Ring ring, Exponent offset, Exponent order,
                                 TruncatedSeries::ModCoeffs c) {
    return TruncatedSeries(TruncatedSeries::Raw{}, ring, offset, order, std::move(c));
  }
};

namespace {

std::size_t span_length(Exponent offset, Exponent order) {
  return order > offset ? static_cast<std::size_t>(order - offset) : 0;
}

std::uint32_t reduce(const mpz_class& x, std::uint32_t m) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), m));
}

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
  if (a.ring() != b.ring()) {
    throw SeriesError(std::string(op) + ": ring mismatch (" + a.ring().to_string() + " vs " +
                      b.ring().to_string() + ")");
  }
}

// Inverse of a mod m by extended Euclid; 0 when a is not a unit.
std::uint32_t unit_inverse(std::uint32_t a, std::uint32_t m) {
  std::int64_t r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1) return 0;
  if (t0 < 0) t0 += m;
  return static_cast<std::uint32_t>(t0);
}

}  // namespace

TruncatedSeries::TruncatedSeries() : ring_(Ring::integers()), coeffs_(ExactCoeffs{}) {}

TruncatedSeries::TruncatedSeries(Raw, Ring ring, Exponent offset, Exponent order, ExactCoeffs c)
    : ring_(ring), offset_(offset), order_(order), coeffs_(std::move(c)) {}

TruncatedSeries::TruncatedSeries(Raw, Ring ring, Exponent offset, Exponent order, ModCoeffs c)
    : ring_(ring), offset_(offset), order_(order), coeffs_(std::move(c)) {}

TruncatedSeries::TruncatedSeries(Ring ring, std::vector<mpz_class> coeffs, Exponent offset,
                                 Exponent order)
    : ring_(ring), offset_(offset), order_(order) {
  if (offset < 0) throw SeriesError("offset must be >= 0");
  if (order < 0) throw SeriesError("order must be >= 0");
  const std::size_t len = span_length(offset, order);
  if (coeffs.size() > len) {
    throw SeriesError("coefficient at exponent " + std::to_string(offset + Exponent(len)) +
                      " lies at or beyond the truncation order " + std::to_string(order));
  }
  coeffs.resize(len);
  if (ring.is_exact()) {
    coeffs_ = std::move(coeffs);
  } else {
    ModCoeffs reduced(len);
    for (std::size_t i = 0; i < len; ++i) reduced[i] = reduce(coeffs[i], ring.modulus());
    coeffs_ = std::move(reduced);
  }
}

TruncatedSeries TruncatedSeries::from_integers(Ring ring, std::span<const std::int64_t> coeffs,
                                               Exponent offset, Exponent order) {
  std::vector<mpz_class> big;
  big.reserve(coeffs.size());
  for (std::int64_t v : coeffs) big.emplace_back(static_cast<long>(v));
  return TruncatedSeries(ring, std::move(big), offset, order);
}

TruncatedSeries TruncatedSeries::zero(Ring ring, Exponent order) {
  return TruncatedSeries(ring, {}, 0, order);
}

TruncatedSeries TruncatedSeries::one(Ring ring, Exponent order) { return monomial(ring, 0, order); }

TruncatedSeries TruncatedSeries::monomial(Ring ring, Exponent k, Exponent order) {
  if (k < 0) throw SeriesError("monomial exponent must be >= 0");
  if (k >= order) return TruncatedSeries(ring, {}, std::min(k, order), order);
  return TruncatedSeries(ring, {mpz_class(1)}, k, order);
}

std::size_t TruncatedSeries::size() const { return span_length(offset_, order_); }

mpz_class TruncatedSeries::coefficient(Exponent n) const {
  if (n < 0 || n >= order_) {
    throw SeriesError("coefficient at exponent " + std::to_string(n) +
                      " is outside the known range [0, " + std::to_string(order_) + ")");
  }
  if (n < offset_) return 0;
  const auto i = static_cast<std::size_t>(n - offset_);
  if (ring_.is_exact()) return std::get<ExactCoeffs>(coeffs_)[i];
  return mpz_class(static_cast<unsigned long>(std::get<ModCoeffs>(coeffs_)[i]));
}

std::uint32_t TruncatedSeries::residue(Exponent n) const {
  if (!ring_.is_modular()) throw SeriesError("residue() requires a modular ring");
  if (n < 0 || n >= order_) {
    throw SeriesError("coefficient at exponent " + std::to_string(n) +
                      " is outside the known range [0, " + std::to_string(order_) + ")");
  }
  if (n < offset_) return 0;
  return std::get<ModCoeffs>(coeffs_)[static_cast<std::size_t>(n - offset_)];
}

bool TruncatedSeries::is_zero() const {
  return std::visit(
      [](const auto& v) {
        return std::all_of(v.begin(), v.end(), [](const auto& c) { return c == 0; });
      },
      coeffs_);
}

TruncatedSeries TruncatedSeries::with_zero_offset() const {
  if (offset_ == 0) return *this;
  const std::size_t lead = static_cast<std::size_t>(std::min(offset_, order_));
  return std::visit(
      [&](const auto& v) {
        std::decay_t<decltype(v)> out(lead);
        out.insert(out.end(), v.begin(), v.end());
        return TruncatedSeries(Raw{}, ring_, 0, order_, std::move(out));
      },
      coeffs_);
}

TruncatedSeries TruncatedSeries::truncated(Exponent order) const {
  if (order >= order_) return *this;
  if (order < 0) throw SeriesError("order must be >= 0");
  const Exponent offset = std::min(offset_, order);
  const std::size_t len = span_length(offset, order);
  return std::visit(
      [&](const auto& v) {
        std::decay_t<decltype(v)> out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len));
        return TruncatedSeries(Raw{}, ring_, offset, order, std::move(out));
      },
      coeffs_);
}

const TruncatedSeries::ExactCoeffs& TruncatedSeries::exact_coefficients() const {
  if (!ring_.is_exact()) throw SeriesError("series is not over the integers");
  return std::get<ExactCoeffs>(coeffs_);
}

const TruncatedSeries::ModCoeffs& TruncatedSeries::modular_coefficients() const {
  if (!ring_.is_modular()) throw SeriesError("series is not over a modular ring");
  return std::get<ModCoeffs>(coeffs_);
}

std::vector<mpz_class> TruncatedSeries::dense_coefficients() const {
  std::vector<mpz_class> out(static_cast<std::size_t>(order_));
  for (Exponent n = offset_; n < order_; ++n) out[static_cast<std::size_t>(n)] = coefficient(n);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.ring_ != b.ring_ || a.order_ != b.order_) return false;
  const Exponent lo = std::min(a.offset_, b.offset_);
  for (Exponent n = lo; n < a.order_; ++n) {
    if (a.coefficient(n) != b.coefficient(n)) return false;
  }
  return true;
}

std::string TruncatedSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (Exponent n = offset_; n < order_ && shown < max_terms; ++n) {
    const mpz_class c = coefficient(n);
    if (c == 0) continue;
    if (shown++ > 0) os << " + ";
    os << c;
    if (n > 0) os << "*q^" << n;
  }
  if (shown == 0) os << "0";
  os << " + O(q^" << order_ << ") over " << ring_.to_string();
  return os.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "add");
  const Exponent order = std::min(a.order(), b.order());
  const Exponent offset = std::min({a.offset(), b.offset(), order});
  const std::size_t len = span_length(offset, order);
  if (a.ring().is_exact()) {
    TruncatedSeries::ExactCoeffs out(len);
    for (std::size_t i = 0; i < len; ++i) {
      const Exponent n = offset + Exponent(i);
      out[i] = a.coefficient(n) + b.coefficient(n);
    }
    return SeriesAccess::exact(offset, order, std::move(out));
  }
  const std::uint64_t m = a.ring().modulus();
  TruncatedSeries::ModCoeffs out(len);
  for (std::size_t i = 0; i < len; ++i) {
    const Exponent n = offset + Exponent(i);
    out[i] = static_cast<std::uint32_t>((std::uint64_t(a.residue(n)) + b.residue(n)) % m);
  }
  return SeriesAccess::modular(a.ring(), offset, order, std::move(out));
}

TruncatedSeries negate(const TruncatedSeries& a) { return scale(a, -1); }

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, negate(b));
}

TruncatedSeries scale(const TruncatedSeries& a, const mpz_class& factor) {
  if (a.ring().is_exact()) {
    TruncatedSeries::ExactCoeffs out = a.exact_coefficients();
    for (auto& c : out) c *= factor;
    return SeriesAccess::exact(a.offset(), a.order(), std::move(out));
  }
  const std::uint32_t m = a.ring().modulus();
  const std::uint64_t f = reduce(factor, m);
  TruncatedSeries::ModCoeffs out = a.modular_coefficients();
  for (auto& c : out) c = static_cast<std::uint32_t>(c * f % m);
  return SeriesAccess::modular(a.ring(), a.offset(), a.order(), std::move(out));
}

TruncatedSeries shift(const TruncatedSeries& a, Exponent k) {
  if (k < 0) throw SeriesError("shift amount must be >= 0");
  if (a.ring().is_exact()) {
    return SeriesAccess::exact(a.offset() + k, a.order() + k, a.exact_coefficients());
  }
  return SeriesAccess::modular(a.ring(), a.offset() + k, a.order() + k, a.modular_coefficients());
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ring(a, b, "mul");
  const Exponent offset = a.offset() + b.offset();
  const Exponent order = std::min(a.order() + b.offset(), b.order() + a.offset());
  const std::size_t len = span_length(offset, order);
  if (a.ring().is_modular()) {
    auto out = simd::convolve_mod(a.modular_coefficients(), b.modular_coefficients(), len,
                                  a.ring().modulus());
    return SeriesAccess::modular(a.ring(), std::min(offset, order), order, std::move(out));
  }
  const auto& x = a.exact_coefficients();
  const auto& y = b.exact_coefficients();
  TruncatedSeries::ExactCoeffs out(len);
  const std::size_t rows = std::min(x.size(), len);
  for (std::size_t i = 0; i < rows; ++i) {
    if (x[i] == 0) continue;
    const std::size_t cols = std::min(y.size(), len - i);
    for (std::size_t j = 0; j < cols; ++j) {
      if (y[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return SeriesAccess::exact(std::min(offset, order), order, std::move(out));
}

TruncatedSeries inverse(const TruncatedSeries& a) {
  if (a.offset() != 0) {
    throw SeriesError("inverse: series has offset " + std::to_string(a.offset()) +
                      " (constant term is zero, not a unit)");
  }
  const std::size_t len = a.size();
  if (len == 0) return a;
  if (a.ring().is_modular()) {
    const auto& c = a.modular_coefficients();
    const std::uint32_t m = a.ring().modulus();
    const std::uint32_t inv0 = unit_inverse(c[0], m);
    if (inv0 == 0) {
      throw SeriesError("inverse: constant coefficient " + std::to_string(c[0]) +
                        " is not a unit modulo " + std::to_string(m));
    }
    return SeriesAccess::modular(a.ring(), 0, a.order(), simd::reciprocal_mod(c, len, m, inv0));
  }
  const auto& c = a.exact_coefficients();
  if (c[0] != 1 && c[0] != -1) {
    throw SeriesError("inverse: constant coefficient " + c[0].get_str() +
                      " is not a unit in ZZ");
  }
  const mpz_class& inv0 = c[0];  // +-1 is its own inverse
  std::vector<std::size_t> support;
  for (std::size_t i = 1; i < len; ++i) {
    if (c[i] != 0) support.push_back(i);
  }
  TruncatedSeries::ExactCoeffs out(len);
  out[0] = inv0;
  mpz_class acc;
  for (std::size_t n = 1; n < len; ++n) {
    acc = 0;
    for (std::size_t i : support) {
      if (i > n) break;
      mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), out[n - i].get_mpz_t());
    }
    out[n] = -inv0 * acc;
  }
  return SeriesAccess::exact(0, a.order(), std::move(out));
}

TruncatedSeries pow(const TruncatedSeries& a, std::int64_t e) {
  if (e < 0) {
    if (a.offset() != 0) {
      throw SeriesError("pow: negative exponent needs a series with offset 0");
    }
    return pow(inverse(a), -e);
  }
  TruncatedSeries result = TruncatedSeries::one(a.ring(), std::max<Exponent>(a.order() - a.offset(), 0));
  if (e == 0) return result;
  TruncatedSeries base = a;
  for (std::uint64_t k = static_cast<std::uint64_t>(e);;) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k == 0) break;
    base = mul(base, base);
  }
  return result;
}

TruncatedSeries substitute_power(const TruncatedSeries& a, Exponent k) {
  if (k < 1) throw SeriesError("substitute_power: k must be >= 1, got " + std::to_string(k));
  if (k == 1) return a;
  const Exponent offset = k * a.offset();
  const Exponent order = k * a.order();
  const std::size_t len = span_length(offset, order);
  const auto step = static_cast<std::size_t>(k);
  if (a.ring().is_exact()) {
    const auto& c = a.exact_coefficients();
    TruncatedSeries::ExactCoeffs out(len);
    for (std::size_t i = 0; i < c.size(); ++i) out[i * step] = c[i];
    return SeriesAccess::exact(offset, order, std::move(out));
  }
  const auto& c = a.modular_coefficients();
  TruncatedSeries::ModCoeffs out(len, 0);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * step] = c[i];
  return SeriesAccess::modular(a.ring(), offset, order, std::move(out));
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, std::int64_t m) {
  const Ring target = Ring::modulo(m);
  if (!a.ring().is_exact()) {
    throw SeriesError("reduce_mod: input must be over the integers, not " + a.ring().to_string());
  }
  const auto& c = a.exact_coefficients();
  TruncatedSeries::ModCoeffs out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = reduce(c[i], target.modulus());
  return SeriesAccess::modular(target, a.offset(), a.order(), std::move(out));
}

TruncatedSeries extract_progression(const TruncatedSeries& a, Exponent p, Exponent r) {
  if (p < 1) throw SeriesError("extract_progression: modulus must be >= 1");
  if (r < 0 || r >= p) throw SeriesError("extract_progression: residue must lie in [0, p-1]");
  const auto ceil_div = [](Exponent x, Exponent d) { return x <= 0 ? Exponent(0) : (x + d - 1) / d; };
  const Exponent order = ceil_div(a.order() - r, p);
  const Exponent offset = std::min(ceil_div(a.offset() - r, p), order);
  const std::size_t len = span_length(offset, order);
  if (a.ring().is_exact()) {
    TruncatedSeries::ExactCoeffs out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = a.coefficient(p * (offset + Exponent(i)) + r);
    return SeriesAccess::exact(offset, order, std::move(out));
  }
  TruncatedSeries::ModCoeffs out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = a.residue(p * (offset + Exponent(i)) + r);
  return SeriesAccess::modular(a.ring(), offset, order, std::move(out));
}

}  // namespace cubic
