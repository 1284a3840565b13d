#include "cubic/qfunctions.hpp"

#include <algorithm>
#include <string>

namespace cubic::q {

namespace {

TruncatedSeries pentagonal(Exponent order, Ring ring) {
  std::vector<mpz_class> c(static_cast<std::size_t>(std::max<Exponent>(order, 0)));
  if (order > 0) c[0] = 1;
  for (Exponent j = 1;; ++j) {
    const Exponent lo = j * (3 * j - 1) / 2;
    if (lo >= order) break;
    const long sign = (j % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(lo)] = sign;
    const Exponent hi = lo + j;
    if (hi < order) c[static_cast<std::size_t>(hi)] = sign;
  }
  return TruncatedSeries(ring, std::move(c), 0, std::max<Exponent>(order, 0));
}

}  // namespace

TruncatedSeries euler_product(Exponent k, Exponent order, Ring ring) {
  if (k < 1) throw EtaError("euler_product: k must be >= 1, got " + std::to_string(k));
  const Exponent base_order = (std::max<Exponent>(order, 0) + k - 1) / k;
  return substitute_power(pentagonal(base_order, ring), k).truncated(order);
}

TruncatedSeries psi(Exponent order, Ring ring) {
  std::vector<mpz_class> c(static_cast<std::size_t>(std::max<Exponent>(order, 0)));
  for (Exponent k = 0, t = 0; t < order; ++k, t += k) c[static_cast<std::size_t>(t)] = 1;
  return TruncatedSeries(ring, std::move(c), 0, std::max<Exponent>(order, 0));
}

TruncatedSeries phi(Exponent order, Ring ring) {
  std::vector<mpz_class> c(static_cast<std::size_t>(std::max<Exponent>(order, 0)));
  if (order > 0) c[0] = 1;
  for (Exponent j = 1; j * j < order; ++j) c[static_cast<std::size_t>(j * j)] = 2;
  return TruncatedSeries(ring, std::move(c), 0, std::max<Exponent>(order, 0));
}

Exponent eta_leading_exponent(std::int64_t level,
                              const std::map<std::int64_t, std::int64_t>& exponents) {
  if (level < 1) throw EtaError("eta-quotient level must be >= 1");
  std::int64_t weighted = 0;
  bool any = false;
  for (const auto& [delta, r] : exponents) {
    if (delta < 1 || level % delta != 0) {
      throw EtaError("eta factor delta=" + std::to_string(delta) + " does not divide level " +
                     std::to_string(level));
    }
    any = any || r != 0;
    weighted += delta * r;
  }
  if (!any) throw EtaError("eta-quotient has no nonzero exponent");
  const std::int64_t residue = ((weighted % 24) + 24) % 24;
  if (residue != 0) {
    throw EtaError("sum of delta*r_delta is " + std::to_string(weighted) + " = " +
                   std::to_string(residue) + " mod 24; leading exponent is not integral");
  }
  if (weighted < 0) {
    throw EtaError("leading exponent " + std::to_string(weighted / 24) + " is negative");
  }
  return weighted / 24;
}

TruncatedSeries eta_expansion(const EtaExpansionRequest& req) {
  const Exponent lead = eta_leading_exponent(req.level, req.exponents);
  const Exponent rel = req.order - lead;
  if (rel <= 0) {
    return TruncatedSeries(req.ring, {}, std::clamp<Exponent>(lead, 0, std::max<Exponent>(req.order, 0)),
                           std::max<Exponent>(req.order, 0));
  }
  TruncatedSeries product = TruncatedSeries::one(req.ring, rel);
  for (const auto& [delta, r] : req.exponents) {
    if (r == 0) continue;
    product = mul(product, pow(euler_product(delta, rel, req.ring), r));
  }
  return shift(product, lead);
}

}  // namespace cubic::q
