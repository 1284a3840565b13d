#include <sstream>
#include <stdexcept>

#include "cubic/engine.hpp"
#include "cubic/qfunctions.hpp"

namespace cubic::engine {

IsolatedId parse_isolated_id(const std::string& text) {
  if (text == "a3-mod7") return IsolatedId::a3_mod7;
  if (text == "a5-mod11") return IsolatedId::a5_mod11;
  throw std::invalid_argument("unknown proof id '" + text + "' (expected a3-mod7 or a5-mod11)");
}

std::string to_string(IsolatedId id) {
  return id == IsolatedId::a3_mod7 ? "a3-mod7" : "a5-mod11";
}

std::string to_string(CertificateVerdict v) {
  return v == CertificateVerdict::proven ? "proven" : "failed";
}

ProofPlan isolated_plan(IsolatedId id) {
  if (id == IsolatedId::a3_mod7) {
    // eta(z)^76 / eta(2z)^2 = q^3 (sum a_3(n) q^n) f1^77
    return {"a3-mod7", {8, {{1, 76}, {2, -2}}}, 7, 7, {PartitionFamily::cubic(3), 7, 7, 4}};
  }
  // eta(z)^32 / eta(2z)^4 = q (sum a_5(n) q^n) f1^33
  return {"a5-mod11", {4, {{1, 32}, {2, -4}}}, 11, 11, {PartitionFamily::cubic(5), 11, 11, 10}};
}

namespace {

SturmCertificate fail(SturmCertificate cert, std::string stage,
                      std::optional<std::pair<std::int64_t, std::uint32_t>> witness = {}) {
  cert.verdict = CertificateVerdict::failed;
  cert.failure_stage = std::move(stage);
  cert.witness = witness;
  return cert;
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

}  // namespace

SturmCertificate prove(const ProofPlan& plan) {
  SturmCertificate cert;
  cert.id = plan.id;
  cert.eta = plan.eta;
  cert.prime = plan.hecke_prime;
  cert.modulus = plan.modulus;

  modform::CandidacyReport candidacy;
  try {
    candidacy = modform::check_candidacy(plan.eta);
  } catch (const std::exception& e) {
    return fail(std::move(cert), std::string("construction: ") + e.what());
  }
  cert.weight = candidacy.weight;
  cert.character = candidacy.character;
  if (!candidacy.passes()) return fail(std::move(cert), "candidacy");

  cert.cusp_orders = modform::cusp_orders(plan.eta);
  if (!cert.cusp_orders.holomorphic()) return fail(std::move(cert), "cusp-orders");
  const std::int64_t weight = candidacy.weight.get_num().get_si();
  if (weight < 1) return fail(std::move(cert), "weight");

  cert.sturm_bound = modform::sturm_bound(weight, plan.eta.level);
  const std::int64_t bound = cert.sturm_bound;
  const std::int64_t p = plan.hecke_prime;

  TruncatedSeries image;
  try {
    const Ring ring = Ring::modulo(plan.modulus);
    const Exponent lead = q::eta_leading_exponent(plan.eta.level, plan.eta.exponents);
    const TruncatedSeries expansion =
        q::eta_expansion({plan.eta.level, plan.eta.exponents, p * (bound + 1) + lead, ring});
    image = modform::hecke_tp(expansion.with_zero_offset(), p, weight, *cert.character);
  } catch (const std::exception& e) {
    return fail(std::move(cert), std::string("expansion: ") + e.what());
  }

  std::optional<std::pair<std::int64_t, std::uint32_t>> sturm_witness;
  for (Exponent n = 0; n <= bound; ++n) {
    const std::uint32_t v = image.residue(n);
    cert.coefficients_checked.push_back(v);
    if (v != 0 && !sturm_witness) sturm_witness = {n, v};
  }

  // Combinatorial oracle on the progression the image encodes.
  const CongruenceClaim& claim = plan.claim;
  const std::int64_t last = claim.residue + claim.progression * (kOracleCrossCheckValues - 1);
  const std::vector<mpz_class> counts = partitions::count_direct_table(claim.family, last);
  std::optional<std::pair<std::int64_t, std::uint32_t>> oracle_witness;
  for (std::int64_t n = 0; n < kOracleCrossCheckValues; ++n) {
    const std::int64_t idx = claim.residue + claim.progression * n;
    const auto v = static_cast<std::uint32_t>(
        mpz_fdiv_ui(counts[static_cast<std::size_t>(idx)].get_mpz_t(),
                    static_cast<unsigned long>(claim.modulus)));
    cert.oracle_values.push_back(v);
    if (v != 0 && !oracle_witness) oracle_witness = {idx, v};
  }

  if (sturm_witness) return fail(std::move(cert), "sturm-check", sturm_witness);
  if (oracle_witness) return fail(std::move(cert), "oracle-cross-check", oracle_witness);
  cert.verdict = CertificateVerdict::proven;
  return cert;
}

SturmCertificate prove_isolated(IsolatedId id) { return prove(isolated_plan(id)); }

std::string to_text(const SturmCertificate& cert) {
  const auto weight = cert.weight.get_den() == 1 ? cert.weight.get_num().get_str()
                                                 : cert.weight.get_str();
  std::ostringstream os;
  os << "id: " << cert.id << '\n';
  os << "level: " << cert.eta.level << '\n';
  os << "weight: " << weight << '\n';
  os << "exponents: " << cert.eta.exponents_string() << '\n';
  os << "character: " << (cert.character ? cert.character->to_string() : "none") << '\n';
  os << "cusp-orders: "
     << (cert.cusp_orders.entries.empty() ? "none" : cert.cusp_orders.to_string()) << '\n';
  os << "sturm-bound: " << cert.sturm_bound << '\n';
  os << "prime: " << cert.prime << '\n';
  os << "modulus: " << cert.modulus << '\n';
  os << "coefficients-checked: " << join(cert.coefficients_checked) << '\n';
  os << "verdict: " << to_string(cert.verdict) << '\n';
  os << "oracle-check: " << join(cert.oracle_values) << '\n';
  if (cert.verdict == CertificateVerdict::failed) {
    os << "failure-stage: " << cert.failure_stage << '\n';
    if (cert.witness) {
      os << "witness: " << cert.witness->first << ' ' << cert.witness->second << '\n';
    }
  }
  return os.str();
}

std::vector<std::pair<std::string, std::string>> parse_certificate_text(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> fields;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) {
      throw std::invalid_argument("malformed certificate line: " + line);
    }
    fields.emplace_back(line.substr(0, colon), line.substr(colon + 2));
  }
  return fields;
}

}  // namespace cubic::engine
