#include "cubic/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "cubic/arith.hpp"
#include "cubic/parallel.hpp"

namespace cubic::engine {

void CongruenceClaim::validate() const {
  if (family.colors < 1) throw std::invalid_argument("number of colors must be >= 1");
  if (modulus < 2) throw std::invalid_argument("congruence modulus must be >= 2");
  if (progression < 1) throw std::invalid_argument("progression modulus must be >= 1");
  if (residue < 0 || residue >= progression) {
    throw std::invalid_argument("residue must lie in [0, progression-1]");
  }
}

std::string CongruenceClaim::to_string() const {
  const std::string name = family.kind == FamilyKind::cubic ? "a" : "abar";
  return name + "_" + std::to_string(family.colors) + "(" + std::to_string(progression) + "n+" +
         std::to_string(residue) + ") == 0 (mod " + std::to_string(modulus) + ")";
}

bool claim_less(const CongruenceClaim& a, const CongruenceClaim& b) {
  return std::tie(a.family.kind, a.family.colors, a.progression, a.residue, a.modulus) <
         std::tie(b.family.kind, b.family.colors, b.progression, b.residue, b.modulus);
}

std::string to_string(Verdict v) {
  return v == Verdict::holds_up_to_bound ? "holds" : "refuted";
}

VerificationResult verify_claim_on_series(const CongruenceClaim& claim,
                                          const TruncatedSeries& series, std::int64_t n_max) {
  claim.validate();
  if (n_max < claim.residue) throw std::invalid_argument("n_max must be >= the residue");
  if (series.ring() != Ring::modulo(claim.modulus) || series.order() <= n_max) {
    throw std::invalid_argument("series does not cover the claim's modulus and range");
  }
  VerificationResult result{claim, n_max, 0, Verdict::holds_up_to_bound, std::nullopt};
  for (std::int64_t idx = claim.residue; idx <= n_max; idx += claim.progression) {
    ++result.values_checked;
    const std::uint32_t v = series.residue(idx);
    if (v != 0) {
      result.verdict = Verdict::refuted;
      result.witness = Witness{idx, v};
      break;
    }
  }
  return result;
}

VerificationResult verify_claim(const CongruenceClaim& claim, std::int64_t n_max) {
  claim.validate();
  if (n_max < claim.residue) throw std::invalid_argument("n_max must be >= the residue");
  const TruncatedSeries series =
      partitions::generating_series(claim.family, n_max + 1, Ring::modulo(claim.modulus));
  return verify_claim_on_series(claim, series, n_max);
}

std::vector<VerificationResult> verify_claims(std::span<const CongruenceClaim> claims,
                                              std::int64_t n_max, unsigned threads) {
  using Key = std::tuple<FamilyKind, std::int64_t, std::int64_t>;
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    claims[i].validate();
    if (n_max < claims[i].residue) throw std::invalid_argument("n_max must be >= the residue");
    groups[{claims[i].family.kind, claims[i].family.colors, claims[i].modulus}].push_back(i);
  }
  std::vector<std::pair<Key, std::vector<std::size_t>>> work(groups.begin(), groups.end());
  std::vector<VerificationResult> results(claims.size());
  parallel_for(work.size(), threads, [&](std::size_t g) {
    const auto& [key, members] = work[g];
    const CongruenceClaim& first = claims[members.front()];
    const TruncatedSeries series =
        partitions::generating_series(first.family, n_max + 1, Ring::modulo(first.modulus));
    for (std::size_t i : members) results[i] = verify_claim_on_series(claims[i], series, n_max);
  });
  return results;
}

TheoremId parse_theorem_id(const std::string& text) {
  if (text == "1.1") return TheoremId::thm_1_1;
  if (text == "1.2") return TheoremId::thm_1_2;
  if (text == "cor1.3" || text == "cor-1.3") return TheoremId::cor_1_3;
  if (text == "1.5") return TheoremId::thm_1_5;
  if (text == "4.1") return TheoremId::thm_4_1;
  if (text == "remarks") return TheoremId::remarks;
  throw std::invalid_argument("unknown theorem id '" + text +
                              "' (expected 1.1, 1.2, cor1.3, 1.5, 4.1 or remarks)");
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::thm_1_1: return "1.1";
    case TheoremId::thm_1_2: return "1.2";
    case TheoremId::cor_1_3: return "cor1.3";
    case TheoremId::thm_1_5: return "1.5";
    case TheoremId::thm_4_1: return "4.1";
    case TheoremId::remarks: return "remarks";
  }
  return "?";
}

std::vector<CongruenceClaim> theorem_claims(TheoremId id, std::int64_t p, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<CongruenceClaim> claims;
  const auto per_residue = [&](PartitionFamily family, arith::ResidueCriterion criterion) {
    for (std::int64_t r : arith::admissible_residues(p, criterion).admissible) {
      claims.push_back({family, p, p, r});
    }
  };
  switch (id) {
    case TheoremId::thm_1_2:
      per_residue(PartitionFamily::cubic(p - 1), arith::ResidueCriterion::cubic);
      break;
    case TheoremId::cor_1_3:
      per_residue(PartitionFamily::cubic(k * p - 1), arith::ResidueCriterion::cubic);
      break;
    case TheoremId::thm_4_1:
      per_residue(PartitionFamily::overcubic(k * p - 1), arith::ResidueCriterion::overcubic);
      break;
    case TheoremId::remarks: {
      static const std::map<std::int64_t, std::int64_t> ramanujan{{5, 4}, {7, 5}, {11, 6}};
      const auto it = ramanujan.find(p);
      if (it == ramanujan.end()) {
        throw std::invalid_argument("remarks apply to p = 5, 7 or 11, not " + std::to_string(p));
      }
      claims.push_back({PartitionFamily::cubic(p * k + 1), p, p, it->second});
      break;
    }
    case TheoremId::thm_1_1: {
      std::int64_t progression = 1;
      for (std::int64_t i = 0; i < k; ++i) progression *= 5;
      std::int64_t modulus = 1;
      for (std::int64_t i = 0; i < k / 2; ++i) modulus *= 5;
      if (modulus >= 2) {
        claims.push_back({PartitionFamily::cubic(2), modulus, progression,
                          arith::mod_inverse(8, progression)});
      }
      break;
    }
    case TheoremId::thm_1_5:
      claims.push_back({PartitionFamily::cubic(3), 7, 7, 4});
      claims.push_back({PartitionFamily::cubic(5), 11, 11, 10});
      break;
  }
  return claims;
}

std::vector<VerificationResult> verify_theorem_family(TheoremId id, std::int64_t p,
                                                      std::int64_t k, std::int64_t n_max,
                                                      unsigned threads) {
  const std::vector<CongruenceClaim> claims = theorem_claims(id, p, k);
  return verify_claims(claims, n_max, threads);
}

std::vector<CongruenceClaim> search_congruences(const SearchOptions& options) {
  if (options.c_max < 1) throw std::invalid_argument("c_max must be >= 1");
  if (options.min_confirmations < 1) throw std::invalid_argument("min_confirmations must be >= 1");
  for (std::int64_t p : options.primes) {
    if (!arith::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (options.n_max < p * options.min_confirmations) {
      throw std::invalid_argument("n_max must be at least p * min_confirmations for p = " +
                                  std::to_string(p));
    }
  }
  struct Cell {
    PartitionFamily family;
    std::int64_t p;
  };
  std::vector<Cell> cells;
  for (FamilyKind kind : {FamilyKind::cubic, FamilyKind::overcubic}) {
    for (std::int64_t c = 1; c <= options.c_max; ++c) {
      for (std::int64_t p : options.primes) cells.push_back({{kind, c}, p});
    }
  }
  std::vector<std::vector<CongruenceClaim>> found(cells.size());
  parallel_for(cells.size(), options.threads, [&](std::size_t i) {
    const Cell& cell = cells[i];
    const TruncatedSeries series =
        partitions::generating_series(cell.family, options.n_max + 1, Ring::modulo(cell.p));
    for (std::int64_t r = 0; r < cell.p; ++r) {
      std::int64_t checked = 0;
      bool vanishes = true;
      for (std::int64_t idx = r; idx <= options.n_max && vanishes; idx += cell.p) {
        ++checked;
        vanishes = series.residue(idx) == 0;
      }
      if (vanishes && checked >= options.min_confirmations) {
        found[i].push_back({cell.family, cell.p, cell.p, r});
      }
    }
  });
  std::vector<CongruenceClaim> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end(), claim_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cubic::engine
