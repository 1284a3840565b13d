// Acceptance run: one line per criterion, nonzero exit on any failure.
// Every criterion is timed against its limit; exceeding it is a failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cubic/arith.hpp"
#include "cubic/engine.hpp"
#include "cubic/modform.hpp"
#include "cubic/partitions.hpp"
#include "cubic/qfunctions.hpp"
#include "oracles.hpp"

namespace {

using namespace cubic;
using engine::CongruenceClaim;
using engine::TheoremId;
using engine::Verdict;

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const unsigned kThreads = std::max(1u, std::thread::hardware_concurrency());

std::string describe(const engine::VerificationResult& r) {
  std::ostringstream os;
  os << r.claim.to_string() << " " << engine::to_string(r.verdict);
  if (r.witness) os << " at index " << r.witness->index;
  return os.str();
}

void expect_all_hold(Outcome& out, const std::vector<engine::VerificationResult>& results) {
  out.expect(!results.empty(), "no claims produced");
  for (const auto& r : results) out.expect(r.verdict == Verdict::holds_up_to_bound, describe(r));
}

// 1 -------------------------------------------------------------------------
void known_values(Outcome& out) {
  struct Case {
    PartitionFamily family;
    std::int64_t n;
    long expected;
  };
  const std::vector<Case> cases{{PartitionFamily::cubic(2), 3, 4},
                                {PartitionFamily::cubic(2), 4, 9},
                                {PartitionFamily::cubic(1), 4, 5},
                                {PartitionFamily::overcubic(2), 3, 12}};
  for (const auto& c : cases) {
    const auto series = partitions::generating_series(c.family, 10, Ring::integers());
    const std::string tag = c.family.to_string() + "(" + std::to_string(c.n) + ")";
    out.expect(series.coefficient(c.n) == c.expected, tag + " via generating_series");
    out.expect(partitions::count_direct(c.family, c.n) == c.expected, tag + " via count_direct");
    const bool overlined = c.family.kind == FamilyKind::overcubic;
    out.expect(oracle::enumerate_partitions(c.n, c.family.colors, overlined) == c.expected,
               tag + " via enumeration oracle");
  }
}

// 2 -------------------------------------------------------------------------
void oracle_equivalence(Outcome& out) {
  constexpr std::int64_t kN = 60;
  std::int64_t cells = 0;
  for (auto kind : {FamilyKind::cubic, FamilyKind::overcubic}) {
    for (std::int64_t c = 1; c <= 6; ++c) {
      const PartitionFamily family{kind, c};
      const auto series = partitions::generating_series(family, kN + 1, Ring::integers());
      const auto table = partitions::count_direct_table(family, kN);
      for (std::int64_t n = 0; n <= kN; ++n, ++cells) {
        out.expect(series.coefficient(n) == table[static_cast<std::size_t>(n)],
                   family.to_string() + " n=" + std::to_string(n));
      }
      for (std::int64_t n = 0; n <= 12; ++n) {
        out.expect(series.coefficient(n) ==
                       oracle::enumerate_partitions(n, c, kind == FamilyKind::overcubic),
                   family.to_string() + " enumeration n=" + std::to_string(n));
      }
    }
  }
  out.notes.push_back(std::to_string(cells) + " cells");
}

// 3 -------------------------------------------------------------------------
void ramanujan_congruences(Outcome& out) {
  constexpr std::int64_t kN = 10'000;
  const std::vector<CongruenceClaim> claims{{PartitionFamily::cubic(1), 5, 5, 4},
                                            {PartitionFamily::cubic(1), 7, 7, 5},
                                            {PartitionFamily::cubic(1), 11, 11, 6}};
  expect_all_hold(out, engine::verify_claims(claims, kN, kThreads));
  // Independent check from the pentagonal recurrence in exact integers.
  const auto p = oracle::partition_numbers(kN);
  for (const auto& c : claims) {
    for (std::int64_t idx = c.residue; idx <= kN; idx += c.progression) {
      if (p[static_cast<std::size_t>(idx)] % c.modulus != 0) {
        out.expect(false, "recurrence oracle: p(" + std::to_string(idx) + ")");
        break;
      }
    }
  }
}

// 4 -------------------------------------------------------------------------
void identity_checks(Outcome& out) {
  for (auto id : {partitions::NamedIdentity::ramanujan_p5n4, partitions::NamedIdentity::chan_a2_3n2}) {
    const auto report = partitions::check_named_identity(id, 300);
    out.expect(report.equal && report.order >= 300,
               partitions::to_string(id) + ": " + report.to_string());
  }
}

// 5 -------------------------------------------------------------------------
void functional_machinery(Outcome& out) {
  for (std::int64_t c = 1; c <= 6; ++c) {
    const auto report = partitions::check_functional_equation(c, 200);
    out.expect(report.equal && report.order >= 200,
               "functional equation c=" + std::to_string(c) + ": " + report.to_string());
  }
  for (std::int64_t p : {3, 5, 7}) {
    const auto report = partitions::check_lemma_product(p, 128);
    out.expect(report.equal && report.order >= 128,
               "product lemma p=" + std::to_string(p) + ": " + report.to_string());
  }
}

// 6 -------------------------------------------------------------------------
std::set<std::int64_t> nonzero_squares(std::int64_t p) {
  std::set<std::int64_t> s;
  for (std::int64_t x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

void theorem_1_2(Outcome& out) {
  constexpr std::int64_t kN = 2000;
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto squares = nonzero_squares(p);
    std::vector<std::int64_t> admissible, sharp;
    for (std::int64_t r = 1; r < p; ++r) {
      const std::int64_t v = (8 * r + 1) % p;
      if (v == 0) continue;
      (squares.count(v) ? sharp : admissible).push_back(r);
    }
    const auto claims = engine::theorem_claims(TheoremId::thm_1_2, p, 1);
    std::vector<std::int64_t> claimed;
    for (const auto& c : claims) claimed.push_back(c.residue);
    out.expect(claimed == admissible, "p=" + std::to_string(p) + " residue set differs from brute force");
    const auto results = engine::verify_claims(claims, kN, kThreads);
    for (const auto& r : results) out.expect(r.verdict == Verdict::holds_up_to_bound, describe(r));

    std::vector<CongruenceClaim> converse;
    for (auto r : sharp) converse.push_back({PartitionFamily::cubic(p - 1), p, p, r});
    for (const auto& r : engine::verify_claims(converse, kN, kThreads)) {
      if (r.verdict != Verdict::refuted) {
        out.notes.push_back("manual review: " + r.claim.to_string() + " survives to " +
                            std::to_string(kN));
      } else {
        out.expect(r.witness.has_value(), r.claim.to_string() + " refuted without witness");
      }
    }
  }
}

// 7 -------------------------------------------------------------------------
void corollary_1_3(Outcome& out) {
  for (std::int64_t k : {2, 3}) {
    for (std::int64_t p : {3, 5}) {
      expect_all_hold(out, engine::verify_theorem_family(TheoremId::cor_1_3, p, k, 2000, kThreads));
    }
  }
}

// 8 -------------------------------------------------------------------------
void theorem_1_1(Outcome& out) {
  const auto claims = engine::theorem_claims(TheoremId::thm_1_1, 5, 2);
  out.expect(claims.size() == 1, "expected a single j=2 claim");
  if (claims.empty()) return;
  const auto& c = claims.front();
  out.expect(c.family == PartitionFamily::cubic(2) && c.modulus == 5 && c.progression == 25,
             "claim shape " + c.to_string());
  out.expect(8 * c.residue % 25 == 1 && c.residue == 22, "residue is not 8^-1 mod 25");
  out.expect(engine::theorem_claims(TheoremId::thm_1_1, 5, 1).empty(), "j=1 should be vacuous");
  expect_all_hold(out, {engine::verify_claim(c, 10'000)});
}

// 9 -------------------------------------------------------------------------
void theorem_1_5_numeric(Outcome& out) {
  const std::vector<CongruenceClaim> claims{{PartitionFamily::cubic(3), 7, 7, 4},
                                            {PartitionFamily::cubic(5), 11, 11, 10}};
  const auto listed = engine::theorem_claims(TheoremId::thm_1_5, 0, 1);
  out.expect(listed == claims, "theorem 1.5 claim list");
  expect_all_hold(out, engine::verify_claims(claims, 10'000, kThreads));
}

// 10 ------------------------------------------------------------------------
void theorem_1_5_certificates(Outcome& out) {
  struct Expect {
    engine::IsolatedId id;
    std::int64_t level, weight, bound;
    std::vector<std::pair<std::int64_t, std::int64_t>> eta;
    std::vector<std::int64_t> cusp;  // integer orders at d | N, increasing
  };
  const std::vector<Expect> expectations{
      {engine::IsolatedId::a3_mod7, 8, 37, 37, {{1, 76}, {2, -2}}, {25, 6, 3, 3}},
      {engine::IsolatedId::a5_mod11, 4, 14, 7, {{1, 32}, {2, -4}}, {}},
  };
  for (const auto& e : expectations) {
    const auto cert = engine::prove_isolated(e.id);
    const std::string tag = engine::to_string(e.id) + ": ";
    out.expect(cert.verdict == engine::CertificateVerdict::proven,
               tag + "verdict " + engine::to_string(cert.verdict) + " " + cert.failure_stage);
    out.expect(cert.eta.level == e.level, tag + "level");
    out.expect(cert.weight == e.weight, tag + "weight");
    out.expect(cert.sturm_bound == e.bound, tag + "sturm bound");
    out.expect(cert.coefficients_checked.size() == static_cast<std::size_t>(e.bound + 1),
               tag + "coefficients checked");
    // Cusp orders against the int64 fraction oracle.
    const auto divisors = arith::divisors(e.level);
    out.expect(cert.cusp_orders.entries.size() == divisors.size(), tag + "cusp count");
    for (std::size_t i = 0; i < divisors.size() && i < cert.cusp_orders.entries.size(); ++i) {
      const auto want = oracle::cusp_order(e.level, e.eta, divisors[i]);
      const auto& [d, got] = cert.cusp_orders.entries[i];
      out.expect(d == divisors[i] && got == mpq_class(want.num, want.den),
                 tag + "cusp order at d=" + std::to_string(divisors[i]));
      if (!e.cusp.empty()) out.expect(got == e.cusp[i], tag + "cusp order value");
    }
  }
}

// 11 ------------------------------------------------------------------------
void theorem_4_1(Outcome& out) {
  for (std::int64_t p : {3, 5, 7}) {
    const auto squares = nonzero_squares(p);
    std::vector<std::int64_t> nonresidues;
    for (std::int64_t r = 1; r < p; ++r) {
      if (!squares.count(r)) nonresidues.push_back(r);
    }
    for (std::int64_t k : {1, 2}) {
      const auto results = engine::verify_theorem_family(TheoremId::thm_4_1, p, k, 2000, kThreads);
      std::vector<std::int64_t> residues;
      for (const auto& r : results) {
        residues.push_back(r.claim.residue);
        out.expect(r.claim.family == PartitionFamily::overcubic(k * p - 1), describe(r) + " family");
      }
      out.expect(residues == nonresidues, "p=" + std::to_string(p) + " nonresidue set");
      expect_all_hold(out, results);
    }
  }
}

// 12 ------------------------------------------------------------------------
void remarks(Outcome& out) {
  const std::vector<CongruenceClaim> expected{{PartitionFamily::cubic(6), 5, 5, 4},
                                              {PartitionFamily::cubic(8), 7, 7, 5},
                                              {PartitionFamily::cubic(12), 11, 11, 6}};
  std::vector<CongruenceClaim> listed;
  for (std::int64_t p : {5, 7, 11}) {
    for (const auto& c : engine::theorem_claims(TheoremId::remarks, p, 1)) listed.push_back(c);
  }
  out.expect(listed == expected, "remark claim list");
  expect_all_hold(out, engine::verify_claims(expected, 2000, kThreads));
}

// 13 ------------------------------------------------------------------------
void property_suites(Outcome& out) {
  constexpr int kCases = 120;
  std::mt19937_64 rng(0x5EED);
  int ring = 0, linear = 0, collapse = 0, factored = 0, kron = 0;

  const auto same = [](const TruncatedSeries& a, const TruncatedSeries& b) {
    const Exponent order = std::min(a.order(), b.order());
    return a.truncated(order) == b.truncated(order);
  };

  for (int t = 0; t < kCases; ++t) {
    const Ring r = std::vector<Ring>{Ring::integers(), Ring::modulo(7), Ring::modulo(4294967291u)}[t % 3];
    const auto a = oracle::random_series(rng, r, 40, 3, 1000);
    const auto b = oracle::random_series(rng, r, 40, 3, 1000);
    const auto c = oracle::random_series(rng, r, 40, 3, 1000);
    const bool ok = mul(a, b) == mul(b, a) && same(mul(mul(a, b), c), mul(a, mul(b, c))) &&
                    same(mul(a, add(b, c)), add(mul(a, b), mul(a, c))) &&
                    add(a, negate(a)).is_zero();
    ring += ok;
  }

  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
  for (int t = 0; t < kCases; ++t) {
    const std::int64_t p = primes[static_cast<std::size_t>(t) % primes.size()];
    const std::int64_t w = 2 + t % 5;
    const modform::CharacterDescriptor ch{w, 1, 4};
    const Ring r = t % 2 ? Ring::integers() : Ring::modulo(p);
    const auto f = oracle::random_series(rng, r, 300, 0, 1000);
    const auto g = oracle::random_series(rng, r, 300, 0, 1000);
    linear += modform::hecke_tp(add(f, g), p, w, ch) ==
              add(modform::hecke_tp(f, p, w, ch), modform::hecke_tp(g, p, w, ch));
    const auto fm = r.is_exact() ? reduce_mod(f, p) : f;
    collapse += modform::hecke_tp(fm, p, w, ch) == extract_progression(fm, p, 0);
  }

  for (int t = 0; t < kCases; ++t) {
    const std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7, 11}[t % 5];
    const std::int64_t w = 2 + t % 7;
    const modform::CharacterDescriptor ch{w, 1, 1};
    const auto g = reduce_mod(oracle::random_series(rng, Ring::integers(), 300, 0, 100), p);
    const auto h = substitute_power(
        reduce_mod(oracle::random_series(rng, Ring::integers(), 300 / p + 1, 2, 100), p), p);
    factored += same(modform::hecke_tp(mul(g, h).with_zero_offset(), p, w, ch),
                     modform::hecke_tp_factored(g, h, p, w, ch));
  }

  std::uniform_int_distribution<std::int64_t> da(-100000, 100000);
  const std::vector<std::int64_t> odd_primes{3, 5, 7, 11, 13, 101, 7919};
  for (int t = 0; t < kCases; ++t) {
    const std::int64_t a = da(rng);
    const std::int64_t p = odd_primes[static_cast<std::size_t>(t) % odd_primes.size()];
    const mpz_class e = oracle::pow_mod_mpz(((a % p) + p) % p, (p - 1) / 2, p);
    const int euler = e == 0 ? 0 : (e == 1 ? 1 : -1);
    kron += arith::kronecker(a, p) == euler && arith::legendre_euler(a, p) == euler;
  }

  const auto tally = [&](const char* name, int passed) {
    out.expect(passed == kCases, std::string(name) + " " + std::to_string(passed) + "/" +
                                     std::to_string(kCases));
  };
  tally("ring axioms", ring);
  tally("Hecke linearity", linear);
  tally("mod-p Hecke collapse", collapse);
  tally("direct vs factored Hecke", factored);
  tally("Kronecker vs Euler", kron);
  out.notes.push_back(std::to_string(5 * kCases) + " randomized cases");
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "known values", 1, known_values},
      {2, "series vs DP oracle, c <= 6, n <= 60", 30, oracle_equivalence},
      {3, "Ramanujan congruences to 10^4", 10, ramanujan_congruences},
      {4, "Ramanujan and Chan identities to order 300", 5, identity_checks},
      {5, "functional equation and product lemma", 10, functional_machinery},
      {6, "theorem 1.2, p <= 13, n_max 2000, criterion sharpness", 60, theorem_1_2},
      {7, "corollary 1.3, k in {2,3}, p in {3,5}", 30, corollary_1_3},
      {8, "theorem 1.1 at j=2 to 10^4", 10, theorem_1_1},
      {9, "theorem 1.5 numerically to 10^4", 10, theorem_1_5_numeric},
      {10, "theorem 1.5 Sturm certificates", 60, theorem_1_5_certificates},
      {11, "theorem 4.1, p in {3,5,7}, k in {1,2}", 60, theorem_4_1},
      {12, "j=1 remark congruences", 30, remarks},
      {13, "property suites", 120, property_suites},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      out.failures.push_back("time limit " + std::to_string(c.limit_seconds) + " s exceeded");
    }
    const bool pass = out.failures.empty();
    failed += !pass;
    std::printf("[%s] %2d %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.number, c.name,
                seconds, c.limit_seconds);
    for (const auto& n : out.notes) std::printf("       note: %s\n", n.c_str());
    for (const auto& f : out.failures) std::printf("       failure: %s\n", f.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
