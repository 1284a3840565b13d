// cubicpart: counts, congruence checks and Sturm certificates for generalized
// cubic and overcubic partitions.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubic/arith.hpp"
#include "cubic/engine.hpp"
#include "cubic/partitions.hpp"

namespace {

using nlohmann::json;
using namespace cubic;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // refuted / failed / unequal
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  unsigned threads = 1;
};

std::string str(const mpz_class& x) { return x.get_str(); }

json witness_json(const engine::VerificationResult& r) {
  if (!r.witness) return nullptr;
  return {{"index", std::to_string(r.witness->index)},
          {"value_mod", std::to_string(r.witness->value_mod)}};
}

json claim_json(const engine::CongruenceClaim& c) {
  return {{"family", to_string(c.family.kind)},
          {"colors", c.family.colors},
          {"modulus", c.modulus},
          {"progression", c.progression},
          {"residue", c.residue},
          {"statement", c.to_string()}};
}

json result_json(const engine::VerificationResult& r) {
  return {{"claim", claim_json(r.claim)},
          {"n_max", r.n_max},
          {"values_checked", r.values_checked},
          {"verdict", engine::to_string(r.verdict)},
          {"witness", witness_json(r)}};
}

std::string result_line(const engine::VerificationResult& r) {
  std::ostringstream os;
  os << r.claim.to_string() << " | n <= " << r.n_max << " | " << r.values_checked << " values | "
     << engine::to_string(r.verdict);
  if (r.witness) {
    os << " | witness index " << r.witness->index << ", value " << r.witness->value_mod
       << " mod " << r.claim.modulus;
  }
  return os.str();
}

PartitionFamily family_from(const std::string& kind, std::int64_t colors) {
  return {parse_family_kind(kind), colors};
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::string family = "cubic";
  std::int64_t colors = 2;
  std::vector<std::int64_t> ns;
  std::string method = "series";
};

int run_count(const Globals& g, const CountArgs& a) {
  const PartitionFamily fam = family_from(a.family, a.colors);
  for (auto n : a.ns) {
    if (n < 0) throw UsageError("N must be >= 0");
  }
  const std::int64_t top = a.ns.empty() ? 0 : *std::max_element(a.ns.begin(), a.ns.end());
  std::vector<mpz_class> table;
  if (a.method == "direct") {
    table = partitions::count_direct_table(fam, top);
  } else {
    table = partitions::generating_series(fam, top + 1, Ring::integers()).dense_coefficients();
  }
  if (g.json) {
    json ns = json::array(), counts = json::array();
    for (auto n : a.ns) {
      ns.push_back(std::to_string(n));
      counts.push_back(str(table[static_cast<std::size_t>(n)]));
    }
    std::cout << json{{"family", a.family}, {"colors", a.colors}, {"n", ns}, {"counts", counts}}.dump()
              << '\n';
  } else {
    for (auto n : a.ns) std::cout << table[static_cast<std::size_t>(n)] << '\n';
  }
  return kExitOk;
}

struct SeriesArgs {
  std::string family = "cubic";
  std::int64_t colors = 2;
  std::int64_t order = 2000;
  std::optional<std::int64_t> modulus;
};

int run_series(const Globals& g, const SeriesArgs& a) {
  if (a.order < 0) throw UsageError("order must be >= 0");
  const Ring ring = a.modulus ? Ring::modulo(*a.modulus) : Ring::integers();
  const auto series = partitions::generating_series(family_from(a.family, a.colors), a.order, ring);
  const auto coeffs = series.dense_coefficients();
  if (g.json) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(str(c));
    std::cout << json{{"family", a.family},
                      {"colors", a.colors},
                      {"ring", ring.to_string()},
                      {"modulus", a.modulus ? json(*a.modulus) : json(nullptr)},
                      {"order", a.order},
                      {"coefficients", arr}}
                     .dump()
              << '\n';
    return kExitOk;
  }
  std::cout << "family: " << a.family << '\n'
            << "colors: " << a.colors << '\n'
            << "ring: " << ring.to_string() << '\n'
            << "order: " << a.order << '\n'
            << "coefficients:";
  for (const auto& c : coeffs) std::cout << ' ' << c;
  std::cout << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string family = "cubic";
  std::int64_t colors = 2;
  std::int64_t modulus = 0;
  std::int64_t progression = 0;
  std::int64_t residue = 0;
  std::int64_t n_max = 2000;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  const engine::CongruenceClaim claim{family_from(a.family, a.colors), a.modulus, a.progression,
                                      a.residue};
  const auto result = engine::verify_claim(claim, a.n_max);
  if (g.json) {
    std::cout << result_json(result).dump() << '\n';
  } else {
    std::cout << result_line(result) << '\n';
  }
  return result.verdict == engine::Verdict::holds_up_to_bound ? kExitOk : kExitNegative;
}

struct TheoremArgs {
  std::string id;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> k;
  std::int64_t n_max = 2000;
};

int run_theorem(const Globals& g, const TheoremArgs& a) {
  const auto id = engine::parse_theorem_id(a.id);
  std::int64_t p = a.p.value_or(0);
  std::int64_t k = a.k.value_or(1);
  switch (id) {
    case engine::TheoremId::thm_1_1:
      if (a.p && *a.p != 5) throw UsageError("theorem 1.1 is a statement about p = 5");
      p = 5;
      if (!a.k) k = 2;  // j = 1 is vacuous
      break;
    case engine::TheoremId::thm_1_5:
      break;
    default:
      if (!a.p) throw UsageError("theorem " + a.id + " needs --p");
  }
  const auto results = engine::verify_theorem_family(id, p, k, a.n_max, g.threads);
  const bool all_hold = std::all_of(results.begin(), results.end(), [](const auto& r) {
    return r.verdict == engine::Verdict::holds_up_to_bound;
  });
  if (g.json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(result_json(r));
    std::cout << json{{"theorem", engine::to_string(id)}, {"p", p}, {"k", k}, {"results", arr}}.dump()
              << '\n';
  } else {
    std::cout << "theorem " << engine::to_string(id) << " (p=" << p << ", k=" << k << ")\n";
    if (results.empty()) std::cout << "no claims (statement is vacuous for these parameters)\n";
    for (const auto& r : results) std::cout << result_line(r) << '\n';
  }
  return all_hold ? kExitOk : kExitNegative;
}

struct ProveArgs {
  std::string id;
  std::string emit;
};

int run_prove(const Globals& g, const ProveArgs& a) {
  const auto cert = engine::prove_isolated(engine::parse_isolated_id(a.id));
  const std::string text = engine::to_text(cert);
  if (!a.emit.empty()) {
    std::ofstream out(a.emit, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + a.emit);
    out << text;
  }
  if (g.json) {
    json obj = json::object();
    json fields = json::array();
    for (const auto& [key, value] : engine::parse_certificate_text(text)) {
      fields.push_back({{"key", key}, {"value", value}});
    }
    obj["id"] = cert.id;
    obj["verdict"] = engine::to_string(cert.verdict);
    obj["fields"] = fields;
    std::cout << obj.dump() << '\n';
  } else {
    std::cout << text;
  }
  return cert.verdict == engine::CertificateVerdict::proven ? kExitOk : kExitNegative;
}

struct SearchArgs {
  std::int64_t c_max = 6;
  std::vector<std::int64_t> primes{3, 5, 7, 11};
  std::int64_t n_max = 2000;
  std::int64_t min_confirmations = 10;
};

int run_search(const Globals& g, const SearchArgs& a) {
  engine::SearchOptions opts;
  opts.c_max = a.c_max;
  opts.primes = a.primes;
  opts.n_max = a.n_max;
  opts.min_confirmations = a.min_confirmations;
  opts.threads = g.threads;
  const auto claims = engine::search_congruences(opts);
  if (g.json) {
    json arr = json::array();
    for (const auto& c : claims) {
      json item = claim_json(c);
      item["status"] = "empirical";
      arr.push_back(item);
    }
    std::cout << json{{"n_max", a.n_max}, {"claims", arr}}.dump() << '\n';
  } else {
    for (const auto& c : claims) std::cout << c.to_string() << " | empirical, n <= " << a.n_max << '\n';
  }
  return kExitOk;
}

struct IdentityArgs {
  std::string id;
  std::int64_t order = 300;
};

int run_identity(const Globals& g, const IdentityArgs& a) {
  const auto id = partitions::parse_named_identity(a.id);
  const auto report = partitions::check_named_identity(id, a.order);
  if (g.json) {
    json obj{{"id", a.id}, {"order", report.order}, {"equal", report.equal}};
    if (report.first_mismatch) {
      obj["first_mismatch"] = std::to_string(*report.first_mismatch);
      obj["lhs"] = str(report.lhs_at_mismatch);
      obj["rhs"] = str(report.rhs_at_mismatch);
    }
    std::cout << obj.dump() << '\n';
  } else {
    std::cout << a.id << ": " << report.to_string() << '\n';
  }
  return report.equal ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized cubic and overcubic partitions: counts, congruences, Sturm certificates"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--json", globals.json, "Machine-readable output");
  app.add_option("--threads", globals.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  const auto family_opts = [](CLI::App* cmd, std::string& family, std::int64_t& colors) {
    cmd->add_option("--family", family, "cubic or overcubic")
        ->check(CLI::IsMember({"cubic", "overcubic"}));
    cmd->add_option("--colors", colors, "Colors per even part")->required()->check(CLI::PositiveNumber);
  };

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Exact counts, one per line");
  family_opts(count, count_args.family, count_args.colors);
  count->add_option("--method", count_args.method, "series or direct")
      ->check(CLI::IsMember({"series", "direct"}));
  count->add_option("N", count_args.ns, "Arguments n")->required();

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Generating-function coefficients");
  family_opts(series, series_args.family, series_args.colors);
  series->add_option("--order", series_args.order, "Truncation order");
  series->add_option("--mod", series_args.modulus, "Reduce coefficients mod M");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check count(pn+r) == 0 mod m for pn+r <= nmax");
  family_opts(verify, verify_args.family, verify_args.colors);
  verify->add_option("--mod", verify_args.modulus)->required();
  verify->add_option("--progression", verify_args.progression)->required();
  verify->add_option("--residue", verify_args.residue)->required();
  verify->add_option("--nmax", verify_args.n_max);

  TheoremArgs theorem_args;
  auto* theorem = app.add_subcommand("theorem", "Verify a congruence family numerically");
  theorem->add_option("--id", theorem_args.id, "1.1, 1.2, cor1.3, 1.5, 4.1 or remarks")->required();
  theorem->add_option("--p", theorem_args.p);
  theorem->add_option("--k", theorem_args.k, "k, or j for 1.1")->check(CLI::PositiveNumber);
  theorem->add_option("--nmax", theorem_args.n_max);

  ProveArgs prove_args;
  auto* prove = app.add_subcommand("prove", "Build a Sturm-bound certificate");
  prove->add_option("--id", prove_args.id, "a3-mod7 or a5-mod11")->required();
  prove->add_option("--emit", prove_args.emit, "Write the certificate to this file");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Empirical congruence search");
  search->add_option("--cmax", search_args.c_max);
  search->add_option("--primes", search_args.primes)->delimiter(',');
  search->add_option("--nmax", search_args.n_max);
  search->add_option("--min-confirmations", search_args.min_confirmations);

  IdentityArgs identity_args;
  auto* identity = app.add_subcommand("identity", "Check a q-series identity");
  identity->add_option("--id", identity_args.id, "ramanujan-p5n4 or chan-a2-3n2")->required();
  identity->add_option("--order", identity_args.order);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return run_count(globals, count_args);
    if (*series) return run_series(globals, series_args);
    if (*verify) return run_verify(globals, verify_args);
    if (*theorem) return run_theorem(globals, theorem_args);
    if (*prove) return run_prove(globals, prove_args);
    if (*search) return run_search(globals, search_args);
    if (*identity) return run_identity(globals, identity_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitUsage;
}
