// partrep: build, verify and probe sets whose weighted representation
// function R_{1,k} agrees with that of their complement.
//
// Exit codes: 0 success, 1 a mathematical claim failed, 2 usage or
// precondition error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "partrep/bound_lab.hpp"
#include "partrep/core_repfn.hpp"
#include "partrep/partition_builder.hpp"
#include "partrep/report_io.hpp"

namespace {

using namespace partrep;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  std::uint64_t k = 2;
  std::uint64_t n0 = 0;
  std::uint64_t k1 = 2;
  std::uint64_t k2 = 3;
  std::uint64_t limit = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t n = 0;
  std::uint64_t cap = 64;
  std::uint64_t stride = 1;
  std::uint64_t node_limit = 50'000'000;
  unsigned i_max = 4;
  std::string seed;
  std::string format;
  std::string out;
  unsigned workers = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data goes to --out or stdout; diagnostics go to stderr.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format '" + cfg.format + "' is not supported by " + cfg.command);
}

ChiTable chi_from_config(const RunConfig& cfg, std::uint64_t limit, SeedCheck check) {
  if (cfg.k < 2) throw UsageError("--k must be at least 2");
  const auto seed = SeedAssignment::from_string(cfg.k, cfg.n0, cfg.seed);
  if (limit + 1 < cfg.k + cfg.n0) limit = cfg.k + cfg.n0 - 1;
  return extend_chi(seed, limit, check);
}

int run_seeds(const RunConfig& cfg) {
  if (!cfg.format.empty()) require_format(cfg, {"json", "text"});
  const auto seeds = enumerate_valid_seeds(cfg.k, cfg.n0);
  Sink sink(cfg.out);
  if (cfg.format == "json") {
    sink.stream() << io::seeds_json(cfg.k, cfg.n0, seeds).dump(2) << '\n';
  } else {
    for (const auto& s : seeds) sink.stream() << s.to_string() << '\n';
    std::cerr << seeds.size() << " valid seed(s) for k=" << cfg.k << ", n0=" << cfg.n0 << '\n';
  }
  return kExitOk;
}

int run_build(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const auto chi = chi_from_config(cfg, cfg.limit, SeedCheck::kRequireValid);
  Sink sink(cfg.out);
  if (cfg.format == "csv") {
    sink.stream() << "n,chi\n";
    for (std::uint64_t n = 0; n <= chi.limit(); ++n) {
      sink.stream() << n << ',' << (chi.at(n) ? 1 : 0) << '\n';
    }
  } else {
    json doc = {{"schema", io::kSchemaVersion}, {"command", "build"}, {"k", chi.k()},
                {"n0", chi.n0()},               {"seed", cfg.seed},  {"limit", chi.limit()},
                {"bits", chi.to_string()}};
    sink.stream() << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  if (cfg.i_max < 1) throw UsageError("--imax must be at least 1");
  const auto seed = SeedAssignment::from_string(cfg.k, cfg.n0, cfg.seed);
  const auto chi = chi_from_config(cfg, cfg.limit, SeedCheck::kSkip);

  std::cerr << "verifying k=" << cfg.k << " n0=" << cfg.n0 << " seed=" << cfg.seed
            << " up to " << chi.limit() << '\n';
  const auto window_failure = seed.first_window_failure();
  const auto lemma1 = verify_lemma1(chi, chi.limit());
  const auto equality = verify_equality(chi, chi.limit(), cfg.workers);
  const auto lemma2 = verify_lemma2(chi, cfg.i_max);
  const bool passed = !window_failure && lemma1.passed() && equality.passed() && lemma2.passed();

  Sink sink(cfg.out);
  if (cfg.format == "csv") {
    io::write_scan_csv(sink.stream(), equality);
  } else {
    json doc = {
        {"schema", io::kSchemaVersion},
        {"command", "verify"},
        {"k", cfg.k},
        {"n0", cfg.n0},
        {"seed", cfg.seed},
        {"limit", chi.limit()},
        {"checks",
         {{"seed", {{"passed", !window_failure}, {"first_failure", window_failure
                                                                     ? json(*window_failure)
                                                                     : json(nullptr)}}},
          {"lemma1", io::lemma1_json(lemma1)},
          {"equality", io::scan_json(equality, false)},
          {"lemma2", io::lemma2_json(lemma2)}}},
        {"passed", passed}};
    sink.stream() << doc.dump(2) << '\n';
  }
  return passed ? kExitOk : kExitClaimFailed;
}

int run_scan_bound(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  if (cfg.lo > cfg.hi) throw UsageError("empty range: --lo is greater than --hi");
  const auto chi = chi_from_config(cfg, cfg.hi, SeedCheck::kRequireValid);
  const auto report = bound_scan(chi, cfg.lo, cfg.hi, cfg.stride, cfg.workers);
  Sink sink(cfg.out);
  if (cfg.format == "csv") {
    io::write_scan_csv(sink.stream(), report);
  } else {
    json doc = io::scan_json(report, true);
    doc["command"] = "scan-bound";
    doc["seed"] = cfg.seed;
    sink.stream() << doc.dump() << '\n';
  }
  std::cerr << report.rows.size() << " rows, " << report.violations.size()
            << " violation(s), min R/max(1, ln n) = " << report.min_log_ratio.value_or(0.0)
            << '\n';
  return report.passed() ? kExitOk : kExitClaimFailed;
}

int run_witness(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const std::uint64_t limit = cfg.limit ? cfg.limit : cfg.n;
  if (limit < cfg.n) throw UsageError("--limit must be at least --n");
  const auto chi = chi_from_config(cfg, limit, SeedCheck::kRequireValid);
  const auto ws = witness_set(chi, cfg.n);
  Sink sink(cfg.out);
  if (cfg.format == "csv") {
    sink.stream() << "j,i,t,r,case,a1,a2,side\n";
    for (const auto& o : ws.outcomes) {
      if (!o.record) continue;
      const auto& d = o.decomposition;
      sink.stream() << d.j << ',' << d.i << ',' << d.t << ',' << d.r << ','
                    << to_string(d.case_tag) << ',' << o.record->a1 << ',' << o.record->a2
                    << ',' << to_string(o.record->side) << '\n';
    }
  } else {
    sink.stream() << io::witness_set_json(ws).dump(2) << '\n';
  }
  if (ws.below_threshold_count() > 0) {
    std::cerr << ws.below_threshold_count() << " j value(s) below the witness threshold\n";
  }
  return kExitOk;
}

int run_search(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  SearchOptions options;
  options.node_limit = cfg.node_limit;
  const auto outcome = nonexistence_search(WeightPair(cfg.k1, cfg.k2), cfg.n0, cfg.cap, options);
  Sink sink(cfg.out);
  sink.stream() << io::search_json(outcome).dump(2) << '\n';
  return kExitOk;
}

int run_classic(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const std::uint64_t limit = cfg.limit ? cfg.limit : cfg.n;
  if (limit < cfg.n) throw UsageError("--limit must be at least --n");
  const auto chi = chi_from_config(cfg, limit, SeedCheck::kRequireValid);
  json sides = json::object();
  for (Side side : {Side::kSet, Side::kComplement}) {
    sides[std::string(to_string(side))] = {
        {"R1", classic_rep(chi, side, ClassicVariant::kR1, cfg.n)},
        {"R2", classic_rep(chi, side, ClassicVariant::kR2, cfg.n)},
        {"R3", classic_rep(chi, side, ClassicVariant::kR3, cfg.n)},
        {"R_1k", rep_count_weighted(chi, side, WeightPair(1, cfg.k), cfg.n)}};
  }
  json doc = {{"schema", io::kSchemaVersion}, {"command", "classic"}, {"k", cfg.k},
              {"n0", cfg.n0}, {"seed", cfg.seed}, {"n", cfg.n}, {"counts", sides}};
  Sink sink(cfg.out);
  sink.stream() << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitions of N with equal weighted representation functions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_partition = [&](CLI::App* sub, bool with_seed) {
    sub->add_option("--k", cfg.k, "weight k in n = a1 + k*a2 (k >= 2)")->required();
    sub->add_option("--n0", cfg.n0, "equality is required for n >= n0")->required();
    if (with_seed) {
      sub->add_option("--seed", cfg.seed, "chi on [0, k+n0) as a 0/1 string, index 0 first")
          ->required();
    }
  };

  auto* seeds = app.add_subcommand("seeds", "list valid initial segments");
  add_partition(seeds, false);
  seeds->add_option("--format", cfg.format, "text (default) or json");
  seeds->add_option("--out", cfg.out, "write data to this file instead of stdout");

  auto* build = app.add_subcommand("build", "extend a seed to chi on [0, limit]");
  add_partition(build, true);
  build->add_option("--limit", cfg.limit, "last index of the table")->required();
  build->add_option("--format", cfg.format, "json or csv");
  build->add_option("--out", cfg.out, "output file");

  auto* verify = app.add_subcommand("verify", "check the structural relations and equality");
  add_partition(verify, true);
  verify->add_option("--limit", cfg.limit, "last index checked")->required();
  verify->add_option("--imax", cfg.i_max, "largest exponent in the chain relation check");
  verify->add_option("--workers", cfg.workers, "threads for the counting sieve");
  verify->add_option("--format", cfg.format, "json or csv");
  verify->add_option("--out", cfg.out, "output file");

  auto* scan = app.add_subcommand("scan-bound", "compare R_{1,k}(A, n) with B(n)");
  add_partition(scan, true);
  scan->add_option("--lo", cfg.lo, "first n")->required();
  scan->add_option("--hi", cfg.hi, "last n")->required();
  scan->add_option("--stride", cfg.stride, "sample every stride-th n");
  scan->add_option("--workers", cfg.workers, "threads for the counting sieve");
  scan->add_option("--format", cfg.format, "json or csv");
  scan->add_option("--out", cfg.out, "output file");

  auto* witness = app.add_subcommand("witness", "explicit representations of n, one per odd j");
  add_partition(witness, true);
  witness->add_option("--n", cfg.n, "target n")->required();
  witness->add_option("--limit", cfg.limit, "chi prefix (default n)");
  witness->add_option("--format", cfg.format, "json or csv");
  witness->add_option("--out", cfg.out, "output file");

  auto* search = app.add_subcommand("search", "finite-prefix search for k2 > k1 >= 2");
  search->add_option("--k1", cfg.k1, "weight of a1")->required();
  search->add_option("--k2", cfg.k2, "weight of a2")->required();
  search->add_option("--n0", cfg.n0, "equality is required for n >= n0")->required();
  search->add_option("--cap", cfg.cap, "depth cap: chi is assigned on [0, cap)");
  search->add_option("--node-limit", cfg.node_limit, "stop as inconclusive after this many nodes");
  search->add_option("--format", cfg.format, "json");
  search->add_option("--out", cfg.out, "output file");

  auto* classic = app.add_subcommand("classic", "R1, R2, R3 and R_{1,k} of both sides at n");
  add_partition(classic, true);
  classic->add_option("--n", cfg.n, "target n")->required();
  classic->add_option("--limit", cfg.limit, "chi prefix (default n)");
  classic->add_option("--format", cfg.format, "json");
  classic->add_option("--out", cfg.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (cfg.format.empty() && cfg.command != "seeds") cfg.format = "json";

  try {
    if (cfg.command == "seeds") return run_seeds(cfg);
    if (cfg.command == "build") return run_build(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "scan-bound") return run_scan_bound(cfg);
    if (cfg.command == "witness") return run_witness(cfg);
    if (cfg.command == "search") return run_search(cfg);
    if (cfg.command == "classic") return run_classic(cfg);
  } catch (const NoWitness& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitClaimFailed;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitClaimFailed;
  } catch (const partrep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
