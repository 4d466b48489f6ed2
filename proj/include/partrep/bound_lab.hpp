#pragma once

// Constructive side of the logarithmic lower bound: the exact integer
// logarithm, the decomposition n = k^i (k^j + 1) t + r used to locate
// witness intervals, explicit witness pairs (a1, a2) with a1 + k*a2 = n on
// one side of the partition, the bound B(n) and range scans against it.

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "partrep/core_repfn.hpp"
#include "partrep/partition_builder.hpp"

namespace partrep {

/// Largest e with k^e * T <= n, in exact integer arithmetic.
/// Throws DomainError if n < T, T == 0 or k < 2.
unsigned flog(std::uint64_t k, std::uint64_t n, std::uint64_t T);

/// floor((n0 + k) / k) + 1.
std::uint64_t compute_T(std::uint64_t k, std::uint64_t n0);

/// floor(flog(k, n, T) / 4) with T = compute_T(k, n0).
std::uint64_t guaranteed_bound(std::uint64_t k, std::uint64_t n0, std::uint64_t n);

/// Odd j in [0, floor(flog(k, n, T) / 2)]; empty when n < T.
std::vector<unsigned> admissible_js(std::uint64_t k, std::uint64_t n0, std::uint64_t n);

enum class WitnessCase : std::uint8_t { kCase1, kCase2 };
std::string_view to_string(WitnessCase c);

struct Decomposition {
  std::uint64_t k = 2;
  std::uint64_t n = 0;
  unsigned j = 1;
  unsigned i = 0;
  std::uint64_t t = 0;
  std::uint64_t r = 0;
  std::uint64_t T = 0;
  unsigned log = 0;  // flog(k, n, T)
  WitnessCase case_tag = WitnessCase::kCase1;
  std::optional<std::uint64_t> s;  // set iff Case 2, in [1, k]

  /// k^{i+j} + k^i - k - 1: largest r handled by Case 1.
  std::uint64_t case1_limit() const;
};

/// Writes n = k^i (k^j + 1) t + r with k^i (k^j+1) T <= n < k^{i+1} (k^j+1) T,
/// t in [T, kT - 1] and r in [0, k^i (k^j + 1)). Every returned value has
/// been checked against these relations and i + j in {log, log - 1}.
Decomposition decompose(std::uint64_t k, std::uint64_t n0, std::uint64_t n, unsigned j);

struct WitnessRecord {
  Decomposition decomposition;
  std::uint64_t n = 0;
  std::uint64_t a1 = 0;
  std::uint64_t a2 = 0;
  Side side = Side::kSet;
};

struct WitnessOutcome {
  Decomposition decomposition;
  std::optional<WitnessRecord> record;
  /// Set when n is too small for the interval argument to apply
  /// (i = 0, or k^i - k - 1 < k*a in Case 2). Not a failure.
  std::optional<std::string> below_threshold;

  bool found() const { return record.has_value(); }
};

/// Locates a witness pair for odd j. Case 1 scans a2 upward through
/// [k^{i+j-1} t, k^{i+j-1} (t + 1)) and takes the first pair whose a1 lies in
/// [k^i t, k^i (t + 1)) with matching membership. Case 2 scans a upward in
/// [0, kT] for the side of [k^i m, k^i (m + 1)), m = (k^j + 1) t + k^j, and
/// sets (a1, a2) = (n - k a, a). Values of a2 listed in `exclude` are
/// skipped. Throws NoWitness when the argument applies but no pair exists.
WitnessOutcome extract_witness(const ChiTable& chi, std::uint64_t n, unsigned j,
                               const std::set<std::uint64_t>& exclude = {});

struct WitnessSet {
  std::uint64_t n = 0;
  std::uint64_t bound = 0;  // B(n)
  std::vector<WitnessOutcome> outcomes;  // one per admissible odd j, ascending

  std::size_t found_count() const;
  std::size_t below_threshold_count() const;
};

/// extract_witness for every admissible odd j, keeping the a2 values
/// pairwise distinct across j.
WitnessSet witness_set(const ChiTable& chi, std::uint64_t n);

/// R_{1,k} of both sides against B(n) for n in [lo, hi] stepping by `stride`.
/// Row flag: R_A(n) >= B(n). Throws DomainError if lo < T or lo > hi.
ScanReport bound_scan(const ChiTable& chi, std::uint64_t lo, std::uint64_t hi,
                      std::uint64_t stride = 1, unsigned workers = 1);

enum class SearchStatus : std::uint8_t { kUnsat, kSat, kInconclusive };
std::string_view to_string(SearchStatus s);

struct SearchOptions {
  std::uint64_t node_limit = 50'000'000;
  /// Skips the k2 > k1 >= 2, gcd = 1 precondition. Test use only: with
  /// k1 = 1 the instance is satisfiable and exercises the SAT path.
  bool unchecked_weights = false;
};

struct SearchOutcome {
  WeightPair weights;
  std::uint64_t n0 = 0;
  std::uint64_t depth_cap = 0;
  SearchStatus status = SearchStatus::kInconclusive;
  /// Deepest prefix length that satisfied every determined constraint.
  std::uint64_t max_depth = 0;
  /// UNSAT: smallest N such that no chi on [0, N) satisfies the constraints
  /// at every n in [n0, N*min(k1,k2) - 1].
  std::optional<std::uint64_t> unsat_depth;
  std::uint64_t nodes = 0;
  /// SAT: chi on [0, depth_cap) and the largest n it fully determines.
  std::vector<std::uint8_t> certificate;
  std::optional<std::uint64_t> certified_up_to;
  std::chrono::duration<double> wall_time{};
};

/// Depth-first search for chi with R_{k1,k2}(A, n) = R_{k1,k2}(N \ A, n) on
/// every n >= n0 determined by chi on [0, depth_cap). A SAT certificate is
/// re-checked with rep_count_weighted before it is returned.
SearchOutcome nonexistence_search(const WeightPair& w, std::uint64_t n0,
                                  std::uint64_t depth_cap, const SearchOptions& options = {});

/// Recount of a certificate with the core counter; true iff every n in
/// [n0, certified_up_to] has equal counts on both sides.
bool recheck_certificate(const SearchOutcome& outcome);

}  // namespace partrep
