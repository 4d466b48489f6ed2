#pragma once

// Construction and verification of sets A with R_{1,k}(A, n) = R_{1,k}(N \ A, n)
// for all n >= n0. Such a set is fixed by its initial segment on [0, k + n0)
// together with the recursion chi(n) = 1 - chi(floor(n / k)).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partrep/core_repfn.hpp"

namespace partrep {

/// Largest k + n0 accepted by enumerate_valid_seeds.
inline constexpr std::uint64_t kSeedEnumerationCap = 24;

/// chi restricted to [0, k + n0).
struct SeedAssignment {
  std::uint64_t k = 2;
  std::uint64_t n0 = 0;
  std::vector<std::uint8_t> values;

  static SeedAssignment from_string(std::uint64_t k, std::uint64_t n0, std::string_view bits);
  std::string to_string() const;
  SeedAssignment complement() const;

  /// True iff the initial-window equation holds at every n in [n0, k + n0).
  bool satisfies_initial_window() const;
  /// First n in the window where the equation fails.
  std::optional<std::uint64_t> first_window_failure() const;

  friend bool operator==(const SeedAssignment&, const SeedAssignment&) = default;
};

/// Number of nonnegative solutions of a1 + k*a2 = n, i.e. floor(n/k) + 1.
std::uint64_t eq1_lhs(std::uint64_t k, std::uint64_t n);

/// Both sides of the initial-window equation at n for a chi known on [0, n].
struct WindowSums {
  std::uint64_t solutions = 0;
  std::uint64_t chi_sum = 0;  // sum of chi(a1) + chi(a2) over all solutions
};
WindowSums window_sums(std::span<const std::uint8_t> chi, std::uint64_t k, std::uint64_t n);

/// All valid seeds in lexicographic order of their bit strings.
/// Throws EnumerationCapExceeded if k + n0 > kSeedEnumerationCap.
std::vector<SeedAssignment> enumerate_valid_seeds(std::uint64_t k, std::uint64_t n0);

enum class SeedCheck : std::uint8_t { kRequireValid, kSkip };

/// chi on [0, limit]: the seed on [0, k+n0), then chi(n) = 1 - chi(n / k).
/// kSkip builds from an invalid seed as well, which the verifiers then reject.
ChiTable extend_chi(const SeedAssignment& seed, std::uint64_t limit,
                    SeedCheck check = SeedCheck::kRequireValid);

struct Lemma1Report {
  struct Counterexample {
    std::uint64_t n = 0;
    std::uint64_t lhs = 0;  // solution count, or chi(n) + chi(n / k)
    std::uint64_t rhs = 0;  // chi sum over the solutions, or 1
  };

  /// First n in [n0, k + n0) where the window equation fails.
  std::optional<Counterexample> initial_window;
  /// First n in [k + n0, checked_up_to] where chi(n) + chi(n / k) != 1.
  std::optional<Counterexample> recursion;
  std::uint64_t checked_up_to = 0;

  bool passed() const { return !initial_window && !recursion; }
};

/// Checks the initial-window equation on [n0, k + n0) and
/// chi(n) + chi(n / k) = 1 on [k + n0, up_to].
Lemma1Report verify_lemma1(const ChiTable& chi, std::uint64_t up_to);

enum class ScanKind : std::uint8_t { kEquality, kBound };

struct ScanRow {
  std::uint64_t n = 0;
  std::uint64_t r_set = 0;
  std::uint64_t r_complement = 0;
  std::optional<std::uint64_t> bound;
  bool ok = true;
};

struct ScanReport {
  ScanKind kind = ScanKind::kEquality;
  std::uint64_t k = 2;
  std::uint64_t n0 = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<ScanRow> rows;
  std::vector<std::uint64_t> violations;  // n values with ok == false
  /// Bound scans only: min over rows of R_A / max(1, ln n).
  std::optional<double> min_log_ratio;

  bool passed() const { return violations.empty(); }
};

/// R_{1,k} of both sides for every n in [n0, up_to].
ScanReport verify_equality(const ChiTable& chi, std::uint64_t up_to, unsigned workers = 1);

struct Lemma2Violation {
  std::uint64_t n = 0;
  unsigned i = 0;
  std::uint64_t j = 0;
  friend bool operator==(const Lemma2Violation&, const Lemma2Violation&) = default;
};

struct Lemma2Report {
  unsigned i_max = 0;
  std::uint64_t threshold = 0;   // floor((n0 + k) / k) + 1
  std::uint64_t n_hi = 0;        // largest n with at least one checked relation
  std::uint64_t checks = 0;      // relations checked at n >= threshold
  std::vector<Lemma2Violation> violations;  // first kMaxStored only
  std::uint64_t violation_count = 0;
  // Relations with n below the threshold: recorded, not judged.
  std::uint64_t below_threshold_holds = 0;
  std::uint64_t below_threshold_fails = 0;

  static constexpr std::size_t kMaxStored = 1000;
  bool passed() const { return violation_count == 0; }
};

/// For i in [1, i_max] and n >= threshold: chi(n) + chi(k^i n + j) = 1 for
/// odd i and chi(n) = chi(k^i n + j) for even i, j in [0, k^i). Triples
/// whose index k^i n + j lies past the prefix are skipped.
Lemma2Report verify_lemma2(const ChiTable& chi, unsigned i_max);

}  // namespace partrep
