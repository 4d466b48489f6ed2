#include "partrep/partition_builder.hpp"

#include <algorithm>
#include <cmath>

#include "partrep/checked_math.hpp"

namespace partrep {

SeedAssignment SeedAssignment::from_string(std::uint64_t k, std::uint64_t n0,
                                           std::string_view bits) {
  if (k < 2) throw DomainError("k must be at least 2, got " + std::to_string(k));
  if (bits.size() != k + n0) {
    throw DomainError("seed must have exactly k + n0 = " + std::to_string(k + n0) +
                      " bits, got " + std::to_string(bits.size()));
  }
  SeedAssignment seed{k, n0, {}};
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("seed may only contain 0 and 1");
    seed.values.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return seed;
}

std::string SeedAssignment::to_string() const {
  std::string s;
  s.reserve(values.size());
  for (auto v : values) s.push_back(static_cast<char>('0' + v));
  return s;
}

SeedAssignment SeedAssignment::complement() const {
  SeedAssignment out = *this;
  for (auto& v : out.values) v ^= 1;
  return out;
}

std::uint64_t eq1_lhs(std::uint64_t k, std::uint64_t n) { return n / k + 1; }

WindowSums window_sums(std::span<const std::uint8_t> chi, std::uint64_t k, std::uint64_t n) {
  WindowSums sums;
  for (std::uint64_t a2 = 0; a2 * k <= n; ++a2) {
    ++sums.solutions;
    sums.chi_sum += chi[n - k * a2] + chi[a2];
  }
  return sums;
}

std::optional<std::uint64_t> SeedAssignment::first_window_failure() const {
  if (values.size() != k + n0) throw DomainError("seed length must be k + n0");
  for (std::uint64_t n = n0; n < k + n0; ++n) {
    const auto sums = window_sums(values, k, n);
    if (sums.solutions != sums.chi_sum) return n;
  }
  return std::nullopt;
}

bool SeedAssignment::satisfies_initial_window() const { return !first_window_failure(); }

namespace {

// Depth-first over chi(0), chi(1), ...; the window equation at n only reads
// chi on [0, n], so it is checked as soon as index n is assigned. Trying 0
// before 1 emits the seeds in lexicographic order.
void seed_dfs(std::uint64_t k, std::uint64_t n0, std::vector<std::uint8_t>& prefix,
              std::vector<SeedAssignment>& out) {
  const std::uint64_t len = k + n0;
  if (prefix.size() == len) {
    out.push_back(SeedAssignment{k, n0, prefix});
    return;
  }
  const std::uint64_t n = prefix.size();
  for (std::uint8_t bit : {0, 1}) {
    prefix.push_back(bit);
    bool ok = true;
    if (n >= n0) {
      const auto sums = window_sums(prefix, k, n);
      ok = sums.solutions == sums.chi_sum;
    }
    if (ok) seed_dfs(k, n0, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SeedAssignment> enumerate_valid_seeds(std::uint64_t k, std::uint64_t n0) {
  if (k < 2) throw DomainError("k must be at least 2, got " + std::to_string(k));
  if (k + n0 > kSeedEnumerationCap) {
    throw EnumerationCapExceeded("k + n0 = " + std::to_string(k + n0) +
                                 " exceeds the enumeration cap of " +
                                 std::to_string(kSeedEnumerationCap));
  }
  std::vector<SeedAssignment> out;
  std::vector<std::uint8_t> prefix;
  prefix.reserve(k + n0);
  seed_dfs(k, n0, prefix, out);
  return out;
}

ChiTable extend_chi(const SeedAssignment& seed, std::uint64_t limit, SeedCheck check) {
  const std::uint64_t len = seed.k + seed.n0;
  if (seed.values.size() != len) throw DomainError("seed length must be k + n0");
  if (limit + 1 < len) {
    throw DomainError("limit " + std::to_string(limit) + " is shorter than the seed");
  }
  if (check == SeedCheck::kRequireValid) {
    if (auto bad = seed.first_window_failure()) {
      throw InvalidSeed("seed " + seed.to_string() + " violates the initial-window equation at n=" +
                        std::to_string(*bad));
    }
  }
  std::vector<std::uint8_t> bits(limit + 1);
  std::copy(seed.values.begin(), seed.values.end(), bits.begin());
  for (std::uint64_t n = len; n <= limit; ++n) bits[n] = 1 - bits[n / seed.k];
  return ChiTable(seed.k, seed.n0, std::move(bits));
}

Lemma1Report verify_lemma1(const ChiTable& chi, std::uint64_t up_to) {
  chi.require(up_to, "verify_lemma1");
  const std::uint64_t k = chi.k();
  const std::uint64_t n0 = chi.n0();
  const auto bits = chi.bits();
  Lemma1Report report;
  report.checked_up_to = up_to;
  for (std::uint64_t n = n0; n < k + n0 && n <= up_to; ++n) {
    const auto sums = window_sums(bits, k, n);
    if (sums.solutions != sums.chi_sum) {
      report.initial_window = Lemma1Report::Counterexample{n, sums.solutions, sums.chi_sum};
      break;
    }
  }
  for (std::uint64_t n = k + n0; n <= up_to; ++n) {
    const std::uint64_t sum = bits[n] + bits[n / k];
    if (sum != 1) {
      report.recursion = Lemma1Report::Counterexample{n, sum, 1};
      break;
    }
  }
  return report;
}

ScanReport verify_equality(const ChiTable& chi, std::uint64_t up_to, unsigned workers) {
  chi.require(up_to, "verify_equality");
  ScanReport report;
  report.kind = ScanKind::kEquality;
  report.k = chi.k();
  report.n0 = chi.n0();
  report.lo = chi.n0();
  report.hi = up_to;
  if (report.lo > up_to) return report;
  const WeightPair w(1, chi.k());
  const auto set = rep_range(chi, Side::kSet, w, report.lo, up_to, workers);
  const auto comp = rep_range(chi, Side::kComplement, w, report.lo, up_to, workers);
  report.rows.reserve(set.size());
  for (std::size_t idx = 0; idx < set.size(); ++idx) {
    const std::uint64_t n = report.lo + idx;
    const bool equal = set[idx] == comp[idx];
    report.rows.push_back(ScanRow{n, set[idx], comp[idx], std::nullopt, equal});
    if (!equal) report.violations.push_back(n);
  }
  return report;
}

Lemma2Report verify_lemma2(const ChiTable& chi, unsigned i_max) {
  if (i_max < 1) throw DomainError("i_max must be at least 1");
  const std::uint64_t k = chi.k();
  const std::uint64_t limit = chi.limit();
  const auto bits = chi.bits();
  Lemma2Report report;
  report.i_max = i_max;
  report.threshold = (chi.n0() + k) / k + 1;
  for (unsigned i = 1; i <= i_max; ++i) {
    const auto block = try_pow(k, i);
    if (!block || *block > limit) break;
    const bool odd = (i % 2) == 1;
    for (std::uint64_t n = 0; n * *block <= limit; ++n) {
      const std::uint64_t start = n * *block;
      const std::uint64_t stop = std::min(limit, start + *block - 1);
      const bool above = n >= report.threshold;
      for (std::uint64_t idx = start; idx <= stop; ++idx) {
        const bool holds = odd ? (bits[n] + bits[idx] == 1) : (bits[n] == bits[idx]);
        if (!above) {
          ++(holds ? report.below_threshold_holds : report.below_threshold_fails);
          continue;
        }
        ++report.checks;
        report.n_hi = std::max(report.n_hi, n);
        if (!holds) {
          ++report.violation_count;
          if (report.violations.size() < Lemma2Report::kMaxStored) {
            report.violations.push_back(Lemma2Violation{n, i, idx - start});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace partrep
