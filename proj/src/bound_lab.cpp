#include "partrep/bound_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "partrep/checked_math.hpp"

namespace partrep {

unsigned flog(std::uint64_t k, std::uint64_t n, std::uint64_t T) {
  if (k < 2) throw DomainError("flog: k must be at least 2");
  if (T == 0) throw DomainError("flog: T must be positive");
  if (n < T) {
    throw DomainError("flog: n=" + std::to_string(n) + " is below T=" + std::to_string(T));
  }
  return floor_log_scaled<std::uint64_t>(k, n, T);
}

std::uint64_t compute_T(std::uint64_t k, std::uint64_t n0) {
  if (k < 2) throw DomainError("k must be at least 2");
  return (n0 + k) / k + 1;
}

std::uint64_t guaranteed_bound(std::uint64_t k, std::uint64_t n0, std::uint64_t n) {
  return flog(k, n, compute_T(k, n0)) / 4;
}

std::vector<unsigned> admissible_js(std::uint64_t k, std::uint64_t n0, std::uint64_t n) {
  const std::uint64_t T = compute_T(k, n0);
  std::vector<unsigned> js;
  if (n < T) return js;
  const unsigned top = flog(k, n, T) / 2;
  for (unsigned j = 1; j <= top; j += 2) js.push_back(j);
  return js;
}

std::string_view to_string(WitnessCase c) { return c == WitnessCase::kCase1 ? "Case1" : "Case2"; }

std::uint64_t Decomposition::case1_limit() const {
  return checked_pow(k, i + j) + checked_pow(k, i) - k - 1;
}

Decomposition decompose(std::uint64_t k, std::uint64_t n0, std::uint64_t n, unsigned j) {
  const std::uint64_t T = compute_T(k, n0);
  if (n < T) throw DomainError("decompose: n is below T=" + std::to_string(T));
  const unsigned log = flog(k, n, T);
  if (j % 2 == 0) throw DomainError("decompose: j must be odd, got " + std::to_string(j));
  if (j > log / 2) {
    throw DomainError("decompose: j=" + std::to_string(j) + " exceeds floor(flog/2)=" +
                      std::to_string(log / 2));
  }
  const std::uint64_t base = checked_add(checked_pow(k, j), 1);
  const std::uint64_t scaled_T = checked_mul(base, T);
  if (n < scaled_T) {
    throw DomainError("decompose: n=" + std::to_string(n) + " is below (k^j + 1) T = " +
                      std::to_string(scaled_T));
  }

  Decomposition d;
  d.k = k;
  d.n = n;
  d.j = j;
  d.T = T;
  d.log = log;
  d.i = floor_log_scaled<std::uint64_t>(k, n, scaled_T);
  const std::uint64_t modulus = checked_mul(checked_pow(k, d.i), base);
  d.t = n / modulus;
  d.r = n % modulus;

  if (d.t < T || d.t > k * T - 1) {
    throw InvariantViolation("decompose: t=" + std::to_string(d.t) + " outside [T, kT-1]");
  }
  if (d.i + j != log && d.i + j + 1 != log) {
    throw InvariantViolation("decompose: i+j=" + std::to_string(d.i + j) +
                             " is not flog or flog-1 (flog=" + std::to_string(log) + ")");
  }
  const std::uint64_t limit = d.case1_limit();
  if (d.r <= limit) {
    d.case_tag = WitnessCase::kCase1;
  } else {
    d.case_tag = WitnessCase::kCase2;
    d.s = d.r - limit;
    if (*d.s < 1 || *d.s > k) {
      throw InvariantViolation("decompose: s=" + std::to_string(*d.s) + " outside [1, k]");
    }
  }
  return d;
}

namespace {

Side side_of(bool bit) { return bit ? Side::kSet : Side::kComplement; }

void check_record(const ChiTable& chi, const WitnessRecord& rec) {
  const std::uint64_t k = chi.k();
  if (rec.a1 + k * rec.a2 != rec.n) {
    throw InvariantViolation("witness: a1 + k*a2 != n");
  }
  const bool want = rec.side == Side::kSet;
  if (chi.at(rec.a1) != want || chi.at(rec.a2) != want) {
    throw InvariantViolation("witness: a1 and a2 are not on the recorded side");
  }
}

std::optional<WitnessRecord> case1_pair(const ChiTable& chi, const Decomposition& d,
                                        const std::set<std::uint64_t>& exclude) {
  const std::uint64_t k = d.k;
  const std::uint64_t n = d.n;
  const std::uint64_t len2 = checked_pow(k, d.i + d.j - 1);
  const std::uint64_t len1 = checked_pow(k, d.i);
  const std::uint64_t start2 = checked_mul(len2, d.t);
  const std::uint64_t start1 = checked_mul(len1, d.t);
  // a1 = n - k*a2 in [start1, start1 + len1 - 1]
  const std::uint64_t top = n - start1;
  const std::uint64_t span_lo = top + 1 > len1 ? top + 1 - len1 : 0;
  const std::uint64_t a2_lo = std::max(start2, (span_lo + k - 1) / k);
  const std::uint64_t a2_hi = std::min(start2 + len2 - 1, top / k);
  for (std::uint64_t a2 = a2_lo; a2 <= a2_hi; ++a2) {
    if (exclude.contains(a2)) continue;
    const std::uint64_t a1 = n - k * a2;
    const bool b2 = chi.at(a2);
    if (chi.at(a1) == b2) return WitnessRecord{d, n, a1, a2, side_of(b2)};
  }
  return std::nullopt;
}

}  // namespace

WitnessOutcome extract_witness(const ChiTable& chi, std::uint64_t n, unsigned j,
                               const std::set<std::uint64_t>& exclude) {
  chi.require(n, "extract_witness");
  WitnessOutcome out{decompose(chi.k(), chi.n0(), n, j), std::nullopt, std::nullopt};
  const Decomposition& d = out.decomposition;
  const std::uint64_t k = d.k;

  if (d.i == 0) {
    out.below_threshold = "i = 0: the a1 block has a single element";
    return out;
  }

  if (d.case_tag == WitnessCase::kCase1) {
    auto rec = case1_pair(chi, d, exclude);
    if (!rec) {
      throw NoWitness("no Case 1 witness for n=" + std::to_string(n) + ", j=" +
                      std::to_string(j));
    }
    check_record(chi, *rec);
    out.record = rec;
    return out;
  }

  // Case 2: n = k^i m + (k^i - k - 1 + s), m = (k^j + 1) t + k^j.
  const std::uint64_t ki = checked_pow(k, d.i);
  const std::uint64_t kj = checked_pow(k, d.j);
  const std::uint64_t m = checked_add(checked_mul(kj + 1, d.t), kj);
  const std::uint64_t block_lo = checked_mul(ki, m);
  const bool side_bit = chi.at(block_lo);
  const std::uint64_t small_hi = k * d.T;
  std::optional<std::uint64_t> a;
  for (std::uint64_t cand = 0; cand <= small_hi; ++cand) {
    if (chi.at(cand) == side_bit && !exclude.contains(cand)) {
      a = cand;
      break;
    }
  }
  if (!a) {
    throw NoWitness("no element of [0, kT] on the side of the Case 2 block for n=" +
                    std::to_string(n) + ", j=" + std::to_string(j));
  }
  if (ki < k + 1 + k * *a) {
    out.below_threshold = "k^i - k - 1 < k*a (i=" + std::to_string(d.i) +
                          ", a=" + std::to_string(*a) + ")";
    return out;
  }
  const std::uint64_t a1 = n - k * *a;
  if (a1 < block_lo || a1 > block_lo + ki - 1 || chi.at(a1) != side_bit) {
    throw NoWitness("Case 2 element n - k*a=" + std::to_string(a1) +
                    " is not in the block on the expected side (n=" + std::to_string(n) +
                    ", j=" + std::to_string(j) + ")");
  }
  WitnessRecord rec{d, n, a1, *a, side_of(side_bit)};
  check_record(chi, rec);
  out.record = rec;
  return out;
}

std::size_t WitnessSet::found_count() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.found(); }));
}

std::size_t WitnessSet::below_threshold_count() const {
  return static_cast<std::size_t>(std::count_if(
      outcomes.begin(), outcomes.end(), [](const auto& o) { return o.below_threshold.has_value(); }));
}

WitnessSet witness_set(const ChiTable& chi, std::uint64_t n) {
  chi.require(n, "witness_set");
  WitnessSet ws;
  ws.n = n;
  const std::uint64_t T = compute_T(chi.k(), chi.n0());
  if (n < T) return ws;
  ws.bound = guaranteed_bound(chi.k(), chi.n0(), n);
  std::set<std::uint64_t> used;
  for (unsigned j : admissible_js(chi.k(), chi.n0(), n)) {
    auto outcome = extract_witness(chi, n, j, used);
    if (outcome.record) used.insert(outcome.record->a2);
    ws.outcomes.push_back(std::move(outcome));
  }
  return ws;
}

ScanReport bound_scan(const ChiTable& chi, std::uint64_t lo, std::uint64_t hi,
                      std::uint64_t stride, unsigned workers) {
  const std::uint64_t k = chi.k();
  const std::uint64_t T = compute_T(k, chi.n0());
  if (lo > hi) throw DomainError("bound_scan: empty range lo > hi");
  if (lo < T) throw DomainError("bound_scan: lo must be at least T=" + std::to_string(T));
  if (stride == 0) throw DomainError("bound_scan: stride must be positive");
  chi.require(hi, "bound_scan");

  ScanReport report;
  report.kind = ScanKind::kBound;
  report.k = k;
  report.n0 = chi.n0();
  report.lo = lo;
  report.hi = hi;
  const WeightPair w(1, k);

  std::vector<std::uint64_t> set_counts;
  std::vector<std::uint64_t> comp_counts;
  if (stride == 1) {
    set_counts = rep_range(chi, Side::kSet, w, lo, hi, workers);
    comp_counts = rep_range(chi, Side::kComplement, w, lo, hi, workers);
  }
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::uint64_t n = lo; n <= hi; n += stride) {
    ScanRow row;
    row.n = n;
    if (stride == 1) {
      row.r_set = set_counts[n - lo];
      row.r_complement = comp_counts[n - lo];
    } else {
      row.r_set = rep_count_weighted(chi, Side::kSet, w, n);
      row.r_complement = rep_count_weighted(chi, Side::kComplement, w, n);
    }
    row.bound = flog(k, n, T) / 4;
    row.ok = row.r_set >= *row.bound;
    if (!row.ok) report.violations.push_back(n);
    const double ratio =
        static_cast<double>(row.r_set) / std::max(1.0, std::log(static_cast<double>(n)));
    min_ratio = std::min(min_ratio, ratio);
    report.rows.push_back(row);
    if (hi - n < stride) break;
  }
  report.min_log_ratio = min_ratio;
  return report;
}

}  // namespace partrep
