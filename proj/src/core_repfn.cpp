#include "partrep/core_repfn.hpp"

#include <algorithm>
#include <thread>

#include "partrep/checked_math.hpp"

namespace partrep {

std::string_view to_string(Side side) {
  return side == Side::kSet ? "set" : "complement";
}

WeightPair::WeightPair(std::uint64_t k1_, std::uint64_t k2_) : k1(k1_), k2(k2_) {
  if (k1 < 1 || k2 < 1) throw DomainError("weights must be positive");
}

ChiTable::ChiTable(std::uint64_t k, std::uint64_t n0, std::vector<std::uint8_t> bits)
    : k_(k), n0_(n0), bits_(std::move(bits)) {
  if (k_ < 2) throw DomainError("k must be at least 2, got " + std::to_string(k_));
  if (bits_.empty()) throw DomainError("characteristic table must cover at least [0, 0]");
  for (auto b : bits_) {
    if (b > 1) throw DomainError("characteristic values must be 0 or 1");
  }
}

ChiTable ChiTable::from_string(std::uint64_t k, std::uint64_t n0, std::string_view bits) {
  std::vector<std::uint8_t> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("bit string may only contain 0 and 1");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return ChiTable(k, n0, std::move(out));
}

void ChiTable::require(std::uint64_t n, std::string_view what) const {
  if (n > limit()) {
    throw QueryBeyondPrefix(std::string(what) + ": index " + std::to_string(n) +
                            " is beyond the known prefix [0, " + std::to_string(limit()) + "]");
  }
}

bool ChiTable::at(std::uint64_t n) const {
  require(n, "chi");
  return bits_[n] != 0;
}

std::uint64_t ChiTable::prefix_count(Side side, std::uint64_t x) const {
  require(x, "prefix_count");
  auto ones = static_cast<std::uint64_t>(std::count(bits_.begin(), bits_.begin() + x + 1, 1));
  return side == Side::kSet ? ones : x + 1 - ones;
}

std::string ChiTable::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

std::uint64_t max_determined_n(const ChiTable& chi, const WeightPair& w) {
  auto v = try_mul(w.min_weight(), chi.limit() + 1);
  return v ? *v - 1 : UINT64_MAX;
}

namespace {

void require_determined(const ChiTable& chi, const WeightPair& w, std::uint64_t n,
                        std::string_view what) {
  if (n > max_determined_n(chi, w)) {
    throw QueryBeyondPrefix(std::string(what) + ": count at n=" + std::to_string(n) +
                            " needs chi past the known prefix [0, " +
                            std::to_string(chi.limit()) + "]");
  }
}

// Inner loop shared by the single-n and batched counters. `flip` is 0 for
// the set and 1 for the complement.
void accumulate_range(std::span<const std::uint8_t> bits, std::uint8_t flip_first,
                      std::uint8_t flip_second, const WeightPair& w, std::uint64_t lo,
                      std::uint64_t hi, std::span<std::uint64_t> out) {
  const std::uint64_t k1 = w.k1;
  const std::uint64_t k2 = w.k2;
  for (std::uint64_t a2 = 0; a2 * k2 <= hi; ++a2) {
    if ((bits[a2] ^ flip_second) == 0) continue;
    const std::uint64_t base = a2 * k2;
    // a1 in [ceil((lo - base)/k1), floor((hi - base)/k1)]
    const std::uint64_t a1_lo = base >= lo ? 0 : (lo - base + k1 - 1) / k1;
    const std::uint64_t a1_hi = (hi - base) / k1;
    for (std::uint64_t a1 = a1_lo; a1 <= a1_hi; ++a1) {
      if ((bits[a1] ^ flip_first) != 0) ++out[base + a1 * k1 - lo];
    }
  }
}

std::uint8_t flip_of(Side side) { return side == Side::kComplement ? 1 : 0; }

}  // namespace

std::uint64_t rep_count_weighted(const ChiTable& chi, Side side, const WeightPair& w,
                                 std::uint64_t n) {
  return cross_count(chi, side, side, w, n);
}

std::uint64_t cross_count(const ChiTable& chi, Side first, Side second, const WeightPair& w,
                          std::uint64_t n) {
  require_determined(chi, w, n, "rep_count");
  std::uint64_t count = 0;
  for (std::uint64_t a2 = 0; a2 * w.k2 <= n; ++a2) {
    const std::uint64_t rest = n - a2 * w.k2;
    if (rest % w.k1 != 0) continue;
    if (chi.contains(first, rest / w.k1) && chi.contains(second, a2)) ++count;
  }
  return count;
}

std::vector<std::uint64_t> rep_range(const ChiTable& chi, Side side, const WeightPair& w,
                                     std::uint64_t lo, std::uint64_t hi, unsigned workers) {
  if (lo > hi) throw DomainError("empty range");
  require_determined(chi, w, hi, "rep_range");
  std::vector<std::uint64_t> out(hi - lo + 1, 0);
  const auto flip = flip_of(side);
  const auto bits = chi.bits();
  const std::uint64_t span_len = hi - lo + 1;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                         std::min<std::uint64_t>(span_len, 256))));
  if (workers == 1) {
    accumulate_range(bits, flip, flip, w, lo, hi, out);
    return out;
  }
  // Shards own disjoint slices of `out`.
  const std::uint64_t chunk = (span_len + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t s_lo = lo + t * chunk;
      if (s_lo > hi) break;
      const std::uint64_t s_hi = std::min(hi, s_lo + chunk - 1);
      std::span<std::uint64_t> slice(out.data() + (s_lo - lo), s_hi - s_lo + 1);
      pool.emplace_back([=] { accumulate_range(bits, flip, flip, w, s_lo, s_hi, slice); });
    }
  }
  return out;
}

RepTable rep_table(const ChiTable& chi, Side side, const WeightPair& w, std::uint64_t up_to,
                   unsigned workers) {
  return RepTable{w, side, rep_range(chi, side, w, 0, up_to, workers)};
}

std::uint64_t classic_rep(const ChiTable& chi, Side side, ClassicVariant variant,
                          std::uint64_t n) {
  chi.require(n, "classic_rep");
  std::uint64_t ordered = 0;
  std::uint64_t diagonal = 0;
  for (std::uint64_t a = 0; a <= n; ++a) {
    if (!chi.contains(side, a) || !chi.contains(side, n - a)) continue;
    ++ordered;
    if (2 * a == n) ++diagonal;
  }
  switch (variant) {
    case ClassicVariant::kR1:
      return ordered;
    case ClassicVariant::kR2:
      return (ordered - diagonal) / 2;
    case ClassicVariant::kR3:
      return (ordered - diagonal) / 2 + diagonal;
  }
  return 0;
}

bool total_identity_check(const ChiTable& chi, const WeightPair& w, std::uint64_t n) {
  if (w.k1 != 1) throw DomainError("total identity check needs k1 = 1");
  const std::uint64_t total = rep_count_weighted(chi, Side::kSet, w, n) +
                              rep_count_weighted(chi, Side::kComplement, w, n) +
                              cross_count(chi, Side::kSet, Side::kComplement, w, n) +
                              cross_count(chi, Side::kComplement, Side::kSet, w, n);
  return total == n / w.k2 + 1;
}

}  // namespace partrep
