#pragma once

// Exact representation-function arithmetic over a finite prefix of the
// naturals. A set A is known only through its characteristic function on
// [0, limit]; every query that would need a value past the prefix raises
// QueryBeyondPrefix instead of treating the unknown tail as empty.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partrep/errors.hpp"

namespace partrep {

/// Which side of the partition a count refers to.
enum class Side : std::uint8_t { kSet, kComplement };

std::string_view to_string(Side side);

/// Coefficients of n = k1*a1 + k2*a2. The weight k2 is attached to the
/// second element of the ordered pair.
struct WeightPair {
  std::uint64_t k1 = 1;
  std::uint64_t k2 = 1;

  WeightPair() = default;
  WeightPair(std::uint64_t k1_, std::uint64_t k2_);

  std::uint64_t min_weight() const { return k1 < k2 ? k1 : k2; }
  std::uint64_t max_weight() const { return k1 < k2 ? k2 : k1; }
  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

/// Characteristic function chi of A on [0, limit], together with the
/// partition parameters (k, n0) the table was built for.
class ChiTable {
 public:
  ChiTable(std::uint64_t k, std::uint64_t n0, std::vector<std::uint8_t> bits);

  /// Parses a 0/1 string, index 0 first.
  static ChiTable from_string(std::uint64_t k, std::uint64_t n0, std::string_view bits);

  std::uint64_t k() const { return k_; }
  std::uint64_t n0() const { return n0_; }
  std::uint64_t limit() const { return bits_.size() - 1; }

  /// chi(n). Throws QueryBeyondPrefix past the prefix.
  bool at(std::uint64_t n) const;

  /// Membership of n on the given side; the complement is a bit flip of the
  /// same storage, never a second copy.
  bool contains(Side side, std::uint64_t n) const { return at(n) != (side == Side::kComplement); }

  /// Raw 0/1 bytes, one per index in [0, limit].
  std::span<const std::uint8_t> bits() const { return bits_; }

  /// Number of elements of the given side in [0, x]  (|C(x)|).
  std::uint64_t prefix_count(Side side, std::uint64_t x) const;

  std::string to_string() const;

  /// Throws QueryBeyondPrefix unless n <= limit.
  void require(std::uint64_t n, std::string_view what) const;

 private:
  std::uint64_t k_;
  std::uint64_t n0_;
  std::vector<std::uint8_t> bits_;
};

/// R_{k1,k2} values of one side of a ChiTable on [0, values.size()-1].
struct RepTable {
  WeightPair weights;
  Side side = Side::kSet;
  std::vector<std::uint64_t> values;
};

/// Largest n whose weighted count depends only on the known prefix:
/// every a1, a2 in a solution is at most n / min(k1, k2).
std::uint64_t max_determined_n(const ChiTable& chi, const WeightPair& w);

/// Number of ordered pairs (a1, a2) on `side` with n = k1*a1 + k2*a2.
std::uint64_t rep_count_weighted(const ChiTable& chi, Side side, const WeightPair& w,
                                 std::uint64_t n);

/// Counts for every n in [lo, hi]; sieves over a2 and the admissible a1 range.
std::vector<std::uint64_t> rep_range(const ChiTable& chi, Side side, const WeightPair& w,
                                     std::uint64_t lo, std::uint64_t hi,
                                     unsigned workers = 1);

/// rep_count_weighted for all n in [0, up_to].
RepTable rep_table(const ChiTable& chi, Side side, const WeightPair& w, std::uint64_t up_to,
                   unsigned workers = 1);

enum class ClassicVariant : std::uint8_t { kR1, kR2, kR3 };

/// R1: ordered pairs a + a' = n. R2: a < a'. R3: a <= a'.
std::uint64_t classic_rep(const ChiTable& chi, Side side, ClassicVariant variant,
                          std::uint64_t n);

/// Pairs with a1 on side `first` and a2 on side `second`, k1 = 1, k2 = w.k2.
std::uint64_t cross_count(const ChiTable& chi, Side first, Side second, const WeightPair& w,
                          std::uint64_t n);

/// R(A) + R(comp) + cross(A, comp) + cross(comp, A) == floor(n/k2) + 1.
/// Requires w.k1 == 1.
bool total_identity_check(const ChiTable& chi, const WeightPair& w, std::uint64_t n);

}  // namespace partrep
