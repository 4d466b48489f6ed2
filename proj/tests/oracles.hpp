#pragma once

// Test-only reference computations. Nothing here calls into the library's
// counting or construction code; each routine recomputes from definitions.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace partrep::oracle {

using Bits = std::vector<std::uint8_t>;

/// Ordered pairs (a1, a2) on the chosen side with k1*a1 + k2*a2 = n, found
/// by trying every a1, a2 in [0, n].
inline std::uint64_t naive_weighted(const Bits& chi, bool complement, std::uint64_t k1,
                                    std::uint64_t k2, std::uint64_t n) {
  std::uint64_t count = 0;
  const std::uint8_t want = complement ? 0 : 1;
  for (std::uint64_t a1 = 0; a1 <= n; ++a1) {
    for (std::uint64_t a2 = 0; a2 <= n; ++a2) {
      if (k1 * a1 + k2 * a2 == n && chi[a1] == want && chi[a2] == want) ++count;
    }
  }
  return count;
}

/// Pairs with a1 on side `first` and a2 on side `second` (1 = set).
inline std::uint64_t naive_cross(const Bits& chi, std::uint8_t first, std::uint8_t second,
                                 std::uint64_t k2, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a2 = 0; a2 * k2 <= n; ++a2) {
    const std::uint64_t a1 = n - k2 * a2;
    if (chi[a1] == first && chi[a2] == second) ++count;
  }
  return count;
}

/// Seeds by brute force over all 2^(k+n0) assignments, checking the window
/// equation with both sides summed over explicit solution lists.
inline std::vector<std::string> brute_force_seeds(std::uint64_t k, std::uint64_t n0) {
  const std::uint64_t len = k + n0;
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (1ULL << len); ++mask) {
    Bits chi(len);
    for (std::uint64_t idx = 0; idx < len; ++idx) chi[idx] = (mask >> idx) & 1;
    bool ok = true;
    for (std::uint64_t n = n0; n < len && ok; ++n) {
      std::uint64_t lhs = 0;
      std::uint64_t rhs = 0;
      for (std::uint64_t a1 = 0; a1 <= n; ++a1) {
        for (std::uint64_t a2 = 0; a2 <= n; ++a2) {
          if (a1 + k * a2 != n) continue;
          lhs += 1;
          rhs += chi[a1] + chi[a2];
        }
      }
      ok = lhs == rhs;
    }
    if (!ok) continue;
    std::string s;
    for (auto b : chi) s.push_back(static_cast<char>('0' + b));
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// chi(n) from the seed by walking the chain n -> n/k -> ... into the seed
/// window and counting the flips.
inline std::uint8_t chain_value(const std::string& seed, std::uint64_t k, std::uint64_t n) {
  unsigned flips = 0;
  while (n >= seed.size()) {
    n /= k;
    ++flips;
  }
  return static_cast<std::uint8_t>((seed[n] - '0') ^ (flips & 1));
}

/// Largest e with k^e * T <= n by multiplying upward in 128 bits.
inline unsigned naive_flog(std::uint64_t k, std::uint64_t n, std::uint64_t T) {
  unsigned e = 0;
  unsigned __int128 p = T;
  while (p * k <= n) {
    p *= k;
    ++e;
  }
  return e;
}

inline Bits random_bits(std::mt19937_64& rng, std::size_t len) {
  std::bernoulli_distribution coin(0.5);
  Bits out(len);
  for (auto& b : out) b = coin(rng) ? 1 : 0;
  return out;
}

}  // namespace partrep::oracle

namespace partrep::oracle {

/// Weighted counts for every n in [0, up_to] from one pass over all pairs
/// (a1, a2) in [0, up_to]^2.
inline std::vector<std::uint64_t> naive_table(const Bits& chi, bool complement, std::uint64_t k1,
                                              std::uint64_t k2, std::uint64_t up_to) {
  std::vector<std::uint64_t> out(up_to + 1, 0);
  const std::uint8_t want = complement ? 0 : 1;
  for (std::uint64_t a1 = 0; a1 <= up_to; ++a1) {
    for (std::uint64_t a2 = 0; a2 <= up_to; ++a2) {
      const std::uint64_t n = k1 * a1 + k2 * a2;
      if (n <= up_to && chi[a1] == want && chi[a2] == want) ++out[n];
    }
  }
  return out;
}

}  // namespace partrep::oracle
