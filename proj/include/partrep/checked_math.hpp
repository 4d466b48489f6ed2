#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "partrep/errors.hpp"

namespace partrep {

inline std::optional<std::uint64_t> try_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

inline std::optional<std::uint64_t> try_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (auto v = try_mul(a, b)) return *v;
  throw DomainError("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (auto v = try_add(a, b)) return *v;
  throw DomainError("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
}

/// base^exp, or nullopt if it does not fit in 64 bits.
inline std::optional<std::uint64_t> try_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t acc = 1;
  for (unsigned e = 0; e < exp; ++e) {
    auto next = try_mul(acc, base);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  if (auto v = try_pow(base, exp)) return *v;
  throw DomainError("64-bit overflow in " + std::to_string(base) + "^" + std::to_string(exp));
}

/// Largest e with base^e * scale <= n. Works for any integer-like type with
/// exact division (built-in unsigned, __int128, boost::multiprecision); the
/// loop compares against n / base instead of multiplying past n, so it never
/// overflows. Callers guarantee base >= 2 and 1 <= scale <= n.
template <typename Int>
unsigned floor_log_scaled(const Int& base, const Int& n, const Int& scale) {
  unsigned e = 0;
  Int cur = scale;
  const Int bound = n / base;
  while (cur <= bound) {
    cur *= base;
    ++e;
  }
  return e;
}

}  // namespace partrep
