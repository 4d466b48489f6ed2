#include <numeric>

#include "partrep/bound_lab.hpp"
#include "partrep/checked_math.hpp"

namespace partrep {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kUnsat:
      return "UNSAT";
    case SearchStatus::kSat:
      return "SAT";
    case SearchStatus::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

namespace {

// R(A, n) = R(comp, n) iff the chi values summed over all solutions of
// k1*a1 + k2*a2 = n equal the number of solutions.
bool balanced_at(const std::vector<std::uint8_t>& chi, const WeightPair& w, std::uint64_t n) {
  std::uint64_t solutions = 0;
  std::uint64_t sum = 0;
  for (std::uint64_t a2 = 0; a2 * w.k2 <= n; ++a2) {
    const std::uint64_t rest = n - a2 * w.k2;
    if (rest % w.k1 != 0) continue;
    ++solutions;
    sum += chi[rest / w.k1] + chi[a2];
  }
  return sum == solutions;
}

}  // namespace

SearchOutcome nonexistence_search(const WeightPair& w, std::uint64_t n0, std::uint64_t depth_cap,
                                  const SearchOptions& options) {
  if (!options.unchecked_weights) {
    if (w.k1 < 2 || w.k2 <= w.k1) {
      throw PreconditionError("search needs k2 > k1 >= 2, got (" + std::to_string(w.k1) + ", " +
                              std::to_string(w.k2) + ")");
    }
    if (std::gcd(w.k1, w.k2) != 1) {
      throw PreconditionError("search needs gcd(k1, k2) = 1, got gcd " +
                              std::to_string(std::gcd(w.k1, w.k2)));
    }
  }
  if (depth_cap == 0) throw DomainError("depth cap must be positive");

  const auto started = std::chrono::steady_clock::now();
  SearchOutcome out;
  out.weights = w;
  out.n0 = n0;
  out.depth_cap = depth_cap;

  // chi(d) is the last value every constraint at n in
  // [kmin*d, kmin*d + kmin - 1] depends on, so those are checked right after
  // it is assigned.
  const std::uint64_t kmin = w.min_weight();
  std::vector<std::uint8_t> chi;
  std::vector<std::uint8_t> tried{0};
  chi.reserve(depth_cap);

  auto constraints_hold = [&](std::uint64_t d) {
    const std::uint64_t first = kmin * d;
    for (std::uint64_t n = std::max(first, n0); n < first + kmin; ++n) {
      if (!balanced_at(chi, w, n)) return false;
    }
    return true;
  };

  out.status = SearchStatus::kUnsat;
  while (true) {
    const std::uint64_t d = chi.size();
    if (d == depth_cap) {
      out.status = SearchStatus::kSat;
      break;
    }
    if (tried[d] == 2) {
      if (d == 0) break;
      tried.pop_back();
      chi.pop_back();
      continue;
    }
    if (out.nodes >= options.node_limit) {
      out.status = SearchStatus::kInconclusive;
      break;
    }
    ++out.nodes;
    chi.push_back(tried[d]++);
    if (constraints_hold(d)) {
      out.max_depth = std::max(out.max_depth, d + 1);
      tried.push_back(0);
    } else {
      chi.pop_back();
    }
  }

  if (out.status == SearchStatus::kUnsat) out.unsat_depth = out.max_depth + 1;
  if (out.status == SearchStatus::kSat) {
    out.certificate = chi;
    out.certified_up_to = kmin * depth_cap - 1;
    if (!recheck_certificate(out)) {
      throw InvariantViolation("search certificate failed the independent recount");
    }
  }
  out.wall_time = std::chrono::steady_clock::now() - started;
  return out;
}

bool recheck_certificate(const SearchOutcome& outcome) {
  if (outcome.certificate.empty() || !outcome.certified_up_to) return false;
  const ChiTable chi(std::max<std::uint64_t>(2, outcome.weights.k2), outcome.n0,
                     outcome.certificate);
  for (std::uint64_t n = outcome.n0; n <= *outcome.certified_up_to; ++n) {
    if (rep_count_weighted(chi, Side::kSet, outcome.weights, n) !=
        rep_count_weighted(chi, Side::kComplement, outcome.weights, n)) {
      return false;
    }
  }
  return true;
}

}  // namespace partrep
