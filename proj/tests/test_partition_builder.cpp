#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "partrep/partition_builder.hpp"

namespace partrep {
namespace {

std::vector<std::string> as_strings(const std::vector<SeedAssignment>& seeds) {
  std::vector<std::string> out;
  for (const auto& s : seeds) out.push_back(s.to_string());
  return out;
}

ChiTable seed011(std::uint64_t limit) {
  return extend_chi(SeedAssignment::from_string(2, 1, "011"), limit);
}

TEST(WindowSolutionCount, CountsSolutions) {
  EXPECT_EQ(eq1_lhs(2, 1), 1u);
  EXPECT_EQ(eq1_lhs(2, 2), 2u);
  EXPECT_EQ(eq1_lhs(3, 9), 4u);
  std::vector<std::uint8_t> dummy(40, 0);
  for (std::uint64_t k = 2; k <= 6; ++k) {
    for (std::uint64_t n = 0; n < 40; ++n) {
      EXPECT_EQ(window_sums(dummy, k, n).solutions, eq1_lhs(k, n));
    }
  }
}

TEST(EnumerateSeeds, TwoSeedsForKTwoNZeroOne) {
  const auto seeds = enumerate_valid_seeds(2, 1);
  EXPECT_EQ(as_strings(seeds), (std::vector<std::string>{"011", "100"}));
  EXPECT_EQ(seeds[0].complement(), seeds[1]);
}

TEST(EnumerateSeeds, MatchesBruteForceOracle) {
  for (std::uint64_t k = 2; k <= 6; ++k) {
    for (std::uint64_t n0 = 0; n0 + k <= 12; ++n0) {
      EXPECT_EQ(as_strings(enumerate_valid_seeds(k, n0)), oracle::brute_force_seeds(k, n0))
          << "k=" << k << " n0=" << n0;
    }
  }
}

TEST(EnumerateSeeds, ComplementClosedAndValid) {
  for (std::uint64_t k = 2; k <= 5; ++k) {
    for (std::uint64_t n0 = 0; n0 <= 6; ++n0) {
      const auto seeds = enumerate_valid_seeds(k, n0);
      const auto strings = as_strings(seeds);
      ASSERT_TRUE(std::is_sorted(strings.begin(), strings.end()));
      const std::set<std::string> all(strings.begin(), strings.end());
      for (const auto& s : seeds) {
        EXPECT_TRUE(s.satisfies_initial_window());
        EXPECT_TRUE(all.contains(s.complement().to_string()));
      }
    }
  }
}

TEST(EnumerateSeeds, CapAndDomain) {
  EXPECT_THROW(enumerate_valid_seeds(2, 30), EnumerationCapExceeded);
  EXPECT_THROW(enumerate_valid_seeds(1, 0), DomainError);
  EXPECT_NO_THROW(enumerate_valid_seeds(4, 20));
}

TEST(SeedAssignment, ParsingAndWindowCheck) {
  EXPECT_THROW(SeedAssignment::from_string(2, 1, "01"), DomainError);
  EXPECT_THROW(SeedAssignment::from_string(2, 1, "0a1"), DomainError);
  const auto bad = SeedAssignment::from_string(2, 1, "010");
  // n = 2: solutions (2,0), (0,1) give 2, chi sums to chi(2)+chi(0)+chi(0)+chi(1) = 1.
  EXPECT_EQ(bad.first_window_failure(), std::optional<std::uint64_t>(2));
}

TEST(ExtendChi, HandTableFromSeed011) {
  const auto chi = seed011(10);
  EXPECT_EQ(chi.to_string(), "01100011111");
}

TEST(ExtendChi, ComplementSeedGivesComplementTable) {
  const auto a = seed011(10);
  const auto b = extend_chi(SeedAssignment::from_string(2, 1, "100"), 10);
  for (std::uint64_t n = 0; n <= 10; ++n) EXPECT_NE(a.at(n), b.at(n));
}

TEST(ExtendChi, RejectsInvalidSeedUnlessSkipped) {
  const auto bad = SeedAssignment::from_string(2, 1, "010");
  EXPECT_THROW(extend_chi(bad, 20), InvalidSeed);
  EXPECT_NO_THROW(extend_chi(bad, 20, SeedCheck::kSkip));
  EXPECT_THROW(extend_chi(SeedAssignment::from_string(2, 1, "011"), 1), DomainError);
}

TEST(ExtendChi, AgreesWithChainOracleAndPrefixes) {
  for (std::uint64_t k = 2; k <= 5; ++k) {
    for (std::uint64_t n0 = 0; n0 <= 3; ++n0) {
      for (const auto& seed : enumerate_valid_seeds(k, n0)) {
        const auto long_chi = extend_chi(seed, 3000);
        const auto short_chi = extend_chi(seed, 700);
        const auto s = seed.to_string();
        for (std::uint64_t n = 0; n <= 3000; ++n) {
          ASSERT_EQ(long_chi.at(n), oracle::chain_value(s, k, n) == 1);
          if (n <= 700) ASSERT_EQ(long_chi.at(n), short_chi.at(n));
        }
      }
    }
  }
}

TEST(VerifyLemma1, PassesOnExtension) {
  for (std::uint64_t k = 2; k <= 4; ++k) {
    for (const auto& seed : enumerate_valid_seeds(k, 2)) {
      EXPECT_TRUE(verify_lemma1(extend_chi(seed, 2000), 2000).passed());
    }
  }
}

TEST(VerifyLemma1, SingleFlipIsCaught) {
  const auto base = seed011(200);
  auto bits = std::vector<std::uint8_t>(base.bits().begin(), base.bits().end());
  bits[50] ^= 1;
  const auto report = verify_lemma1(ChiTable(2, 1, bits), 200);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.initial_window);
  ASSERT_TRUE(report.recursion);
  EXPECT_EQ(report.recursion->n, 50u);
}

TEST(VerifyLemma1, AllOnesFailsRecursionAtThree) {
  const ChiTable ones(2, 1, std::vector<std::uint8_t>(101, 1));
  const auto report = verify_lemma1(ones, 100);
  EXPECT_FALSE(report.passed());
  ASSERT_TRUE(report.recursion);
  EXPECT_EQ(report.recursion->n, 3u);
  EXPECT_EQ(report.recursion->lhs, 2u);
  // The window also fails, at n = 1: chi(1) + chi(0) = 2 != 1.
  ASSERT_TRUE(report.initial_window);
  EXPECT_EQ(report.initial_window->n, 1u);
  EXPECT_THROW(verify_lemma1(ones, 101), QueryBeyondPrefix);
}

TEST(VerifyEquality, HandCountAtFour) {
  const auto chi = seed011(20);
  const auto report = verify_equality(chi, 20);
  ASSERT_TRUE(report.passed());
  const auto& row = report.rows[4 - report.lo];
  EXPECT_EQ(row.n, 4u);
  EXPECT_EQ(row.r_set, 1u);        // (2, 1)
  EXPECT_EQ(row.r_complement, 1u);  // (4, 0)
}

TEST(VerifyEquality, ValidSeedsHaveNoViolations) {
  for (std::uint64_t k = 2; k <= 4; ++k) {
    for (std::uint64_t n0 = 0; n0 <= 3; ++n0) {
      for (const auto& seed : enumerate_valid_seeds(k, n0)) {
        EXPECT_TRUE(verify_equality(extend_chi(seed, 3000), 3000).passed());
      }
    }
  }
}

TEST(VerifyEquality, FlipBreaksEqualityNearby) {
  // A chi that fails the recursion first at m fails equality somewhere in
  // [m, k*m + k] (the differences D(n) - D(n - k) expose it).
  const auto base = seed011(4000);
  for (std::uint64_t m : {37ULL, 50ULL, 129ULL, 1000ULL}) {
    auto bits = std::vector<std::uint8_t>(base.bits().begin(), base.bits().end());
    bits[m] ^= 1;
    const ChiTable flipped(2, 1, bits);
    const auto l1 = verify_lemma1(flipped, 4000);
    ASSERT_TRUE(l1.recursion);
    const auto eq = verify_equality(flipped, 4000);
    ASSERT_FALSE(eq.passed());
    EXPECT_GE(eq.violations.front(), l1.recursion->n);
    EXPECT_LE(eq.violations.front(), 2 * l1.recursion->n + 2);
  }
}

TEST(VerifyLemma2, PassesAndMatchesHandValues) {
  const auto chi = seed011(20000);
  EXPECT_TRUE(chi.at(2));
  for (std::uint64_t n : {8ULL, 9ULL, 10ULL, 11ULL}) EXPECT_TRUE(chi.at(n));  // i = 2, even
  EXPECT_FALSE(chi.at(4));  // i = 1, odd
  EXPECT_FALSE(chi.at(5));
  const auto report = verify_lemma2(chi, 4);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.threshold, 2u);
  EXPECT_GT(report.checks, 0u);
  EXPECT_THROW(verify_lemma2(chi, 0), DomainError);
}

TEST(VerifyLemma2, FirstExponentIsTheRecursion) {
  for (const auto& seed : enumerate_valid_seeds(3, 2)) {
    const auto chi = extend_chi(seed, 5000);
    const auto report = verify_lemma2(chi, 1);
    EXPECT_TRUE(report.passed());
    for (std::uint64_t n = report.threshold; 3 * n + 2 <= 5000; ++n) {
      for (std::uint64_t j = 0; j < 3; ++j) ASSERT_EQ(chi.at(n) + chi.at(3 * n + j), 1);
    }
  }
}

TEST(VerifyLemma2, ReportsFlip) {
  const auto base = seed011(5000);
  auto bits = std::vector<std::uint8_t>(base.bits().begin(), base.bits().end());
  bits[100] ^= 1;
  const auto report = verify_lemma2(ChiTable(2, 1, bits), 3);
  EXPECT_FALSE(report.passed());
  for (const auto& v : report.violations) {
    EXPECT_GE(v.n, report.threshold);
    EXPECT_LT(v.j, 1ULL << v.i);
  }
}

}  // namespace
}  // namespace partrep
