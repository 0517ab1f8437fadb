#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"
#include "unitfrac/errors.hpp"
#include "unitfrac/greedy.hpp"
#include "unitfrac/underapprox.hpp"

using namespace unitfrac;

namespace {

Rational q(long n, long d) { return Rational::make(BigInt(n), BigInt(d)); }

Tuple t(std::initializer_list<long> xs) {
  Tuple out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(BestTwoTerm, FiveSixteenths) {
  UnderapproxResult r = best_two_term(q(5, 16));
  EXPECT_EQ(r.greedy_terms, t({4, 17}));
  EXPECT_EQ(r.optimal_tuples, std::vector<Tuple>{t({5, 9})});
  EXPECT_FALSE(r.greedy_is_best);
  EXPECT_TRUE(r.unique);
  EXPECT_EQ(r.optimal_sum, q(14, 45));
}

TEST(BestTwoTerm, TenSeventeenthsTies) {
  UnderapproxResult r = best_two_term(q(10, 17));
  EXPECT_EQ(r.optimal_tuples, (std::vector<Tuple>{t({2, 12}), t({3, 4})}));
  EXPECT_TRUE(r.greedy_is_best);
  EXPECT_FALSE(r.unique);
  EXPECT_EQ(r.optimal_sum, q(7, 12));
}

TEST(BestTwoTerm, ThreeSevenths) {
  UnderapproxResult r = best_two_term(q(3, 7));
  EXPECT_EQ(r.optimal_tuples, std::vector<Tuple>{t({3, 11})});
  EXPECT_TRUE(r.greedy_is_best);
  EXPECT_TRUE(r.unique);
}

TEST(BestTwoTerm, DomainErrors) {
  EXPECT_THROW(best_two_term(Rational(0)), DomainError);
  EXPECT_THROW(best_two_term(q(4, 3)), DomainError);
}

TEST(BestMTerm, AgreesWithTwoTermSearch) {
  for (long d = 2; d <= 30; ++d) {
    for (long n = 1; n < d; ++n) {
      if (std::gcd(n, d) != 1) continue;
      UnderapproxResult a = best_two_term(q(n, d));
      UnderapproxResult b = best_m_term(q(n, d), 2);
      EXPECT_EQ(a.optimal_tuples, b.optimal_tuples) << n << "/" << d;
      EXPECT_EQ(a.optimal_sum, b.optimal_sum);
    }
  }
}

TEST(BestMTerm, SingleTermIsGreedy) {
  for (long d = 2; d <= 25; ++d) {
    for (long n = 1; n <= d; ++n) {
      UnderapproxResult r = best_m_term(q(n, d), 1);
      EXPECT_EQ(r.optimal_tuples, std::vector<Tuple>{r.greedy_terms});
      EXPECT_TRUE(r.unique);
      EXPECT_TRUE(r.greedy_is_best);
    }
  }
}

TEST(BestMTerm, FiveThirteenthsThreeTerms) {
  UnderapproxResult r = best_m_term(q(5, 13), 3);
  EXPECT_EQ(r.status, SearchStatus::Complete);
  EXPECT_EQ(r.optimal_tuples, std::vector<Tuple>{t({3, 20, 781})});
  EXPECT_TRUE(r.greedy_is_best);
  EXPECT_TRUE(r.unique);
}

TEST(BestMTerm, PDividesQPlusOneThreeTerms) {
  for (long d : {5L, 7L, 11L, 14L, 23L}) {
    for (long n = 2; n < d; ++n) {
      if ((d + 1) % n != 0 || std::gcd(n, d) != 1) continue;
      UnderapproxResult r = best_m_term(q(n, d), 3);
      EXPECT_TRUE(r.greedy_is_best && r.unique) << n << "/" << d;
    }
  }
}

TEST(BestMTerm, BudgetYieldsInconclusive) {
  UnderapproxResult r = best_m_term(q(9, 28), 3, 5);
  EXPECT_EQ(r.status, SearchStatus::Inconclusive);
  EXPECT_TRUE(r.optimal_tuples.empty());
  EXPECT_GE(r.nodes, 5u);
}

TEST(BestMTerm, FourTermsOnSmallTargets) {
  // Greedy completion path: partial sums may reach the incumbent when m ≥ 4.
  for (long d = 2; d <= 9; ++d) {
    for (long n = 1; n < d; ++n) {
      if (std::gcd(n, d) != 1) continue;
      UnderapproxResult r = best_m_term(q(n, d), 4);
      ASSERT_EQ(r.status, SearchStatus::Complete);
      for (const auto& tuple : r.optimal_tuples) {
        EXPECT_EQ(reciprocal_sum(tuple), r.optimal_sum);
        EXPECT_TRUE(std::is_sorted(tuple.begin(), tuple.end()));
      }
      EXPECT_GE(r.optimal_sum, r.greedy_sum);
      EXPECT_LT(r.optimal_sum, q(n, d));
    }
  }
}

TEST(BestMTerm, MatchesNaiveOracleSmall) {
  for (long d = 2; d <= 20; ++d) {
    for (long n = 1; n < d; ++n) {
      if (std::gcd(n, d) != 1) continue;
      for (int m = 1; m <= 3; ++m) {
        oracle::Best expected = oracle::best_m_term(mpq_class(n, d), m);
        UnderapproxResult r = best_m_term(q(n, d), static_cast<std::size_t>(m));
        std::vector<Tuple> want(expected.tuples.begin(), expected.tuples.end());
        EXPECT_EQ(r.optimal_tuples, want) << n << "/" << d << " m=" << m;
      }
    }
  }
}

TEST(LevelBounds, Formula) {
  // θ = 5/16, m = 2, level 1, incumbent = greedy sum 21/68.
  SearchBounds b = level_bounds(1, 2, q(5, 16), Rational(0), BigInt(1), q(21, 68));
  EXPECT_EQ(b.lower, 4);
  EXPECT_EQ(b.upper, 6);  // ⌊2·68/21⌋
  EXPECT_FALSE(b.empty());
  EXPECT_THROW(level_bounds(0, 2, q(5, 16), Rational(0), BigInt(1), q(21, 68)), DomainError);
  EXPECT_THROW(level_bounds(1, 2, q(5, 16), q(5, 16), BigInt(1), q(21, 68)), DomainError);
}

TEST(CompetingPairs, FiveSixteenths) {
  std::vector<Tuple> pairs = competing_pairs(q(5, 16));
  ASSERT_FALSE(pairs.empty());
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), t({5, 9})), pairs.end());
  for (const auto& p : pairs) {
    Rational s = reciprocal_sum(p);
    EXPECT_GE(s, q(21, 68));
    EXPECT_LT(s, q(5, 16));
  }
}

TEST(CompetitorBounds, Examples) {
  EXPECT_TRUE(na23_bounds_check(q(5, 16), BigInt(5), BigInt(9)));
  EXPECT_TRUE(na23_bounds_check(q(10, 17), BigInt(3), BigInt(4)));
  EXPECT_THROW(na23_bounds_check(q(5, 16), BigInt(4), BigInt(17)), DomainError);
  EXPECT_THROW(na23_bounds_check(q(5, 16), BigInt(6), BigInt(100)), DomainError);
}

TEST(CompetitorBounds, EveryCompetitorPasses) {
  for (long d = 2; d <= 80; ++d) {
    for (long n = 1; n < d; ++n) {
      if (std::gcd(n, d) != 1) continue;
      for (const auto& p : competing_pairs(q(n, d))) {
        EXPECT_TRUE(na23_bounds_check(q(n, d), p[0], p[1])) << n << "/" << d << " (" << p[0] << "," << p[1] << ")";
      }
    }
  }
}

TEST(Muirhead, Examples) {
  EXPECT_TRUE(muirhead_certificate(t({2, 3, 8}), t({2, 3, 7})));
  EXPECT_FALSE(muirhead_certificate(t({5, 9}), t({4, 17})));
  EXPECT_THROW(muirhead_certificate(t({2, 3}), t({2, 3})), DomainError);
  EXPECT_THROW(muirhead_certificate(t({2, 3}), t({2, 3, 7})), DomainError);
  EXPECT_THROW(muirhead_certificate(t({3, 2}), t({2, 3})), DomainError);
}

TEST(ThresholdSweep, SmallRanges) {
  ThresholdSweep up_to_17 = verify_threshold_sweep(17);
  EXPECT_TRUE(up_to_17.report.passed());
  EXPECT_TRUE(up_to_17.report.exceptions_exact());
  std::vector<std::pair<std::int64_t, std::int64_t>> ties;
  std::vector<std::pair<std::int64_t, std::int64_t>> wide_ties;
  for (const auto& row : up_to_17.rows) {
    if (row.ties.empty()) continue;
    (row.upsilon <= 3 ? ties : wide_ties).emplace_back(row.p, row.q);
  }
  EXPECT_EQ(ties, (std::vector<std::pair<std::int64_t, std::int64_t>>{{10, 17}}));
  // Ties also occur once Υ = 4, e.g. 1/2 + 1/6 = 1/3 + 1/3 below 7/10.
  EXPECT_EQ(wide_ties, (std::vector<std::pair<std::int64_t, std::int64_t>>{{7, 10}, {9, 13}, {11, 16}}));

  ThresholdSweep up_to_16 = verify_threshold_sweep(16);
  EXPECT_TRUE(up_to_16.report.failures.empty());
  bool found = false;
  for (const auto& row : up_to_16.rows) {
    if (row.p == 5 && row.q == 16) {
      found = true;
      EXPECT_EQ(row.upsilon, 4);
      EXPECT_FALSE(row.greedy_is_best);
      EXPECT_NE(std::find(row.losses.begin(), row.losses.end(), t({5, 9})), row.losses.end());
    }
  }
  EXPECT_TRUE(found);
}

TEST(ThresholdSweep, HundredAndJobsInvariance) {
  ThresholdSweep one = verify_threshold_sweep(100, 1);
  ThresholdSweep four = verify_threshold_sweep(100, 4);
  EXPECT_TRUE(one.report.passed());
  EXPECT_EQ(one.report.failures.size(), 1u);
  EXPECT_EQ(one.report, four.report);
  ASSERT_EQ(one.rows.size(), four.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].p, four.rows[i].p);
    EXPECT_EQ(one.rows[i].losses, four.rows[i].losses);
  }
}
