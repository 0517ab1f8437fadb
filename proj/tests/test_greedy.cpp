#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "unitfrac/errors.hpp"
#include "unitfrac/greedy.hpp"

using namespace unitfrac;

namespace {

Rational q(long n, long d) { return Rational::make(BigInt(n), BigInt(d)); }

std::vector<std::string> strings(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(GFunc, Values) {
  EXPECT_EQ(g_func(Rational(1)), 2);
  EXPECT_EQ(g_func(q(5, 16)), 4);
  EXPECT_EQ(g_func(q(1, 2)), 3);
  EXPECT_THROW(g_func(Rational(0)), DomainError);
  EXPECT_THROW(g_func(q(3, 2)), DomainError);
  EXPECT_THROW(g_func(q(-1, 2)), DomainError);
}

TEST(Expand, OneSeventh) {
  EXPECT_EQ(strings(expand(q(1, 7), 5).terms),
            (std::vector<std::string>{"8", "57", "3193", "10192057", "103878015699193"}));
}

TEST(Expand, Sylvester) {
  Expansion e = expand(Rational(1), 8);
  EXPECT_EQ(strings(e.terms), (std::vector<std::string>{"2", "3", "7", "43", "1807", "3263443", "10650056950807",
                                                        "113423713055421844361000443"}));
  // a_{n+1} = a_1 ··· a_n + 1
  BigInt product = 1;
  for (std::size_t i = 0; i + 1 < e.terms.size(); ++i) {
    product *= e.terms[i];
    EXPECT_EQ(e.terms[i + 1], product + 1);
  }
  EXPECT_EQ(e.recurrence_start(), 1u);
}

TEST(Expand, NineTwentyEighths) {
  Expansion e = expand(q(9, 28), 5);
  EXPECT_EQ(e.terms, ints({4, 15, 211, 44311, 1963420411}));
  EXPECT_EQ(e.theta, q(9, 28));
}

TEST(Expand, ErrorInvariants) {
  for (long d = 2; d <= 40; ++d) {
    for (long n = 1; n <= d; ++n) {
      Rational theta = q(n, d);
      Expansion e = expand(theta, 4);
      Rational sum;
      for (const auto& a : e.terms) sum += Rational::unit(a);
      EXPECT_EQ(e.error, theta - sum);
      EXPECT_TRUE(e.error.is_positive());
      EXPECT_LE(e.error, Rational::unit(e.terms.back() - 1));
      EXPECT_GE(e.terms[0], 2);
      for (std::size_t i = 0; i + 1 < e.terms.size(); ++i) {
        EXPECT_GE(e.terms[i + 1], e.terms[i] * e.terms[i] - e.terms[i] + 1);
      }
    }
  }
}

TEST(Expand, Preconditions) {
  EXPECT_THROW(expand(q(1, 2), 0), DomainError);
  EXPECT_THROW(expand(Rational(0), 3), DomainError);
  EXPECT_THROW(expand(q(5, 4), 3), DomainError);
}

TEST(Expand, DigitGuard) {
  ExpandOptions guard{20};
  EXPECT_NO_THROW(expand(Rational(1), 7, guard));
  try {
    expand(Rational(1), 8, guard);
    FAIL() << "guard not triggered";
  } catch (const DigitGuardExceeded& e) {
    EXPECT_EQ(e.limit(), 20u);
    EXPECT_EQ(e.digits(), 27u);
  }
}

TEST(GreedyStepper, MatchesExpand) {
  GreedyStepper stepper(q(9, 28));
  Expansion e = expand(q(9, 28), 6);
  for (const auto& a : e.terms) EXPECT_EQ(stepper.next(), a);
  EXPECT_EQ(stepper.steps(), 6u);
  EXPECT_EQ(stepper.error(), e.error);
}

TEST(Upsilon, Values) {
  EXPECT_EQ(upsilon(BigInt(10), BigInt(17)), 3);
  EXPECT_EQ(upsilon(BigInt(1), BigInt(12345)), 1);
  for (long k = 4; k <= 30; ++k) {
    for (long v = 1; v <= 5; ++v) EXPECT_EQ(upsilon(BigInt(k + 1), BigInt((k + 1) * k * v - k)), k);
  }
  // p | q gives Υ = p, not 0.
  EXPECT_EQ(upsilon(BigInt(3), BigInt(9)), 3);
}

TEST(EllIndex, Values) {
  EXPECT_EQ(ell_index(BigInt(1), BigInt(7)), 0);
  EXPECT_EQ(ell_index(BigInt(7), BigInt(54)), 2);
  for (long k = 1; k <= 20; ++k) EXPECT_EQ(ell_index(BigInt(2), BigInt(2 * k + 1)), 1);
  EXPECT_EQ(ell_index(BigInt(9), BigInt(28)), 8);
  EXPECT_THROW(ell_index(BigInt(2), BigInt(4)), DomainError);
}

TEST(DeltaIndex, Values) {
  DeltaResult d = delta_index(BigInt(7), BigInt(54));
  EXPECT_EQ(d.steps, 1u);
  EXPECT_EQ(d.reciprocal, 216);
  for (long n = 1; n <= 30; ++n) EXPECT_EQ(delta_index(BigInt(1), BigInt(n)).steps, 0u);
  EXPECT_EQ(delta_index(BigInt(9), BigInt(28)).steps, 1u);
  EXPECT_THROW(delta_index(BigInt(2), BigInt(4)), DomainError);
}

TEST(DeltaIndex, FactorialFamilyAttainsEll) {
  for (long m = 0; m <= 2; ++m) {
    long mf = 1;
    for (long i = 2; i <= m + 2; ++i) mf *= i;
    for (long k = 1; k <= 3; ++k) {
      BigInt p(m + 2);
      BigInt qq(mf * k + 1);
      EXPECT_EQ(delta_index(p, qq).steps, static_cast<std::size_t>(m + 1)) << p << "/" << qq;
      EXPECT_EQ(ell_index(p, qq), m + 1);
    }
  }
}

TEST(Phi, Values) {
  EXPECT_EQ(phi(Rational(1)), Rational(1));
  for (long n = 2; n <= 20; ++n) EXPECT_EQ(phi(q(1, n)), Rational(1));
  EXPECT_EQ(phi(q(2, 3)), Rational(2));
  EXPECT_THROW(phi(Rational(0)), DomainError);
}

TEST(SuperiorDenominator, Values) {
  EXPECT_EQ(superior_denominator(Rational(1), BigInt(2)), 3);
  EXPECT_EQ(superior_denominator(q(1, 16), BigInt(2)), 33);
  EXPECT_EQ(superior_denominator(q(5, 16), BigInt(1)), g_func(q(5, 16)));
}

TEST(StepReport, Examples) {
  StepReport one = step_report(Rational(1), 1, BigInt(2));
  EXPECT_FALSE(one.cond_i);
  EXPECT_FALSE(one.cond_iv);
  EXPECT_EQ(one.b_m, 3);

  StepReport seventh = step_report(q(1, 7), 1, BigInt(2));
  EXPECT_EQ(seventh.a_m, 8);
  EXPECT_EQ(seventh.a_next, 57);
  EXPECT_FALSE(seventh.cond_i);
  EXPECT_FALSE(seventh.cond_ii);
  EXPECT_FALSE(seventh.cond_iii);
  EXPECT_FALSE(seventh.cond_iv);

  for (long d = 2; d <= 30; ++d) {
    for (std::size_t m = 1; m <= 3; ++m) {
      StepReport s = step_report(q(1, d), m, BigInt(1));
      EXPECT_TRUE(s.cond_i && s.cond_ii && s.cond_iii && s.cond_iv);
    }
  }
}

TEST(ClosedForms, UpsilonDividesQ) {
  EXPECT_EQ(closed_form_upsilon_divides_q(BigInt(3), BigInt(10), 3), ints({4, 21, 421}));
  for (long qq = 2; qq <= 20; ++qq) {
    EXPECT_EQ(closed_form_upsilon_divides_q(BigInt(1), BigInt(qq), 2), ints({qq + 1, qq * (qq + 1) + 1}));
  }
  EXPECT_EQ(closed_form_upsilon_divides_q(BigInt(5), BigInt(9), 2), expand(q(5, 9), 2).terms);
  EXPECT_EQ(closed_form_upsilon_divides_q(BigInt(5), BigInt(9), 2), ints({2, 19}));
  EXPECT_THROW(closed_form_upsilon_divides_q(BigInt(9), BigInt(28), 2), DomainError);
}

TEST(ClosedForms, UpsilonTwoOddQ) {
  EXPECT_EQ(closed_form_upsilon2_odd_q(BigInt(5), BigInt(13), 3), ints({3, 20, 781}));
  EXPECT_EQ(closed_form_upsilon2_odd_q(BigInt(3), BigInt(7), 3), ints({3, 11, 232}));
  EXPECT_THROW(closed_form_upsilon2_odd_q(BigInt(3), BigInt(10), 3), DomainError);
  EXPECT_THROW(closed_form_upsilon2_odd_q(BigInt(2), BigInt(5), 3), DomainError);
}

TEST(ClosedForms, PDividesQPlusOne) {
  EXPECT_EQ(closed_form_p_divides_q_plus_1(BigInt(2), BigInt(5), 3), ints({3, 16, 241}));
  EXPECT_EQ(closed_form_p_divides_q_plus_1(BigInt(1), BigInt(1), 4), ints({2, 3, 7, 43}));
  EXPECT_EQ(closed_form_p_divides_q_plus_1(BigInt(1), BigInt(6), 3), ints({7, 43, 1807}));
  EXPECT_THROW(closed_form_p_divides_q_plus_1(BigInt(3), BigInt(7), 3), DomainError);
}

TEST(UpsilonProfile, FamiliesAndReduction) {
  UpsilonProfile a = upsilon_profile(BigInt(18), BigInt(56));
  EXPECT_EQ(a.p, 9);
  EXPECT_EQ(a.q, 28);
  EXPECT_EQ(a.upsilon, 8);
  EXPECT_EQ(a.ell, 8);
  EXPECT_EQ(a.delta, 1u);
  EXPECT_EQ(a.family, Family::General);
  EXPECT_EQ(upsilon_profile(BigInt(2), BigInt(5)).family, Family::PDividesQPlus1);
  EXPECT_EQ(upsilon_profile(BigInt(3), BigInt(10)).family, Family::UpsilonDividesQ);
  EXPECT_EQ(upsilon_profile(BigInt(3), BigInt(7)).family, Family::Upsilon2OddQ);
}

TEST(Recurrence, Examples) {
  RecurrenceCheck a = eventual_quadratic_recurrence(BigInt(9), BigInt(28), 9);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.ell, 8);
  EXPECT_EQ(a.observed_start, 2u);

  RecurrenceCheck b = eventual_quadratic_recurrence(BigInt(1), BigInt(7), 5);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.observed_start, 1u);

  RecurrenceCheck c = eventual_quadratic_recurrence(BigInt(7), BigInt(54), 6);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.ell, 2);
  EXPECT_EQ(c.observed_start, 2u);
}

TEST(Growth, Examples) {
  std::vector<BigInt> short_seq = ints({2, 7, 85});
  GrowthCheck a = growth_condition_check(short_seq, BigInt(2));
  EXPECT_FALSE(a.holds);
  EXPECT_EQ(a.first_violation, 2u);
  std::vector<BigInt> tight = ints({2, 7, 92});
  EXPECT_TRUE(growth_condition_check(tight, BigInt(2)).holds);

  std::vector<BigInt> sylvester = expand(Rational(1), 6).terms;
  EXPECT_TRUE(growth_condition_check(sylvester, BigInt(1)).holds);

  std::vector<BigInt> cubic = ints({2, 7, 337});
  GrowthCheck c = growth_condition_check(cubic, BigInt(3), GrowthVariant::Cubic);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.m_N, 2u);

  std::vector<BigInt> empty;
  EXPECT_THROW(growth_condition_check(empty, BigInt(1)), DomainError);
}
