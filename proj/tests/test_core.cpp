#include <gtest/gtest.h>

#include <numeric>

#include "hjq/hjq.hpp"
#include "oracles.hpp"

using namespace hjq;

TEST(Fraction, RejectsInvalid) {
  EXPECT_THROW(Fraction(4, 2), Error);
  EXPECT_THROW(Fraction(4, 4), Error);
  EXPECT_THROW(Fraction(4, 0), Error);
  try {
    Fraction(6, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidFraction);
  }
}

TEST(Expand, Examples) {
  EXPECT_EQ(expand_fraction(Fraction(4, 1)), (Chain{4}));
  EXPECT_EQ(expand_fraction(Fraction(19, 7)), (Chain{3, 4, 2}));
  EXPECT_EQ(expand_fraction(Fraction(9, 5)), (Chain{2, 5}));
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate_chain(Chain{4}).str(), "4/1");
  EXPECT_EQ(evaluate_chain(Chain{2, 5, 1, 2, 5}).str(), "18/11");
  EXPECT_EQ(evaluate_chain(Chain{2, 1, 2}).str(), "0/1");
  EXPECT_EQ(evaluate_chain(Chain{}).str(), "1/0");
}

TEST(Evaluate, ConvergentsOf25125) {
  const auto st = convergents(Chain{2, 5, 1, 2, 5});
  std::vector<Integer> want{0, 1, 2, 9, 7, 5, 18};
  EXPECT_EQ(st.p, want);
}

TEST(Evaluate, NotAdmissible) {
  try {
    evaluate_chain(Chain{1, 1, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
  }
  EXPECT_THROW(evaluate_chain(Chain{0, 2}), Error);
}

TEST(Evaluate, FixedWidthMatchesBig) {
  const Chain c{3, 4, 2, 6, 2, 2, 5};
  const auto big = evaluate_chain(c);
  const auto small = evaluate_chain<std::int64_t>(c);
  EXPECT_EQ(big.numerator, small.numerator);
  EXPECT_EQ(big.denominator, small.denominator);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse_mod(Fraction(4, 1)), 1);
  EXPECT_EQ(inverse_mod(Fraction(19, 7)), 11);
  EXPECT_EQ(inverse_mod(Fraction(9, 5)), 2);
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual_fraction(Fraction(19, 7)), (Chain{2, 3, 2, 3}));
  EXPECT_EQ(dual_fraction(Fraction(4, 1)), (Chain{2, 2, 2}));
  EXPECT_EQ(dual_fraction(Fraction(9, 5)), (Chain{3, 2, 2, 2}));
}

TEST(Properties, RoundTripReversalAndLength) {
  for (long long n = 2; n <= 200; ++n)
    for (long long q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const Fraction f(n, q);
      const Chain c = expand_fraction(f);
      ASSERT_TRUE(c.is_strict());
      ASSERT_EQ(*oracle::value(c), Rational(n, q)) << f.str();
      const auto v = evaluate_chain(c);
      ASSERT_EQ(v.numerator, n);
      ASSERT_EQ(v.denominator, q);
      const auto r = evaluate_chain(c.reversed());
      ASSERT_EQ(r.numerator, n);
      ASSERT_EQ(r.denominator, f.inverse());
      ASSERT_EQ((q * f.inverse()) % n, n == 1 ? 0 : 1);
      ASSERT_LE(c.size(), static_cast<std::size_t>(n - 1));
      ASSERT_EQ(c.size() == static_cast<std::size_t>(n - 1), q == n - 1);
    }
}

TEST(Properties, ZeroFractions) {
  for (long long n = 2; n <= 120; ++n)
    for (long long q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const Chain c = concat(concat(expand_fraction(Fraction(n, q)), Chain{1}), dual_fraction(Fraction(n, q)).reversed());
      ASSERT_TRUE(is_admissible(c)) << c;
      ASSERT_EQ(evaluate_chain(c).numerator, 0) << c;
      ASSERT_TRUE(is_terminal_zero(contract_fully(c).chain)) << c;
    }
}

TEST(Parse, Chains) {
  EXPECT_EQ(parse_chain("[3,4,2]"), (Chain{3, 4, 2}));
  EXPECT_EQ(parse_chain("3,4,2"), (Chain{3, 4, 2}));
  EXPECT_EQ(parse_chain(" [ 3 , 4 ,2 ] "), (Chain{3, 4, 2}));
  EXPECT_EQ(parse_chain("[]"), Chain{});
  EXPECT_THROW(parse_chain("[3,4"), Error);
  EXPECT_THROW(parse_chain("[3,,4]"), Error);
  EXPECT_THROW(parse_chain("[a]"), Error);
  EXPECT_EQ(parse_fraction("19/7"), Fraction(19, 7));
  EXPECT_THROW(parse_fraction("19"), Error);
}

TEST(Numeric, DecimalRendering) {
  EXPECT_EQ(to_decimal(Rational(14, 11)), "1.272727272727");
  EXPECT_EQ(to_decimal(Rational(-1, 3)), "-0.333333333333");
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.12");  // half to even
  EXPECT_EQ(to_decimal(Rational(3, 8), 2), "0.38");
  EXPECT_EQ(to_decimal(Rational(-1, 10'000'000'000'000LL)), "0.000000000000");
  EXPECT_EQ(to_string(Rational(3)), "3/1");
}

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("1e-9"), Rational(1, 1'000'000'000));
  EXPECT_EQ(parse_rational("2.5E+3"), Rational(2500));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("0.001"), Rational(1, 1000));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}
