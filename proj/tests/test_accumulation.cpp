#include <gtest/gtest.h>

#include <numeric>

#include "hjq/hjq.hpp"
#include "hjq/serialize.hpp"
#include "oracles.hpp"

using namespace hjq;

TEST(Formation, Examples) {
  EXPECT_EQ(formation_rule(Fraction(4, 1)), (FormationStep{9, 2, 5, 0}));
  EXPECT_EQ(formation_rule(Fraction(8, 3)), (FormationStep{18, 5, 11, 1}));
  EXPECT_EQ(formation_rule(Fraction(5, 1)), (FormationStep{11, 2, 6, 0}));
  EXPECT_EQ(expand_fraction(Fraction(9, 2)), (Chain{5, 2}));
  try {
    formation_rule(Fraction(2, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexTooSmall);
  }
}

TEST(Formation, Consistency) {
  for (long long n = 3; n <= 200; ++n)
    for (long long q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const Fraction f(n, q);
      const auto s = formation_rule(f);
      ASSERT_EQ(q * f.inverse(), 1 + s.m * n);
      ASSERT_EQ((s.Q * s.Qp) % s.N, 1);
      ASSERT_TRUE(s.Q > 0 && s.Q < s.N && s.Qp > 0 && s.Qp < s.N);
      std::vector<Chain::value_type> b(expand_fraction(f).entries());
      b.front() += 1;
      b.push_back(2);
      const Chain grown(b);
      ASSERT_EQ(expand_fraction(Fraction(s.N, s.Q)), grown);
      ASSERT_EQ(expand_fraction(Fraction(s.N, s.Qp)), grown.reversed());
      ASSERT_EQ(*oracle::value(grown), Rational(s.N, s.Q));
    }
}

TEST(Formation, CorrectionTrichotomy) {
  for (long long n = 3; n <= 100; ++n)
    for (long long q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      Fraction f(n, q);
      for (int step = 0; step < 10; ++step) {
        const Fraction g = formation_rule(f).fraction();
        const Integer s = 2 + f.q() + f.inverse();
        const Rational before = correction_term(f), after = correction_term(g);
        if (f.n() > s)
          ASSERT_LT(after, before) << f.str();
        else if (f.n() == s)
          ASSERT_EQ(after, before) << f.str();
        else
          ASSERT_GT(after, before) << f.str();
        f = g;
      }
    }
}

TEST(Blowup, Seed5) {
  const auto seq = blowup_family(Chain{5}, 3);
  ASSERT_EQ(seq.terms.size(), 4u);
  EXPECT_EQ(seq.terms[1].chain, (Chain{6, 2}));
  EXPECT_EQ(seq.terms[1].kw2 - seq.terms[0].kw2, Rational(6, 55));
  EXPECT_EQ(seq.terms[2].chain, (Chain{7, 2, 2}));
  EXPECT_EQ(seq.terms[2].fraction, formation_rule(formation_rule(Fraction(5, 1)).fraction()).fraction());
  for (std::size_t k = 1; k < seq.terms.size(); ++k) {
    const auto& t = seq.terms[k];
    ASSERT_TRUE(t.witness);
    EXPECT_GT(t.witness->bridge, 0);
    EXPECT_TRUE(t.witness->discrepancies_drop);
    EXPECT_GT(t.kw2, 0);
    EXPECT_EQ(t.kw2 - seq.terms[k - 1].kw2, k2_step_value(seq.terms[k - 1].fraction));
    EXPECT_EQ(seq.ledger_kw2(t), t.kw2);
  }
  const auto rep = limit_of(seq, parse_rational("1e-9"));
  EXPECT_EQ(rep.monotonicity, Monotonicity::StrictlyIncreasing);
  EXPECT_FALSE(rep.converged);
  EXPECT_FALSE(rep.target);
}

TEST(Blowup, NotAmple) {
  try {
    blowup_family(Chain{4}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAmple);
  }
}

TEST(Blowup, MatchesFormationFamily) {
  for (const Chain& seed : {Chain{5}, Chain{3, 5}, Chain{6, 2, 3}}) {
    const auto a = blowup_family(seed, 8);
    const auto b = formation_family(chain_fraction(seed), 8);
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
      ASSERT_EQ(a.terms[k].chain, b.terms[k].chain);
      ASSERT_EQ(a.terms[k].kw2, b.terms[k].kw2);
    }
    EXPECT_EQ(limit_of(a, Rational(1, 1000)).monotonicity, Monotonicity::StrictlyIncreasing);
  }
}

TEST(LimitFamily, Terms) {
  const auto seq = example210_family(3, 1);
  EXPECT_EQ(seq.terms[0].chain, (Chain{4, 3, 4}));
  EXPECT_EQ(seq.terms[0].fraction, Fraction(40, 11));
  EXPECT_EQ(seq.terms[1].chain, (Chain{2, 5, 3, 4}));
  EXPECT_EQ(seq.terms[1].fraction, Fraction(91, 51));
  EXPECT_EQ(example210_limit(3), Rational(14, 11));
  for (const auto& t : seq.terms) {
    EXPECT_EQ(t.m, t.k + 3);
    EXPECT_EQ(t.kw2, Rational(2 + t.fraction.q() + t.fraction.inverse(), t.fraction.n()));  // n0 - 3 = 0
  }
}

TEST(LimitFamily, ConvergesAndIncreases) {
  for (long long n0 = 3; n0 <= 6; ++n0) {
    const auto seq = example210_family(n0, 400);
    for (const auto& t : seq.terms) ASSERT_EQ(seq.ledger_kw2(t), t.kw2);
    const auto rep = limit_of(seq, Rational(1, 100000));
    EXPECT_EQ(rep.monotonicity, Monotonicity::StrictlyIncreasing);
    EXPECT_TRUE(rep.converged);
    ASSERT_TRUE(rep.target);
    EXPECT_EQ(*rep.target, example210_limit(n0));
    EXPECT_GT(*rep.gap, 0);
    EXPECT_LT(*rep.gap, Rational(1, 100));
  }
}

TEST(LimitFamily, NaiveCountShiftsByTwo) {
  const auto adopted = example210_family(4, 5);
  const auto naive = example210_family(4, 5, true);
  for (std::size_t k = 0; k < adopted.terms.size(); ++k) EXPECT_EQ(naive.terms[k].kw2 - adopted.terms[k].kw2, 2);
  EXPECT_EQ(*limit_of(naive, Rational(1)).target, example210_limit(4) + 2);
}

TEST(Limit, Edges) {
  AccumSequence one{BlowupFamily{Chain{5}}, 0, 0, {}};
  one.terms.push_back(blowup_family(Chain{5}, 0).terms[0]);
  try {
    limit_of(one, Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooFewTerms);
  }
  AccumSequence flat = one;
  flat.terms.push_back(flat.terms[0]);
  flat.terms.push_back(flat.terms[0]);
  const auto rep = limit_of(flat, Rational(1, 1000000000));
  EXPECT_EQ(rep.monotonicity, Monotonicity::Constant);
  EXPECT_TRUE(rep.converged);
  EXPECT_EQ(rep.last, flat.terms[0].kw2);
}

TEST(Star, Predicate) {
  const StarRecord a{0, true, 1, Chain{3, 3}}, b{0, true, 1, Chain{2, 3, 4}};
  EXPECT_TRUE(property_star({a, b}));
  StarRecord c = b;
  c.ks2 = 1;
  EXPECT_FALSE(property_star({a, c}));
  EXPECT_FALSE(property_star({a, a}));
  StarRecord d = b;
  d.has_bridge = false;
  EXPECT_FALSE(property_star({a, d}));
  EXPECT_THROW(property_star({}), Error);
}

TEST(Serialize, Sequence) {
  const auto seq = example210_family(3, 1);
  const Json j = to_json(seq);
  EXPECT_EQ(j["terms"][0]["fraction"], "40/11");
  EXPECT_EQ(j["terms"][0]["kw2_decimal"].get<std::string>().size(), std::string("0.000000000000").size());
  const Json r = to_json(limit_of(seq, Rational(1)));
  EXPECT_EQ(r["target"]["value"], "14/11");
}
