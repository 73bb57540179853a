#include <gtest/gtest.h>

#include <cstdlib>

#include "bentcat/construct.hpp"
#include "bentcat/errors.hpp"
#include "bentcat/oracle.hpp"
#include "bentcat/random.hpp"
#include "bentcat/transforms.hpp"
#include "support.hpp"

using namespace bentcat;
using bentcat::testing::poly;

TEST(Walsh, ZeroFunctionConcentratesAtOrigin) {
  const auto w = walsh_transform(BooleanFunction(3));
  const std::vector<std::int64_t> expected{8, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(w.values, expected);
}

TEST(Walsh, AndOfTwoHasAllMagnitudesTwo) {
  const auto f = poly(2, "x1*x2");
  const auto w = walsh_transform(f);
  EXPECT_EQ(w, oracle::naive_walsh(f));
  for (auto v : w.values) EXPECT_EQ(std::llabs(v), 2);
}

TEST(Walsh, MatchesNaiveSumAndParseval) {
  Rng rng(17);
  for (int n = 0; n <= 10; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_function(n, rng);
      const auto w = walsh_transform(f);
      ASSERT_EQ(w, oracle::naive_walsh(f)) << "n=" << n;
      std::int64_t squares = 0;
      for (auto v : w.values) {
        squares += v * v;
        EXPECT_EQ((v - (std::int64_t{1} << n)) % 2, 0);
      }
      EXPECT_EQ(squares, std::int64_t{1} << (2 * n));
    }
  }
}

TEST(Walsh, FwhtRejectsNonPowerOfTwo) {
  std::vector<std::int64_t> v(6);
  EXPECT_THROW(fwht(v), std::invalid_argument);
}

TEST(Classify, QuadraticIsBent) {
  EXPECT_EQ(classify_spectrum(walsh_transform(poly(4, "x1*x2+x3*x4"))).tag, SpectrumTag::Bent);
}

TEST(Classify, AndOnThreeVariablesIsSemiBent) {
  const auto c = classify_spectrum(walsh_transform(poly(3, "x1*x2")));
  EXPECT_EQ(c.tag, SpectrumTag::SemiBent);
  EXPECT_EQ(c.value_set, (std::vector<std::int64_t>{0, 4}));
}

TEST(Classify, ConstantIsOther) {
  EXPECT_EQ(classify_spectrum(walsh_transform(BooleanFunction(4))).tag, SpectrumTag::Other);
}

TEST(Classify, FiveValuedNeedsAllThreeMagnitudes) {
  Rng rng(5);
  bool seen = false;
  for (int trial = 0; trial < 2000 && !seen; ++trial) {
    const auto f = random_function_of_degree(4, 3, rng);
    const auto c = classify_spectrum(walsh_transform(f));
    if (c.tag != SpectrumTag::FiveValued) continue;
    seen = true;
    EXPECT_EQ(c.value_set, (std::vector<std::int64_t>{0, 4, 8}));
  }
  EXPECT_TRUE(seen);
}

TEST(Classify, HalvesOfBentAreSemiBent) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_bent(6, rng);
    BooleanFunction lo(5);
    BooleanFunction hi(5);
    for (Point x = 0; x < 32; ++x) {
      lo.set(x, f[x]);
      hi.set(x, f[x + 32]);
    }
    EXPECT_EQ(classify_spectrum(walsh_transform(lo)).tag, SpectrumTag::SemiBent);
    EXPECT_EQ(classify_spectrum(walsh_transform(hi)).tag, SpectrumTag::SemiBent);
  }
}

TEST(Dual, QuadraticIsSelfDual) {
  const auto f = poly(4, "x1*x2+x3*x4");
  EXPECT_EQ(dual(f), f);
  const auto g = poly(4, "x1*x2+x3*x4+1");
  EXPECT_EQ(dual(g), g);
}

TEST(Dual, SignsMatchNaiveWalsh) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_bent(6, rng);
    const auto d = dual(f);
    const auto w = oracle::naive_walsh(f);
    for (Point u = 0; u < 64; ++u) EXPECT_EQ(w.values[u] < 0, d[u]);
    EXPECT_EQ(dual(d), f);
  }
}

TEST(Dual, NonBentThrows) {
  EXPECT_THROW(dual(poly(3, "x1*x2")), NotBent);
  EXPECT_THROW(dual(BooleanFunction(4)), NotBent);
}

TEST(Autocorrelation, PeriodsGiveFullValue) {
  const auto f = poly(4, "x1*x2+x3");
  const auto ac = autocorrelation(f);
  // D_{e4} f = 0, D_{e3} f = 1.
  EXPECT_EQ(ac[8], 16);
  EXPECT_EQ(ac[4], -16);
  EXPECT_EQ(ac[0], 16);
}

TEST(Bent, DegreeAtMostHalf) {
  EXPECT_EQ(algebraic_degree(poly(2, "x1*x2")), 2);
  Rng rng(2);
  for (int n : {4, 6, 8}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = random_bent(n, rng);
      ASSERT_TRUE(is_bent(f));
      EXPECT_LE(algebraic_degree(f), n / 2);
    }
  }
}
