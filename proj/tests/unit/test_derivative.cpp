#include <gtest/gtest.h>

#include <vector>

#include "bentcat/derivative.hpp"
#include "bentcat/oracle.hpp"
#include "bentcat/random.hpp"
#include "support.hpp"

using namespace bentcat;
using bentcat::testing::e;
using bentcat::testing::poly;

TEST(Derivative, OfProductIsOtherFactor) {
  const auto f = poly(2, "x1*x2");
  EXPECT_EQ(derivative(f, e(1)), poly(2, "x2"));
  EXPECT_EQ(derivative(f, e(2)), poly(2, "x1"));
}

TEST(Derivative, SecondDerivativeOfQuadraticIsConstant) {
  const auto f = poly(4, "x1*x2+x3*x4");
  EXPECT_EQ(second_derivative(f, e(1), e(2)), BooleanFunction::constant(4, true));
  EXPECT_TRUE(second_derivative(f, e(1), e(3)).is_zero());
  EXPECT_TRUE(second_derivative_vanishes(f, e(1), e(3)));
  EXPECT_FALSE(second_derivative_vanishes(f, e(3), e(4)));
}

TEST(Derivative, TranslateMatchesDefinition) {
  Rng rng(1);
  for (int n : {1, 4, 6, 7, 9}) {
    const auto f = random_function(n, rng);
    for (int trial = 0; trial < 8; ++trial) {
      const auto r = static_cast<Point>(uniform_below(rng, f.size()));
      const auto t = translate(f, r);
      for (Point x = 0; x < f.size(); ++x) ASSERT_EQ(t[x], f[x ^ r]);
    }
  }
}

TEST(Derivative, SecondDerivativeMatchesPointwise) {
  Rng rng(2);
  for (int n : {3, 6, 8}) {
    const auto f = random_function(n, rng);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = static_cast<Point>(uniform_below(rng, f.size()));
      const auto v = static_cast<Point>(uniform_below(rng, f.size()));
      const auto expected = oracle::direct_second_derivative(f, u, v);
      EXPECT_EQ(second_derivative(f, u, v), expected);
      EXPECT_EQ(second_derivative_vanishes(f, u, v), expected.is_zero());
    }
  }
}

TEST(Derivative, DependentGeneratorsGiveZero) {
  Rng rng(3);
  const auto f = random_function(6, rng);
  const std::vector<Point> dependent{5, 9, 12};
  EXPECT_TRUE(higher_derivative(f, dependent).is_zero());
  const std::vector<Point> repeated{7, 7};
  EXPECT_TRUE(higher_derivative(f, repeated).is_zero());
}

TEST(Derivative, OrderOfDerivativeDropsDegree) {
  Rng rng(4);
  const auto f = random_function_of_degree(7, 3, rng);
  const std::vector<Point> gens{e(1), e(4), e(6), e(7)};
  EXPECT_TRUE(higher_derivative(f, gens).is_zero());
}

TEST(Derivative, XorPermuteWord) {
  for (unsigned r = 0; r < 64; ++r) {
    const std::uint64_t word = 0x0123456789abcdefULL;
    const auto permuted = xor_permute_word(word, r);
    for (unsigned x = 0; x < 64; ++x) {
      ASSERT_EQ((permuted >> x) & 1u, (word >> (x ^ r)) & 1u);
    }
  }
}
