#include <gtest/gtest.h>

#include <array>
#include <set>
#include <vector>

#include "bentcat/concat.hpp"
#include "bentcat/construct.hpp"
#include "bentcat/errors.hpp"
#include "bentcat/oracle.hpp"
#include "bentcat/random.hpp"
#include "bentcat/transforms.hpp"
#include "support.hpp"

using namespace bentcat;
using bentcat::testing::poly;

namespace {

constexpr const char* kOutside8 =
    "aa6966000fa5ccc3472109a3421765fcaa6966000fa5ccc3b8def65cbde89a03";

std::array<BooleanFunction, 4> pieces_of(const BooleanFunction& f) {
  const auto r = restrictions(f, 4);
  return {r[0], r[1], r[2], r[3]};
}

std::array<BooleanFunction, 4> random_pieces(int n, Rng& rng, int max_degree) {
  return {random_function_of_degree(n, max_degree, rng), random_function_of_degree(n, max_degree, rng),
          random_function_of_degree(n, max_degree, rng), random_function_of_degree(n, max_degree, rng)};
}

bool naive_has_subspace(const BooleanFunction& f, int k) {
  return !oracle::naive_m_subspaces(f, k).empty();
}

}  // namespace

TEST(Concat, TablesAreJoinedInOrder) {
  const auto f1 = poly(2, "x1");
  const auto f2 = poly(2, "x2");
  const auto f = concat2(f1, f2);
  EXPECT_EQ(f.n_vars(), 3);
  for (Point x = 0; x < 4; ++x) {
    EXPECT_EQ(f[x], f1[x]);
    EXPECT_EQ(f[x | 4], f2[x]);
  }
  const auto g = concat4(f1, f2, f2, f1);
  EXPECT_EQ(g[0b0101], f2[0b01]);  // (z, 1, 0)
  EXPECT_EQ(g[0b1001], f2[0b01]);  // (z, 0, 1)
  EXPECT_EQ(g[0b1110], f1[0b10]);  // (z, 1, 1)
}

TEST(Concat, RestrictionsInvertConcat) {
  Rng rng(30);
  const auto pieces = random_pieces(5, rng, 5);
  const auto r = restrictions(concat4(pieces[0], pieces[1], pieces[2], pieces[3]), 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(r[i], pieces[i]);
  const auto r2 = restrictions(concat2(pieces[0], pieces[1]), 2);
  EXPECT_EQ(r2[0], pieces[0]);
  EXPECT_EQ(r2[1], pieces[1]);
  EXPECT_THROW(restrictions(pieces[0], 3), std::invalid_argument);
  EXPECT_THROW(concat2(pieces[0], BooleanFunction(4)), std::invalid_argument);
}

TEST(Concat, QuadraticBlockConcatenation) {
  // f1 || f1 || f1 || f1+1 = f1 + y1 y2.
  Rng rng(31);
  const auto f1 = random_bent(4, rng);
  const auto f = concat4(f1, f1, f1, f1.complement());
  const auto expected =
      BooleanFunction::from_predicate(6, [&](Point x) { return f1[x & 15] ^ ((x >> 4) == 3); });
  EXPECT_EQ(f, expected);
  EXPECT_TRUE(is_bent(f));
}

TEST(Concat, SecondDerivativeConcat2MatchesDirect) {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f1 = random_function(4, rng);
    const auto f2 = random_function(4, rng);
    const Direction2 u{static_cast<Point>(uniform_below(rng, 16)), uniform_below(rng, 2) == 1};
    const Direction2 v{static_cast<Point>(uniform_below(rng, 16)), uniform_below(rng, 2) == 1};
    const auto direct = oracle::direct_second_derivative(
        concat2(f1, f2), u.a | (Point{u.flag} << 4), v.a | (Point{v.flag} << 4));
    ASSERT_EQ(second_derivative_concat2(f1, f2, u, v), direct);
  }
}

TEST(Concat, SecondDerivativeConcat4MatchesDirectForEveryFlagPair) {
  Rng rng(33);
  for (int cu = 0; cu < 4; ++cu) {
    for (int cv = 0; cv < 4; ++cv) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto pieces = random_pieces(4, rng, 4);
        const Direction4 u{static_cast<Point>(uniform_below(rng, 16)), (cu & 1) != 0, (cu & 2) != 0};
        const Direction4 v{static_cast<Point>(uniform_below(rng, 16)), (cv & 1) != 0, (cv & 2) != 0};
        const auto f = concat4(pieces[0], pieces[1], pieces[2], pieces[3]);
        const auto direct = oracle::direct_second_derivative(
            f, u.a | static_cast<Point>(cu) << 4, v.a | static_cast<Point>(cv) << 4);
        ASSERT_EQ(second_derivative_concat4(pieces, u, v), direct) << cu << "," << cv;
      }
    }
  }
}

TEST(Concat, SemiBentHalvesHaveDisjointSpectra) {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = restrictions(random_bent(6, rng), 2);
    EXPECT_TRUE(disjoint_spectra(r[0], r[1]));
  }
  EXPECT_TRUE(disjoint_spectra(poly(3, "x1*x2"), poly(3, "x1*x2+x3")));
  EXPECT_FALSE(disjoint_spectra(poly(3, "x1*x2"), poly(3, "x1*x2+x1")));
}

TEST(Concat, DualSumMatchesBentness) {
  Rng rng(35);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::array<BooleanFunction, 4> pieces{random_bent(4, rng), random_bent(4, rng),
                                          random_bent(4, rng), random_bent(4, rng)};
    if (trial % 2 == 0) {
      // (g, g, h, h+1) has dual sum 1.
      pieces[1] = pieces[0];
      pieces[3] = pieces[2].complement();
    }
    const bool bent = is_bent(concat4(pieces[0], pieces[1], pieces[2], pieces[3]));
    EXPECT_EQ(bent4_dual_sum(pieces), bent);
    positives += bent;
  }
  EXPECT_GE(positives, 30);
  const std::array<BooleanFunction, 4> bad{poly(4, "x1"), poly(4, "x1"), poly(4, "x1"), poly(4, "x1")};
  EXPECT_THROW(bent4_dual_sum(bad), NotBent);
}

TEST(Concat, TwoPieceVerdictMatchesExhaustiveSearch) {
  Rng rng(36);
  std::set<std::string> conditions;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    const int degree = trial % 4 == 0 ? n : 2;
    const auto f1 = random_function_of_degree(n, degree, rng);
    const auto f2 = trial % 5 == 0 ? f1 ^ BooleanFunction::linear(n, 3) : random_function_of_degree(n, degree, rng);
    const auto f = concat2(f1, f2);
    for (int k = 0; k <= n; ++k) {
      const auto verdict = theorem1_verdict(f1, f2, k);
      ASSERT_EQ(verdict.inside_mm, naive_has_subspace(f, k + 1)) << "n=" << n << " k=" << k;
      if (verdict.inside_mm) {
        ASSERT_TRUE(verdict.witness_subspace.has_value());
        EXPECT_EQ(verdict.witness_subspace->dim(), k + 1);
        EXPECT_TRUE(oracle::naive_is_m_subspace(f, *verdict.witness_subspace));
      }
      conditions.insert(verdict.condition);
    }
  }
  EXPECT_TRUE(conditions.count("thm1.a"));
  EXPECT_TRUE(conditions.count("thm1.b"));
  EXPECT_TRUE(conditions.count("thm1.none"));
}

TEST(Concat, TwoPieceMembershipOnBentConcatenations) {
  Rng rng(37);
  VerdictOptions options;
  options.cross_check = true;
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = restrictions(random_bent(6, rng), 2);
    const auto verdict = corollary1_outside_mm(r[0], r[1], options);
    EXPECT_TRUE(verdict.inside_mm);
    EXPECT_EQ(verdict.cross_check, CrossCheck::Passed);
    EXPECT_EQ(verdict.condition.rfind("cor1.", 0), 0u);
  }
  const auto outside = restrictions(from_hex(8, kOutside8), 2);
  const auto verdict = corollary1_outside_mm(outside[0], outside[1], options);
  EXPECT_FALSE(verdict.inside_mm);
  EXPECT_EQ(verdict.condition, "cor1.none");
  EXPECT_THROW(corollary1_outside_mm(poly(3, "x1"), poly(3, "x2")), NotBent);
  EXPECT_THROW(corollary1_outside_mm(poly(4, "x1"), poly(4, "x2")), std::invalid_argument);
}

TEST(Concat, FourPieceFormsMatchExhaustiveSearch) {
  Rng rng(38);
  std::set<char> forms;
  for (int trial = 0; trial < 30; ++trial) {
    const int degree = trial % 3 == 0 ? 4 : (trial % 3 == 1 ? 2 : 1);
    const auto pieces = random_pieces(4, rng, degree);
    const auto f = concat4(pieces[0], pieces[1], pieces[2], pieces[3]);
    for (int k = -1; k <= 4; ++k) {
      std::vector<Subspace> found;
      for (const auto& form : theorem3_enumerate_forms(pieces, k)) {
        found.push_back(form.subspace);
        forms.insert(to_char(form.form));
      }
      ASSERT_EQ(found, oracle::naive_m_subspaces(f, k + 2)) << "k=" << k;
    }
  }
  EXPECT_EQ(forms, (std::set<char>{'a', 'b', 'c', 'd', 'e'}));
}

TEST(Concat, FourPieceMembershipInsideAndOutside) {
  Rng rng(39);
  VerdictOptions options;
  options.cross_check = true;
  for (int trial = 0; trial < 6; ++trial) {
    const auto verdict = corollary2_outside_mm(pieces_of(random_bent(8, rng)), options);
    EXPECT_TRUE(verdict.inside_mm);
    EXPECT_EQ(verdict.cross_check, CrossCheck::Passed);
  }
  const auto verdict = corollary2_outside_mm(pieces_of(from_hex(8, kOutside8)), options);
  EXPECT_FALSE(verdict.inside_mm);
  EXPECT_EQ(verdict.condition, "cor2.none");
  EXPECT_EQ(verdict.cross_check, CrossCheck::Passed);
}

TEST(Concat, FourPieceMembershipRejectsBadInput) {
  const std::array<BooleanFunction, 4> odd{poly(3, "x1"), poly(3, "x1"), poly(3, "x1"), poly(3, "x1")};
  EXPECT_THROW(corollary2_outside_mm(odd), std::invalid_argument);
  const std::array<BooleanFunction, 4> flat{BooleanFunction(4), BooleanFunction(4), BooleanFunction(4),
                                            BooleanFunction(4)};
  EXPECT_THROW(corollary2_outside_mm(flat), NotBent);
}
