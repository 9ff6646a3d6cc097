#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "thetaorb/orbit_duality.hpp"
#include "thetaorb/partition.hpp"

using namespace thetaorb;

namespace {

const ClassicalType kTypes[] = {ClassicalType::B, ClassicalType::C, ClassicalType::D};

bool size_fits(int n, ClassicalType t) { return t == ClassicalType::B ? n % 2 == 1 : n % 2 == 0; }

}  // namespace

TEST(Partition, NormalizesAndPrints) {
  Partition p{1, 3, 0, 3};
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 3, 1}));
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(p.str(), "(3,3,1)");
  EXPECT_EQ(parse_partition("(3,3,1)"), p);
  EXPECT_EQ(parse_partition("3,3,1"), p);
  EXPECT_THROW(parse_partition("3,-1"), std::invalid_argument);
  EXPECT_THROW(parse_partition("3,x"), std::invalid_argument);
}

TEST(Partition, EnumerationMatchesOracle) {
  for (int n = 0; n <= 15; ++n) {
    auto mine = partitions_of(n);
    auto ref = oracle::partitions(n);
    std::sort(mine.begin(), mine.end());
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(mine, ref) << n;
  }
  EXPECT_EQ(partitions_of(20).size(), 627u);
}

TEST(Partition, TransposeIsAnInvolution) {
  for (int n = 0; n <= 30; ++n)
    for (const auto& p : partitions_of(n)) {
      const Partition t = transpose(p);
      ASSERT_EQ(transpose(t), p);
      ASSERT_EQ(t, oracle::transpose(p));
    }
}

TEST(Partition, ValidityMatchesParityRule) {
  for (int n = 1; n <= 14; ++n)
    for (const auto& p : partitions_of(n))
      for (auto t : kTypes) EXPECT_EQ(is_valid(p, t), oracle::valid(p, t)) << p.str();
  EXPECT_TRUE(is_valid(Partition{3, 3}, ClassicalType::C, 6));
  EXPECT_FALSE(is_valid(Partition{3, 3}, ClassicalType::C, 8));
}

TEST(Partition, CollapseAndExpansionAreExtremal) {
  for (int n = 1; n <= 20; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (auto t : kTypes) {
        if (!size_fits(n, t)) {
          EXPECT_THROW(collapse(p, t), std::invalid_argument);
          continue;
        }
        const auto c = oracle::collapse(p, t);
        const auto e = oracle::expansion(p, t);
        ASSERT_TRUE(c);
        ASSERT_EQ(collapse(p, t), *c) << p.str() << " " << to_char(t);
        // the expansion can fail to exist, e.g. (2) in type D or (3,2,1) in type C
        if (e)
          ASSERT_EQ(expansion(p, t), *e) << p.str() << " " << to_char(t);
        else
          ASSERT_THROW(expansion(p, t), std::domain_error) << p.str() << " " << to_char(t);
      }
    }
  }
}

TEST(Partition, CollapseExamples) {
  // (n^a b), n odd, a odd: (n^{a-1}, n-1, b+1)
  EXPECT_EQ(collapse(Partition{3, 1}, ClassicalType::C), (Partition{2, 2}));
  EXPECT_EQ(collapse(Partition{3, 3, 3, 1}, ClassicalType::C), (Partition{3, 3, 2, 2}));
  EXPECT_EQ(collapse(Partition{4, 3, 2}, ClassicalType::B), *oracle::collapse(Partition{4, 3, 2}, ClassicalType::B));
  EXPECT_EQ(expansion(Partition{3, 1}, ClassicalType::C), (Partition{4}));
  EXPECT_THROW(expansion(Partition{3, 2, 1}, ClassicalType::C), std::domain_error);
  EXPECT_THROW(expansion(Partition{2}, ClassicalType::D), std::domain_error);
}

TEST(Partition, FrakCounts) {
  EXPECT_EQ(frak_B(Partition{2, 2, 1, 1, 1}, 2), 3);
  EXPECT_EQ(frak_A(Partition{4, 4, 1, 1}, 1), 2);
  EXPECT_EQ(frak_A(Partition{5, 3, 3, 2}, 3), 0);
  EXPECT_EQ(frak_B(Partition{5, 3, 3, 2}, 3), 1);
  EXPECT_THROW(frak_A(Partition{5, 3}, 4), std::invalid_argument);
}

TEST(Partition, Boxes) {
  EXPECT_EQ(plus_box(Partition{2, 1}), (Partition{3, 1}));
  EXPECT_EQ(minus_box(Partition{2, 1}), (Partition{2}));
  EXPECT_EQ(union_of(Partition{3, 1}, Partition{2, 1}), (Partition{3, 2, 1, 1}));
}

TEST(Partition, RandomDominanceAgreesWithOracle) {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 18);
    auto all = partitions_of(n);
    const auto& p = all[rng() % all.size()];
    const auto& q = all[rng() % all.size()];
    EXPECT_EQ(dominates(p, q), oracle::dom(p, q));
  }
}

TEST(Duality, LusztigSpaltensteinReversesOrderAndIsIdempotentCubed) {
  for (auto t : {ClassicalType::A, ClassicalType::B, ClassicalType::C, ClassicalType::D}) {
    for (int n = 2; n <= 16; ++n) {
      if (t != ClassicalType::A && !size_fits(n, t)) continue;
      std::vector<Partition> valid;
      for (const auto& p : partitions_of(n))
        if (is_valid(p, t)) valid.push_back(p);
      for (const auto& p : valid) {
        const Partition d = d_LS(p, t);
        ASSERT_TRUE(is_valid(d, t));
        ASSERT_EQ(d_LS(d_LS(d, t), t), d) << p.str();
      }
      for (const auto& p : valid)
        for (const auto& q : valid)
          if (dominates(p, q)) ASSERT_TRUE(dominates(d_LS(q, t), d_LS(p, t))) << p.str() << " " << q.str();
    }
  }
}
