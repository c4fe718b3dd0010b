#include <gtest/gtest.h>

#include <sstream>

#include "k4steiner/weight.hpp"

using k4st::Weight;

TEST(Weight, AdditionIsExact) {
  EXPECT_EQ(Weight(2) + Weight(3), Weight(5));
  EXPECT_EQ((Weight(1) + Weight::zero()).value(), 1);
}

TEST(Weight, InfinityAbsorbs) {
  EXPECT_TRUE((Weight::infinity() + Weight(1)).is_infinite());
  EXPECT_TRUE((Weight(1) + Weight::infinity()).is_infinite());
  EXPECT_LT(Weight(1'000'000'000'000), Weight::infinity());
}

TEST(Weight, OverflowSaturates) {
  const Weight big(std::numeric_limits<Weight::Rep>::max() - 1);
  EXPECT_TRUE((big + big).is_infinite());
}

TEST(Weight, NegativeClampsToZero) { EXPECT_EQ(Weight(-4), Weight::zero()); }

TEST(Weight, MinAndPrint) {
  EXPECT_EQ(min(Weight(3), Weight(2)), Weight(2));
  std::ostringstream os;
  os << Weight(7) << ' ' << Weight::infinity();
  EXPECT_EQ(os.str(), "7 inf");
}

TEST(Weight, Rebalance) {
  // 6 + 7 - 5 - 5 + 1
  EXPECT_EQ(k4st::rebalance(Weight(13), Weight(5), Weight(5), Weight(1)), Weight(4));
  EXPECT_EQ(k4st::rebalance(Weight(13), Weight(5), Weight(5), Weight(2)), Weight(5));
  EXPECT_TRUE(k4st::rebalance(Weight(13), Weight(5), Weight(5), Weight::infinity()).is_infinite());
}
