// Copyright 2026 The randmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "randmeas/rng.hpp"

#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "stats.hpp"

namespace randmeas {
namespace {

// Known-answer vectors of the Random123 reference implementation.
TEST(PhiloxTest, KnownAnswers) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                          {0xffffffff, 0xffffffff}),
            (std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                          {0xa4093822, 0x299f31d0}),
            (std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RngStreamTest, SameSeedSameSequence) {
  RngStream a(42), b(42);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
}

TEST(RngStreamTest, SplitIsDeterministicAndDistinct) {
  const RngStream root(7);
  RngStream c1 = root.split(1), c1_again = root.split(1), c2 = root.split(2);
  EXPECT_EQ(c1.stream_id(), c1_again.stream_id());
  EXPECT_NE(c1.stream_id(), c2.stream_id());
  std::set<std::uint64_t> ids;
  for (std::uint64_t i = 0; i < 10000; ++i) ids.insert(root.split(i).stream_id());
  EXPECT_EQ(ids.size(), 10000u);
  EXPECT_EQ(c1.next_u64(), c1_again.next_u64());
}

TEST(RngStreamTest, SiblingStreamsAreUncorrelated) {
  const RngStream root(2024);
  RngStream a = root.split(0), b = root.split(1);
  constexpr int kN = 100000;
  double sab = 0.0;
  std::vector<double> xs, ys;
  for (int i = 0; i < kN; ++i) {
    const double x = a.uniform() - 0.5, y = b.uniform() - 0.5;
    sab += x * y;
    xs.push_back(x);
    ys.push_back(y);
  }
  // Covariance of independent U(-1/2,1/2) has standard deviation 1/(12 sqrt(N)).
  EXPECT_LT(std::abs(sab / kN), 4.0 / (12.0 * std::sqrt(static_cast<double>(kN))));
  EXPECT_GT(testing::ks_two_sample(xs, ys).p_value, 1e-3);
}

TEST(RngStreamTest, UniformAndNormalMarginals) {
  RngStream rng(99);
  std::vector<double> u, z;
  for (int i = 0; i < 50000; ++i) {
    u.push_back(rng.uniform());
    z.push_back(rng.normal());
  }
  for (double v : u) ASSERT_TRUE(v >= 0.0 && v < 1.0);
  EXPECT_GT(testing::ks_one_sample(u, [](double x) { return x; }).p_value, 1e-3);
  EXPECT_GT(testing::ks_one_sample(z, [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); })
                .p_value,
            1e-3);
}

TEST(Mix64Test, IsABijectionOnSamples) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < 4096; ++i) out.insert(mix64(i));
  EXPECT_EQ(out.size(), 4096u);
  EXPECT_NE(mix64(0), mix64(1));
}

}  // namespace
}  // namespace randmeas
