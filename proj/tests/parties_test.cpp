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

#include "randmeas/parties.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

namespace randmeas {
namespace {

TEST(PartiesTest, FullSetHasAllLabels) {
  const Parties p = Parties::full(4);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.labels(), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(p.to_string(), "1,2,3,4");
}

TEST(PartiesTest, ParseAndLabels) {
  const Parties p = Parties::parse("3,1");
  EXPECT_EQ(p.labels(), (std::vector<int>{1, 3}));
  EXPECT_EQ(p.position_of(3), 1);
  EXPECT_EQ(p.position_of(2), -1);
  EXPECT_EQ(p.max_label(), 3);
}

TEST(PartiesTest, RejectsMalformedInput) {
  EXPECT_THROW(Parties::parse(""), std::invalid_argument);
  EXPECT_THROW(Parties::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(Parties::parse("a"), std::invalid_argument);
  EXPECT_THROW(Parties::from_labels({0}), std::invalid_argument);
  EXPECT_THROW(Parties::from_labels({1, 1}), std::invalid_argument);
  EXPECT_THROW(Parties::from_labels({kMaxParties + 1}), std::invalid_argument);
}

TEST(PartiesTest, SetAlgebra) {
  const Parties a = Parties::parse("1,2");
  const Parties b = Parties::parse("2,3");
  EXPECT_EQ((a | b).to_string(), "1,2,3");
  EXPECT_EQ((a & b).to_string(), "2");
  EXPECT_EQ(a.without(b).to_string(), "1");
  EXPECT_TRUE(Parties::parse("2").is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
}

TEST(PartiesTest, OrderingIsBySizeThenLabels) {
  EXPECT_LT(Parties::parse("4"), Parties::parse("1,2"));
  EXPECT_LT(Parties::parse("1,3"), Parties::parse("2,3"));
  EXPECT_LT(Parties::parse("1,2"), Parties::parse("1,3"));
}

TEST(PartiesTest, SubsetEnumeration) {
  const auto all = nonempty_subsets(Parties::full(3));
  ASSERT_EQ(all.size(), 7u);
  EXPECT_EQ(all.front().to_string(), "1");
  EXPECT_EQ(all.back().to_string(), "1,2,3");
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(proper_nonempty_subsets(Parties::full(4)).size(), 14u);
}

}  // namespace
}  // namespace randmeas
