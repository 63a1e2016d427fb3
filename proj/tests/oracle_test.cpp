// Copyright 2026 The fibeq Authors
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

#include <random>

#include <gtest/gtest.h>

#include "fibeq/errors.hpp"
#include "fibeq/oracle.hpp"
#include "test_support.hpp"

namespace fibeq {
namespace {

using testing::addr;
using testing::bits;
using testing::kA;
using testing::kB;
using testing::kC;
using testing::make_table;

TEST(LpmLinearTest, Examples) {
  const FibTable t1 = testing::worked_table_1();
  EXPECT_EQ(lpm_linear(t1, addr("01100011")), NextHopId{kB});
  EXPECT_EQ(lpm_linear(t1, addr("10110000")), NextHopId{kA});
  EXPECT_FALSE(lpm_linear(make_table(8, {}), addr("10110000")).has_value());
  EXPECT_FALSE(
      lpm_linear(make_table(8, {{"0", kA}}), addr("10110000")).has_value());
}

TEST(LpmImplementationsTest, AllThreeAgree) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    const AddressWidth w{static_cast<int>(1 + uniform_below(rng, 12))};
    const auto c = testing::random_case(rng, w, 150);
    for (const FibTable& t : c.tables) {
      const LengthIndexedLpm indexed(t);
      const auto painted = paint_address_space(t);
      ASSERT_EQ(painted.size(), std::size_t{1} << w.bits());
      for (std::uint64_t i = 0; i < painted.size(); ++i) {
        const Address a = Address::from_index(i, w);
        const auto linear = lpm_linear(t, a);
        ASSERT_EQ(indexed.lookup(a), linear);
        ASSERT_EQ(painted[i], linear);
      }
    }
  }
}

TEST(BruteForceVerifyTest, WorkedPairEquivalent) {
  const VerificationReport r = brute_force_verify(testing::worked_pair());
  EXPECT_TRUE(r.equivalent);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.metrics.comparisons, 256u);
}

TEST(BruteForceVerifyTest, SingleRegionDifference) {
  FibTable t2 = testing::worked_table_2();
  t2.entries[1].nexthop = NextHopId{kC};
  const std::vector<FibTable> tables = {testing::worked_table_1(), t2};
  EXPECT_EQ(find_disagreements(tables).size(), 32u);
  const VerificationReport r = brute_force_verify(tables);
  EXPECT_FALSE(r.equivalent);
  ASSERT_EQ(r.divergences.size(), 1u);
  EXPECT_EQ(r.divergences[0].prefix, bits("001"));
}

TEST(BruteForceVerifyTest, IdenticalTables) {
  const FibTable t = testing::worked_table_2();
  EXPECT_TRUE(brute_force_verify(std::vector<FibTable>{t, t}).equivalent);
}

TEST(BruteForceVerifyTest, RefusesWideSpaces) {
  const std::vector<FibTable> wide = {make_table(21, {}), make_table(21, {})};
  EXPECT_THROW(brute_force_verify(wide), CapacityError);
  const std::vector<FibTable> ok = {make_table(20, {}), make_table(20, {})};
  EXPECT_TRUE(brute_force_verify(ok).equivalent);
}

TEST(BruteForceVerifyTest, MissingDefaultIsHopZero) {
  const std::vector<FibTable> tables = {make_table(4, {{"", 0}}),
                                        make_table(4, {})};
  EXPECT_TRUE(brute_force_verify(tables).equivalent);
}

FibTable wide_table(std::initializer_list<std::pair<uint128, int>> prefixes,
                    std::uint64_t hop) {
  FibTable t;
  t.width = AddressWidth{32};
  t.entries.push_back({Prefix{}, NextHopId{1}});
  for (const auto& [v, len] : prefixes) {
    t.entries.push_back({Prefix::from_bits(v << 96, len), NextHopId{hop}});
  }
  return t;
}

TEST(SampledVerifyTest, NoFalsePositivesAndDeterministic) {
  const FibTable t = gen_random_table(AddressWidth{32}, 500, 4, 3);
  const std::vector<FibTable> tables = {t, aggregate_equiv(t)};
  const VerificationReport r = sampled_verify(tables, 2000, 9);
  EXPECT_TRUE(r.equivalent);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(sampled_verify(tables, 1, 5).metrics.comparisons,
            sampled_verify(tables, 1, 5).metrics.comparisons);
  EXPECT_THROW(sampled_verify(tables, 0, 5), UsageError);
}

TEST(SampledVerifyTest, BoundaryProbesCatchTinyMutation) {
  const FibTable base = wide_table({{0x0A000000, 8}}, 2);
  FibTable mutated = base;
  mutated.entries.push_back(
      {Prefix::from_bits(uint128{0x0A0B0C0D} << 96, 32), NextHopId{7}});
  const VerificationReport r =
      sampled_verify(std::vector<FibTable>{base, mutated}, 1, 1);
  EXPECT_FALSE(r.equivalent);
}

}  // namespace
}  // namespace fibeq
