#include <gtest/gtest.h>

#include <set>
#include <vector>

#include <pstat/partition.hpp>

#include "oracles.hpp"

using pstat::Partition;

TEST(Partition, NormalizesTrailingZeros) {
    EXPECT_EQ(Partition(std::vector<int>{3, 0, 0}), Partition({3}));
    EXPECT_TRUE(Partition(std::vector<int>{0, 0}).empty());
}

TEST(Partition, RejectsInvalidParts) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
    EXPECT_THROW(Partition(std::vector<int>{2, 0, 1}), std::invalid_argument);
}

TEST(GenPartitions, SmallCases) {
    EXPECT_EQ(pstat::gen_partitions(0, 3), std::vector<Partition>{Partition()});
    EXPECT_EQ(pstat::gen_partitions(2, 2), (std::vector<Partition>{{2}, {1, 1}}));
    EXPECT_EQ(pstat::gen_partitions(6, 3).size(), 7u);
}

TEST(GenPartitions, ReverseLexicographicOrder) {
    const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(pstat::gen_partitions(4, 4), expected);
    const auto all = pstat::gen_partitions(9, 9);
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
}

TEST(GenPartitions, MatchesBruteForceEnumeration) {
    for (int n = 0; n <= 10; ++n) {
        const auto brute = oracle::all_partitions(n);
        for (std::size_t max_parts = 1; max_parts <= static_cast<std::size_t>(n) + 1; ++max_parts) {
            std::set<std::vector<int>> expected;
            for (const auto& p : brute)
                if (p.size() <= max_parts) expected.insert(p);
            std::set<std::vector<int>> got;
            const auto list = pstat::gen_partitions(n, max_parts);
            for (const auto& lam : list) got.insert(lam.parts());
            EXPECT_EQ(got.size(), list.size()) << "duplicates for n=" << n;
            EXPECT_EQ(got, expected) << "n=" << n << " max_parts=" << max_parts;
        }
    }
}

TEST(GenPartitions, PartitionNumbers) {
    const long long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        const auto count = static_cast<long long>(pstat::gen_partitions(n, static_cast<std::size_t>(std::max(n, 1))).size());
        EXPECT_EQ(count, p[n]);
        EXPECT_EQ(count, oracle::partition_count(n));
    }
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(pstat::conjugate({2, 1}), Partition({2, 1}));
    EXPECT_EQ(pstat::conjugate({3}), Partition({1, 1, 1}));
    EXPECT_EQ(pstat::conjugate({4, 2, 1}), Partition({3, 2, 1, 1}));
    EXPECT_EQ(pstat::conjugate({}), Partition());
}

TEST(Conjugate, InvolutionAndLength) {
    for (int n = 0; n <= 12; ++n) {
        for (const auto& lam : pstat::gen_partitions(n, static_cast<std::size_t>(std::max(n, 1)))) {
            const auto c = pstat::conjugate(lam);
            EXPECT_EQ(pstat::conjugate(c), lam);
            EXPECT_EQ(c.weight(), lam.weight());
            if (!lam.empty()) EXPECT_EQ(static_cast<int>(c.length()), lam.first());
        }
    }
}

TEST(Parse, RoundTripsAndRejects) {
    EXPECT_EQ(pstat::parse_partition("4,2,1"), Partition({4, 2, 1}));
    EXPECT_EQ(pstat::parse_partition("(3,3)"), Partition({3, 3}));
    EXPECT_EQ(pstat::parse_partition(""), Partition());
    EXPECT_EQ(pstat::parse_partition("()"), Partition());
    EXPECT_EQ(pstat::to_string(Partition({4, 2, 1})), "(4,2,1)");
    EXPECT_THROW(pstat::parse_partition("1,2"), pstat::ParseError);
    EXPECT_THROW(pstat::parse_partition("2,,1"), pstat::ParseError);
    EXPECT_THROW(pstat::parse_partition("a"), pstat::ParseError);
}
