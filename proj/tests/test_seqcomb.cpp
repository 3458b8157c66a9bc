#include "pieri/seqcomb.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace pieri;

namespace {

DecSeq s(int n, std::vector<int> e) { return DecSeq(n, std::move(e)); }

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// α*r straight from the definition: filter every sequence.
std::vector<DecSeq> pieri_set_brute(const DecSeq& a, int r) {
    std::vector<DecSeq> out;
    for (const auto& b : all_sequences(a.n(), a.m()))
        if (interlaces(a, b) && codim(b) == codim(a) + r) out.push_back(b);
    sort_canonical(out);
    return out;
}

}  // namespace

TEST(Pieri, SetOf741AtTwo) {
    auto got = pieri_set(s(9, {7, 4, 1}), 2);
    std::vector<DecSeq> want{s(9, {9, 4, 1}), s(9, {8, 5, 1}), s(9, {8, 4, 2}),
                             s(9, {7, 6, 1}), s(9, {7, 5, 2}), s(9, {7, 4, 3})};
    EXPECT_EQ(got, want);
}

TEST(Pieri, ZeroIsSingleton) {
    auto a = s(6, {5, 3, 2});
    EXPECT_EQ(pieri_set(a, 0), std::vector<DecSeq>{a});
}

TEST(Pieri, FirstEntryCutoff) {
    // 741 over n = 7 cannot raise its first entry.
    for (const auto& b : pieri_set(s(7, {7, 4, 1}), 3)) EXPECT_EQ(b(1), 7);
    EXPECT_TRUE(pieri_set(s(3, {3, 2, 1}), 1).empty());
}

TEST(Pieri, AgreesWithDefinition) {
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= n; ++m)
            for (const auto& a : all_sequences(n, m))
                for (int r = 0; r <= 4; ++r) EXPECT_EQ(pieri_set(a, r), pieri_set_brute(a, r)) << a.str() << " r=" << r;
}

TEST(Pieri, NegativeRejected) { EXPECT_THROW(pieri_set(s(4, {3, 1}), -1), Error); }

TEST(Sequences, AllSequencesCount) {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= n; ++m) {
            auto v = all_sequences(n, m);
            EXPECT_EQ(static_cast<long>(v.size()), binom(n, m));
            EXPECT_EQ(std::set<DecSeq>(v.begin(), v.end()).size(), v.size());
        }
}

TEST(Sequences, Validation) {
    EXPECT_THROW(s(4, {3, 3}), Error);
    EXPECT_THROW(s(4, {5, 1}), Error);
    EXPECT_THROW(s(4, {}), Error);
    EXPECT_FALSE(DecSeq::make(4, {5, 1}).has_value());
    EXPECT_TRUE(DecSeq::make(4, {4, 1}).has_value());
}

TEST(Sequences, CodimAndDual) {
    EXPECT_EQ(codim(s(9, {7, 4, 1})), 6);
    EXPECT_EQ(codim(DecSeq::minimal(9, 3)), 0);
    EXPECT_EQ(dual(s(9, {7, 4, 1})), s(9, {9, 6, 3}));
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= n; ++m)
            for (const auto& a : all_sequences(n, m)) {
                EXPECT_EQ(dual(dual(a)), a);
                EXPECT_EQ(codim(a) + codim(dual(a)), m * (n - m));
            }
}

TEST(Sequences, Interlacing) {
    auto a = s(9, {7, 4, 1});
    EXPECT_TRUE(interlaces(a, s(9, {8, 5, 1})));
    EXPECT_TRUE(interlaces(a, a));
    EXPECT_FALSE(interlaces(a, s(9, {8, 7, 1})));
    EXPECT_FALSE(interlaces(a, s(9, {6, 4, 1})));
    EXPECT_THROW(interlaces(a, s(8, {7, 4, 1})), Error);
}

TEST(Sequences, FirstDiffIndex) {
    auto a = s(9, {7, 4, 1});
    EXPECT_EQ(first_diff_index(a, s(9, {9, 4, 1})), 1);
    EXPECT_EQ(first_diff_index(a, s(9, {7, 5, 2})), 2);
    EXPECT_EQ(first_diff_index(a, s(9, {7, 4, 3})), 3);
    EXPECT_THROW(first_diff_index(a, a), Error);
}

TEST(Sequences, PlusDeltaAndRestrict) {
    auto a = s(9, {7, 4, 1});
    EXPECT_EQ(*plus_delta(a, 2), s(9, {7, 5, 1}));
    EXPECT_FALSE(plus_delta(s(9, {7, 6, 1}), 2).has_value());
    EXPECT_FALSE(plus_delta(s(9, {9, 4, 1}), 1).has_value());
    EXPECT_EQ(*plus_delta(a, 3, 2), s(9, {7, 4, 3}));
    EXPECT_EQ(restrict_seq(s(9, {8, 5, 2}), 2), s(5, {4, 1}));
    EXPECT_EQ(restrict_seq(s(9, {8, 5, 2}), 1), s(2, {1}));
    EXPECT_EQ(restrict_seq(s(9, {8, 5, 2}), 3), s(8, {7, 4, 1}));
    EXPECT_EQ(tail_entries(s(9, {8, 5, 2}), 1), (std::vector<int>{5, 2}));
}

TEST(Sequences, PartitionCorrespondence) {
    EXPECT_EQ(lambda_of(s(9, {7, 4, 1})), Partition({4, 2}));
    EXPECT_EQ(alpha_of(Partition({4, 2}), 9, 3), s(9, {7, 4, 1}));
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= n; ++m)
            for (const auto& a : all_sequences(n, m)) {
                EXPECT_EQ(alpha_of(lambda_of(a), n, m), a);
                EXPECT_EQ(lambda_of(a).size(), codim(a));
            }
    EXPECT_THROW(alpha_of(Partition({7}), 9, 3), Error);
    EXPECT_THROW(alpha_of(Partition({1, 1, 1, 1}), 9, 3), Error);
    EXPECT_THROW(Partition({1, 2}), Error);
}

TEST(Sequences, Parse) {
    EXPECT_EQ(parse_seq(9, "741"), s(9, {7, 4, 1}));
    EXPECT_EQ(parse_seq(12, "10,4,1"), s(12, {10, 4, 1}));
    EXPECT_EQ(s(12, {10, 4, 1}).str(), "10,4,1");
    EXPECT_THROW(parse_seq(9, "7,x,1"), Error);
    EXPECT_THROW(parse_seq(9, "7a1"), Error);
    EXPECT_THROW(parse_seq(9, "1,4,7"), Error);
    EXPECT_THROW(parse_seq(9, "7,,1"), Error);
}

TEST(Tree, Edges741) {
    auto t = tree_chains(s(9, {7, 4, 1}), 2);
    ASSERT_EQ(t.levels.size(), 3u);
    EXPECT_EQ(t.levels[0].size(), 1u);
    EXPECT_EQ(t.levels[1].size(), 3u);
    EXPECT_EQ(t.levels[2].size(), 6u);
    auto e = [](std::vector<int> p, std::vector<int> c) { return std::pair{DecSeq(9, p), DecSeq(9, c)}; };
    std::set<std::pair<DecSeq, DecSeq>> want{
        e({7, 4, 1}, {8, 4, 1}), e({7, 4, 1}, {7, 5, 1}), e({7, 4, 1}, {7, 4, 2}),
        e({8, 4, 1}, {9, 4, 1}), e({7, 5, 1}, {8, 5, 1}), e({7, 5, 1}, {7, 6, 1}),
        e({7, 4, 2}, {8, 4, 2}), e({7, 4, 2}, {7, 5, 2}), e({7, 4, 2}, {7, 4, 3}),
    };
    EXPECT_EQ(std::set(t.edges.begin(), t.edges.end()), want);
    EXPECT_EQ(t.chains.size(), 6u);
}

TEST(Tree, CoversUnder) {
    auto a = s(9, {7, 4, 1});
    // 841 ≺ 851 fails: j(741, 851) = 1 but j(841, 851) = 2.
    EXPECT_FALSE(covers_under(a, s(9, {8, 4, 1}), s(9, {8, 5, 1})));
    EXPECT_TRUE(covers_under(a, s(9, {7, 5, 1}), s(9, {8, 5, 1})));
    EXPECT_EQ(tree_parent(a, s(9, {8, 5, 1})), s(9, {7, 5, 1}));
    EXPECT_EQ(tree_parent(a, s(9, {7, 4, 3})), s(9, {7, 4, 2}));
}

TEST(Tree, EveryLeafReachedOnce) {
    for (int n = 1; n <= 7; ++n)
        for (int m = 1; m <= n; ++m)
            for (const auto& a : all_sequences(n, m))
                for (int b = 0; b <= 3; ++b) {
                    auto t = tree_chains(a, b);
                    std::vector<DecSeq> leaves;
                    for (const auto& c : t.chains) leaves.push_back(c.back());
                    sort_canonical(leaves);
                    EXPECT_EQ(leaves, pieri_set(a, b)) << a.str() << " b=" << b;
                    for (const auto& c : t.chains)
                        for (std::size_t i = 1; i < c.size(); ++i) EXPECT_EQ(tree_parent(a, c[i]), c[i - 1]);
                }
}
