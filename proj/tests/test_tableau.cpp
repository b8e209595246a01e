#include <qyt/tableau.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using qyt::Partition;
using qyt::Tableau;

TEST(Tableau, TextForm) {
    auto t = Tableau::parse("1,1/2,2/3");
    EXPECT_EQ(t.shape(), Partition({2, 2, 1}));
    EXPECT_EQ(t.str(), "1,1/2,2/3");
    EXPECT_EQ(Tableau::parse(""), Tableau());
    EXPECT_THROW(Tableau::parse("1/2,3"), std::invalid_argument);
    EXPECT_THROW(Tableau::parse("1,/2"), std::invalid_argument);
}

TEST(Tableau, Predicates) {
    // The first filling is quasi-Yamanouchi, the second is not.
    EXPECT_TRUE(qyt::is_qyt(Tableau::parse("1,2,2,4/2,3/4")));
    EXPECT_TRUE(qyt::is_ssyt(Tableau::parse("1,2,2,5/3,3/4")));
    EXPECT_FALSE(qyt::is_qyt(Tableau::parse("1,2,2,5/3,3/4")));
    EXPECT_FALSE(qyt::is_ssyt(Tableau::parse("2,1")));
    EXPECT_FALSE(qyt::is_ssyt(Tableau::parse("1,2/1")));
    EXPECT_TRUE(qyt::is_syt(Tableau::parse("1,2,3/4,5")));
    EXPECT_FALSE(qyt::is_syt(Tableau::parse("1,1/2,2")));
}

TEST(Tableau, EnumerateSsyt) {
    auto all = qyt::enumerate_ssyt({2, 2}, 3);
    std::set<Tableau> got(all.begin(), all.end());
    std::set<Tableau> expected{Tableau::parse("1,1/2,2"), Tableau::parse("1,1/2,3"), Tableau::parse("1,2/2,3"),
                            Tableau::parse("1,1/3,3"), Tableau::parse("1,2/3,3"), Tableau::parse("2,2/3,3")};
    EXPECT_EQ(all.size(), 6u);
    EXPECT_EQ(got, expected);
    EXPECT_TRUE(qyt::enumerate_ssyt({1, 1}, 1).empty());
    EXPECT_EQ(qyt::enumerate_ssyt({3, 2}, 2).size(), 2u);
}

TEST(Tableau, EnumerateSsytMatchesHookContent) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : qyt::partitions_of(n))
            for (int m = 1; m <= 6; ++m) {
                auto ts = qyt::enumerate_ssyt(p, m);
                EXPECT_EQ(qyt::Integer(ts.size()), qyt::hook_content_count(p, m));
                for (const auto& t : ts) EXPECT_TRUE(qyt::is_ssyt(t));
            }
}

TEST(Tableau, EnumerateSyt) {
    auto syt = qyt::enumerate_syt({3, 2});
    std::set<Tableau> got(syt.begin(), syt.end());
    std::set<Tableau> expected{Tableau::parse("1,2,3/4,5"), Tableau::parse("1,2,4/3,5"), Tableau::parse("1,2,5/3,4"),
                            Tableau::parse("1,3,4/2,5"), Tableau::parse("1,3,5/2,4")};
    EXPECT_EQ(got, expected);
    EXPECT_EQ(qyt::enumerate_syt({6}).size(), 1u);
    EXPECT_EQ(qyt::enumerate_syt({2, 2, 1}).size(), 5u);
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : qyt::partitions_of(n)) EXPECT_EQ(qyt::enumerate_syt(p).size(), oracle::syt_list(p).size());
}

TEST(Tableau, EnumerateQytSmallShape) {
    auto three = qyt::enumerate_qyt_exact({2, 2, 1}, 3);
    auto four = qyt::enumerate_qyt_exact({2, 2, 1}, 4);
    EXPECT_EQ(three.size(), 3u);
    EXPECT_EQ(four.size(), 2u);
    std::set<Tableau> got3(three.begin(), three.end()), got4(four.begin(), four.end());
    EXPECT_EQ(got3, (std::set<Tableau>{Tableau::parse("1,1/2,2/3"), Tableau::parse("1,1/2,3/3"), Tableau::parse("1,2/2,3/3")}));
    EXPECT_EQ(got4, (std::set<Tableau>{Tableau::parse("1,2/2,3/4"), Tableau::parse("1,3/2,4/3")}));
    auto row = qyt::enumerate_qyt_exact({5}, 1);
    ASSERT_EQ(row.size(), 1u);
    EXPECT_EQ(row[0], Tableau::parse("1,1,1,1,1"));
    EXPECT_EQ(qyt::enumerate_qyt_at_most({2, 2, 1}, 3).size(), 3u);
    EXPECT_EQ(qyt::enumerate_qyt_at_most({2, 2, 1}, 4).size(), 5u);
}

TEST(Tableau, QytEnumerationMatchesDirectSearch) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : qyt::partitions_of(n))
            for (int m = 1; m <= n; ++m) {
                std::set<Tableau> direct;
                for (const auto& f : oracle::qyt_exact(p, m)) direct.insert(Tableau(f));
                auto via = qyt::enumerate_qyt_exact(p, m);
                std::set<Tableau> got(via.begin(), via.end());
                EXPECT_EQ(got.size(), via.size());
                EXPECT_EQ(got, direct) << p << " m=" << m;
                for (const auto& t : via) EXPECT_TRUE(qyt::is_qyt(t));
            }
}

TEST(Tableau, DescentsAndRuns) {
    auto t = Tableau::parse("1,2,3,6,8/4,5,7,11/9,10,12");
    EXPECT_EQ(qyt::descent_set(t), (std::vector<int>{3, 6, 8, 11}));
    auto rs = qyt::runs(t);
    ASSERT_EQ(rs.size(), 5u);
    EXPECT_EQ(rs[3], std::make_pair(9, 11));
    EXPECT_TRUE(qyt::descent_set(Tableau::parse("1,2,3,4")).empty());
    EXPECT_EQ(qyt::descent_set(Tableau::parse("1/2/3")), (std::vector<int>{1, 2}));
    EXPECT_THROW(qyt::descent_set(Tableau::parse("1,1/2,2")), std::invalid_argument);
}

TEST(Tableau, Destandardize) {
    EXPECT_EQ(qyt::destandardize(Tableau::parse("1,2,3,4")), Tableau::parse("1,1,1,1"));
    EXPECT_EQ(qyt::destandardize(Tableau::parse("1,2/3,4/5")), Tableau::parse("1,1/2,2/3"));
    // Run-inverse by hand: 1 -> 1; the two 2s, left to right -> 2, 3; 3 -> 4; 4 -> 5.
    EXPECT_EQ(qyt::standardize(Tableau::parse("1,2/2,3/4")), Tableau::parse("1,3/2,4/5"));
    EXPECT_EQ(qyt::destandardize(Tableau::parse("1,3/2,4/5")), Tableau::parse("1,2/2,3/4"));
}

TEST(Tableau, BijectionAndRefinement) {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : qyt::partitions_of(n)) {
            auto syts = qyt::enumerate_syt(p);
            std::set<Tableau> images;
            std::vector<int> by_des(n + 2, 0);
            for (const auto& s : syts) {
                auto q = qyt::destandardize(s);
                EXPECT_TRUE(qyt::is_qyt(q));
                EXPECT_EQ(qyt::standardize(q), s);
                EXPECT_EQ(q.max_entry(), static_cast<int>(qyt::runs(s).size()));
                images.insert(q);
                ++by_des[qyt::descent_set(s).size()];
            }
            EXPECT_EQ(images.size(), syts.size());
            auto counts = qyt::qyt_counts(p);
            qyt::Integer total = 0;
            for (int k = 1; k <= n; ++k) {
                EXPECT_EQ(counts[k], by_des[k - 1]);
                EXPECT_EQ(counts[k], qyt::enumerate_qyt_exact(p, k).size());
                total += counts[k];
            }
            EXPECT_EQ(total, qyt::hook_length_count(p));
        }
    }
}

TEST(Tableau, MajAndCharge) {
    auto t = Tableau::parse("1,2,3,6,8/4,5,7,11/9,10,12");
    EXPECT_EQ(qyt::tableau_maj(t), 28);
    EXPECT_EQ(qyt::charge(t), 20);
    EXPECT_EQ(qyt::charge(Tableau::parse("1,2,3,4,5")), 0);
    EXPECT_EQ(qyt::charge(Tableau::parse("1/2/3")), 3);
}

TEST(Tableau, StatisticsAgreeThroughStandardization) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : qyt::partitions_of(n))
            for (const auto& s : qyt::enumerate_syt(p)) {
                auto q = qyt::destandardize(s);
                EXPECT_EQ(qyt::tableau_maj(q), qyt::tableau_maj(s));
                EXPECT_EQ(qyt::charge(q), qyt::charge(s));
                EXPECT_EQ(qyt::tableau_des(q), q.max_entry() - 1);
                EXPECT_EQ(qyt::tableau_descents(s), oracle::syt_descents(s.rows()));
            }
}

TEST(Tableau, Kostka) {
    EXPECT_EQ(qyt::kostka(Partition({3, 2}), Partition({3, 2})), 1);
    EXPECT_EQ(qyt::kostka(Partition({2, 1}), Partition({1, 1, 1})), 2);
    EXPECT_EQ(qyt::kostka(Partition({3, 2}), Partition({2, 2, 1})), 2);
    EXPECT_EQ(qyt::kostka(Partition({2, 2}), Partition({3, 1})), 0);
    // Weight-filtered SSYT enumeration as the second route.
    for (int n = 1; n <= 6; ++n)
        for (const auto& nu : qyt::partitions_of(n))
            for (const auto& lambda : qyt::partitions_of(n)) {
                int c = 0;
                for (const auto& t : qyt::enumerate_ssyt(nu, lambda.length())) c += t.weight() == lambda.parts();
                EXPECT_EQ(qyt::kostka(nu, lambda), c) << nu << " " << lambda;
            }
}
