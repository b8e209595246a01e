#include <qyt/qpoly.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using qyt::Integer;
using qyt::QPoly;

namespace {

QPoly poly(std::initializer_list<int> c) { return QPoly(std::vector<Integer>(c.begin(), c.end())); }

}  // namespace

TEST(QPoly, Basics) {
    EXPECT_EQ(qyt::q_int(2), poly({1, 1}));
    EXPECT_EQ(qyt::q_binom(7, 0), QPoly(1));
    EXPECT_EQ(qyt::q_binom(4, 2), poly({1, 1, 2, 1, 1}));
    EXPECT_EQ(qyt::q_fact(4).eval_at_one(), 24);
    EXPECT_EQ(qyt::q_int(2).shift(2), poly({0, 0, 1, 1}));
    EXPECT_EQ(qyt::q_int(2) * qyt::q_int(3), poly({1, 2, 2, 1}));
    EXPECT_EQ(oracle::convolve({1, 1}, {1, 1, 1}), (std::vector<std::int64_t>{1, 2, 2, 1}));
    EXPECT_TRUE(qyt::q_int(0).is_zero());
    EXPECT_EQ(QPoly().degree(), -1);
    EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
}

TEST(QPoly, Str) {
    EXPECT_EQ(poly({1, -2, 0, 1}).str(), "1 - 2q + q^3");
    EXPECT_EQ(QPoly().str(), "0");
}

TEST(QPoly, GaussianBinomials) {
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= a; ++b) {
            auto g = qyt::q_binom(a, b);
            EXPECT_EQ(g.eval_at_one(), qyt::binomial(a, b));
            EXPECT_EQ(g.degree(), b * (a - b));
            for (const auto& c : g.coeffs()) EXPECT_GE(c, 0);
        }
    for (int a = 1; a <= 10; ++a)
        for (int b = 1; b <= a; ++b)
            EXPECT_EQ(qyt::q_binom(a, b), qyt::q_binom(a - 1, b - 1) + qyt::q_binom(a - 1, b).shift(b)) << a << "," << b;
    EXPECT_TRUE(qyt::q_binom(3, 4).is_zero());
}

TEST(QPoly, ExactDivisionFailsLoudly) {
    EXPECT_EQ(qyt::exact_div(qyt::q_fact(4), qyt::q_int(3)), qyt::q_int(2) * qyt::q_int(4));
    EXPECT_THROW(qyt::exact_div(qyt::q_int(3), qyt::q_int(2)), qyt::inexact_error);
    EXPECT_THROW(qyt::exact_div(poly({2}), poly({3})), qyt::inexact_error);
    EXPECT_THROW(qyt::exact_div(Integer(7), Integer(2)), qyt::inexact_error);
}

TEST(QPoly, RingAxiomsOnRandomInstances) {
    std::mt19937_64 rng(20240611);
    auto rand_poly = [&] {
        std::vector<Integer> c(rng() % 6);
        for (auto& x : c) x = static_cast<int>(rng() % 11) - 5;
        return QPoly(std::move(c));
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto a = rand_poly(), b = rand_poly(), c = rand_poly();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b - b, a);
        EXPECT_EQ((a * b).eval(3), a.eval(3) * b.eval(3));
        if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
}

TEST(QTPoly, Arithmetic) {
    auto p = qyt::QTPoly::monomial(1, 0) + qyt::QTPoly::monomial(0, 1);
    auto sq = p * p;
    EXPECT_EQ(sq.coeff(1, 1), 2);
    EXPECT_EQ(sq.coeff(2, 0), 1);
    EXPECT_EQ(sq.terms().size(), 3u);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(sq.at_q_one(), qyt::QPoly(std::vector<Integer>{1, 2, 1}));
    EXPECT_EQ(qyt::QTPoly::monomial(3, 2).str(), "q^3t^2");
}
