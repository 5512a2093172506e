#include <gtest/gtest.h>

#include <vector>

#include <pstat/canonical.hpp>
#include <pstat/points.hpp>

using pstat::BigInt;
using pstat::EvalPoint;
using pstat::IntegerPolynomial;
using pstat::QMonomialPoint;
using pstat::Rational;
using pstat::StatisticsKind;

namespace {

IntegerPolynomial poly(std::vector<long> c) {
    std::vector<BigInt> b;
    for (long x : c) b.emplace_back(x);
    return IntegerPolynomial(std::move(b));
}

}  // namespace

TEST(ZCanonical, Examples) {
    EXPECT_EQ(pstat::z_canonical(StatisticsKind::fermi(), EvalPoint({2, 3, 5}), 2), Rational(31));
    EXPECT_EQ(pstat::z_canonical(StatisticsKind::bose(), EvalPoint({2, 3}), 2), Rational(19));
    EXPECT_EQ(pstat::z_canonical(StatisticsKind::hst(), EvalPoint({2, 3}), 2), Rational(25));
    for (const auto& kind : {StatisticsKind::bose(), StatisticsKind::even_cols(), StatisticsKind::pq(1, 1)})
        EXPECT_EQ(pstat::z_canonical(kind, EvalPoint({2, 3}), 0), Rational(1));
}

TEST(ZOccupationOracle, Examples) {
    EXPECT_EQ(pstat::z_occupation_oracle(StatisticsKind::fermi(), EvalPoint({2, 3, 5}), 2), Rational(31));
    EXPECT_EQ(pstat::z_occupation_oracle(StatisticsKind::bose(), EvalPoint({2, 3}), 2), Rational(19));
    EXPECT_EQ(pstat::z_occupation_oracle(StatisticsKind::fermi(), EvalPoint({2, 3}), 3), Rational(0));
    EXPECT_THROW(pstat::z_occupation_oracle(StatisticsKind::hst(), EvalPoint({2}), 1), pstat::UnsupportedKind);
}

TEST(ZCanonical, SchurSumMatchesOccupationCounting) {
    std::vector<EvalPoint> points;
    for (std::size_t m = 1; m <= 4; ++m) {
        points.push_back(pstat::random_distinct_point(m, 40 + m));
        points.push_back(pstat::prime_point(m));
    }
    points.push_back(EvalPoint({Rational(1, 2), Rational(1, 2), -3}));
    for (const auto& point : points)
        for (int n = 0; n <= 8; ++n)
            for (const auto& kind : {StatisticsKind::bose(), StatisticsKind::fermi()})
                EXPECT_EQ(pstat::z_canonical(kind, point, n), pstat::z_occupation_oracle(kind, point, n))
                    << pstat::to_string(kind) << " n=" << n << " M=" << point.size();
}

TEST(ZCanonical, VanishingCases) {
    const EvalPoint point({2, 3, 5});
    for (int n = 4; n <= 7; ++n) EXPECT_EQ(pstat::z_canonical(StatisticsKind::fermi(), point, n), Rational(0));
    for (int n = 1; n <= 7; n += 2) {
        EXPECT_EQ(pstat::z_canonical(StatisticsKind::even_rows(), point, n), Rational(0));
        EXPECT_EQ(pstat::z_canonical(StatisticsKind::even_cols(), point, n), Rational(0));
    }
}

TEST(ZCanonical, ParafermiBoundVacuousAboveN) {
    const EvalPoint point({2, Rational(1, 3), 5});
    for (int n = 0; n <= 6; ++n)
        for (int p = std::max(n, 1); p <= n + 2; ++p)
            EXPECT_EQ(pstat::z_canonical(StatisticsKind::parafermi(p), point, n),
                      pstat::z_canonical(StatisticsKind::hst(), point, n));
}

TEST(ZCanonicalQPoly, Examples) {
    const QMonomialPoint p({1, 2});
    EXPECT_EQ(pstat::z_canonical_qpoly(StatisticsKind::bose(), p, 2, 10), poly({0, 0, 1, 1, 1}));
    EXPECT_EQ(pstat::z_canonical_qpoly(StatisticsKind::fermi(), p, 2, 10), poly({0, 0, 0, 1}));
    EXPECT_TRUE(pstat::z_canonical_qpoly(StatisticsKind::even_cols(), p, 1, 10).is_zero());
}

TEST(ZCanonicalQPoly, RestrictionShrinksCoefficientwise) {
    const QMonomialPoint point({1, 2, 2, 3, 4});
    for (int n = 0; n <= 6; ++n)
        for (int p = 1; p <= 3; ++p) {
            const auto wide = pstat::z_canonical_qpoly(StatisticsKind::parabose(p), point, n, 40);
            for (int q = 1; q <= 3; ++q) {
                const auto narrow = pstat::z_canonical_qpoly(StatisticsKind::pq(p, q), point, n, 40);
                for (std::size_t t = 0; t <= 40; ++t) {
                    EXPECT_GE(narrow[t], 0);
                    EXPECT_LE(narrow[t], wide[t]);
                }
            }
        }
}
