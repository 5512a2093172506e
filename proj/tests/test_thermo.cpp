#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include <pstat/thermo.hpp>

using pstat::CanonicalTable;
using pstat::SpectrumFamily;
using pstat::SpectrumSpec;
using pstat::StatisticsKind;
using pstat::ThermoParams;

namespace {

const SpectrumSpec kSingleLevel({{1, 1}}, 1);  // energy hbar omega / 2

}  // namespace

TEST(Evaluate, SingleBoseLevelGeometricOccupancy) {
    const auto r = pstat::evaluate(StatisticsKind::bose(), kSingleLevel, ThermoParams{1.0, 0.0, 80});
    const double x = std::exp(-0.5);
    EXPECT_NEAR(r.mean_n, x / (1 - x), 1e-9);
    EXPECT_NEAR(r.mean_n, 1.5415, 1e-4);
    EXPECT_NEAR(r.log_z, -std::log(1 - x), 1e-9);
    EXPECT_NEAR(r.mean_e_over_hw, 0.5 * x / (1 - x), 1e-9);
}

TEST(Evaluate, FermiSaturates) {
    const auto two_levels = pstat::build_spectrum(SpectrumFamily::Linear1D, 1);
    const auto r = pstat::evaluate(StatisticsKind::fermi(), two_levels, ThermoParams{1.0, 60.0, 4});
    EXPECT_NEAR(r.mean_n, 2.0, 1e-12);
    for (double mu = -5; mu <= 50; mu += 0.5)
        EXPECT_LE(pstat::evaluate(StatisticsKind::fermi(), two_levels, ThermoParams{0.7, mu, 3}).mean_n, 2.0 + 1e-12);
}

TEST(Evaluate, BoseMeanNIncreasesBelowLowestLevel) {
    const auto spec = pstat::build_spectrum(SpectrumFamily::Linear1D, 5);
    const CanonicalTable table(StatisticsKind::bose(), spec, 60);
    double previous = 0;
    for (double mu = -4; mu < 0.2; mu += 0.25) {
        const double n = table.evaluate(1.0, mu).mean_n;
        EXPECT_TRUE(std::isfinite(n));
        EXPECT_GT(n, previous);
        previous = n;
    }
}

TEST(Evaluate, TruncationTailDetected) {
    EXPECT_THROW(pstat::evaluate(StatisticsKind::bose(), kSingleLevel, ThermoParams{1.0, 0.0, 10}), pstat::TruncationTail);
    // Fermi on two levels is complete at N = 2; no tail whatever mu is.
    EXPECT_NO_THROW(pstat::evaluate(StatisticsKind::fermi(), pstat::build_spectrum(SpectrumFamily::Linear1D, 1),
                                    ThermoParams{1.0, 100.0, 2}));
}

TEST(Evaluate, EvenKindsCheckTheLastEvenTerm) {
    const auto spec = pstat::build_spectrum(SpectrumFamily::Linear1D, 3);
    const CanonicalTable odd(StatisticsKind::even_cols(), spec, 9);
    EXPECT_EQ(odd.tail_index(), 8);
    EXPECT_TRUE(odd.z(9).is_zero());
    const CanonicalTable fermi(StatisticsKind::fermi(), spec, 5);
    EXPECT_FALSE(fermi.tail_index());
    const CanonicalTable pf(StatisticsKind::parafermi(2), spec, 5);
    EXPECT_EQ(pf.tail_index(), 5);
}

TEST(Evaluate, Deterministic) {
    const auto spec = pstat::build_spectrum(SpectrumFamily::Anisotropic2D, 5);
    const ThermoParams params{0.8, -1.0, 12};
    const auto a = pstat::evaluate(StatisticsKind::hst(), spec, params);
    const auto b = pstat::evaluate(StatisticsKind::hst(), spec, params);
    EXPECT_EQ(a.log_z, b.log_z);
    EXPECT_EQ(a.mean_n, b.mean_n);
    EXPECT_EQ(a.mean_e_over_hw, b.mean_e_over_hw);
}

TEST(SolveMu, FermiHalfFilling) {
    const double mu = pstat::solve_mu(StatisticsKind::fermi(), kSingleLevel, 1.3, 0.5, 3);
    EXPECT_NEAR(mu, 0.5, 1e-7);
}

TEST(SolveMu, SingleBoseLevelInvertsGeometric) {
    // x/(1-x) = 1 with x = exp(beta (mu - eps)), eps = 1/2
    const double mu = pstat::solve_mu(StatisticsKind::bose(), kSingleLevel, 1.0, 1.0, 80);
    EXPECT_NEAR(mu, 0.5 - std::log(2.0), 1e-7);
}

TEST(SolveMu, RoundTrip) {
    const auto spec = pstat::build_spectrum(SpectrumFamily::Linear1D, 7);
    for (const auto& kind : {StatisticsKind::bose(), StatisticsKind::fermi(), StatisticsKind::parafermi(2)})
        for (double beta : {0.5, 1.0, 2.0})
            for (double target : {0.25, 1.0}) {
                const CanonicalTable table(kind, spec, 40);
                const double mu = pstat::solve_mu(table, beta, target);
                EXPECT_LE(std::abs(table.evaluate(beta, mu).mean_n - target), 1e-8 * target)
                    << pstat::to_string(kind) << " beta=" << beta;
            }
}

TEST(SolveMu, Failures) {
    const auto two_levels = pstat::build_spectrum(SpectrumFamily::Linear1D, 1);
    EXPECT_THROW(pstat::solve_mu(StatisticsKind::fermi(), two_levels, 1.0, 2.5, 4), pstat::BracketFailure);
    // a Bose target beyond what nmax = 4 can represent
    EXPECT_THROW(pstat::solve_mu(StatisticsKind::bose(), kSingleLevel, 1.0, 3.0, 4), pstat::TruncationTail);
    EXPECT_THROW(pstat::solve_mu(StatisticsKind::bose(), kSingleLevel, 1.0, -1.0, 4), std::invalid_argument);
}

TEST(Thermo, BoseAndConjugateEvenAgreeWithMatchedFugacity) {
    const int levels = 12;
    const double beta = 2.0;
    const double mu = -0.25;
    const auto bose = pstat::evaluate(StatisticsKind::bose(), pstat::build_spectrum(SpectrumFamily::Anisotropic2D, levels),
                                      ThermoParams{beta, mu, 8});
    const auto pairs = pstat::evaluate(StatisticsKind::even_cols(), pstat::build_spectrum(SpectrumFamily::Linear1D, levels),
                                       ThermoParams{beta, pstat::pair_matching_mu(mu), 16});
    EXPECT_LE(std::abs(std::expm1(bose.log_z - pairs.log_z)), pstat::kTailBound);
    // every particle number is even on the pair side and equals twice the Bose count
    EXPECT_NEAR(pairs.mean_n, 2 * bose.mean_n, 1e-8);
}

TEST(Thermo, SweepCsv) {
    const auto csv = pstat::thermo_sweep_csv(StatisticsKind::fermi(), pstat::build_spectrum(SpectrumFamily::Linear1D, 2), 4,
                                             {0.5, 1.0}, {-1.0, 0.0, 1.0});
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "beta_hw,mu_over_hw,meanN,meanE_over_hw,logZ");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 6);
}
