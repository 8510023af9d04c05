#include <gtest/gtest.h>

#include <cmath>

#include "smearlab/errors.hpp"
#include "smearlab/phase_space.hpp"

namespace smearlab {
namespace {

void expect_rel(double got, double want, double tol) { EXPECT_LE(std::abs(got - want) / std::abs(want), tol) << got; }

TEST(PhaseSpace, DerivedConstantsMatchIndependentEvaluation) {
    const auto k = derive_constants(RawConstants{});
    expect_rel(k.l_pl, 1.61625502392855e-33, 1e-13);
    expect_rel(k.m_pl, 2.1764343420511264e-05, 1e-13);
    expect_rel(k.l_ds, 1.7320508075688773e+28, 1e-13);
    expect_rel(k.m_ds, 2.0309294185937885e-66, 1e-13);
    expect_rel(k.rho_lambda, 5.3579150369853181e-30, 1e-13);
    expect_rel(k.rho_pl, 5.1548485064034075e+93, 1e-13);
    expect_rel(k.beta, 6.7997996135690357e-89, 1e-13);
    expect_rel(k.delta, 6.4479246495632794e-62, 1e-13);
    EXPECT_EQ(delta_order_of_magnitude(k), -61);
}

TEST(PhaseSpace, ConstantsRejectNonPositiveInput) {
    RawConstants r;
    r.Lambda = 0;
    EXPECT_THROW(derive_constants(r), DomainError);
    r = RawConstants{};
    r.G = -1;
    EXPECT_THROW(derive_constants(r), DomainError);
}

TEST(PhaseSpace, SmearedWidthsAddInQuadrature) {
    EXPECT_DOUBLE_EQ(smeared_width(3, 4), 5);
    const auto u = smeared_uncertainties({2.0, 0.0, 1.0, 1.0});
    EXPECT_DOUBLE_EQ(u.dx, 2.0);
    EXPECT_DOUBLE_EQ(u.dp, 0.25);
    const auto v = smeared_uncertainties({1.0, 1.0, 1.0, 1.0});
    EXPECT_DOUBLE_EQ(v.dx, std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(v.dp, std::sqrt(0.5));
    EXPECT_THROW(smeared_width(-1, 1), DomainError);
    EXPECT_THROW(smeared_uncertainties({0.0, 1.0, 1.0, 1.0}), DomainError);
}

TEST(PhaseSpace, ConvolutionWidthMatchesQuadrature) {
    for (auto [a, b] : {std::pair{1.0, 1.0}, {3.0, 4.0}, {0.5, 2.0}, {1e-3, 2e-3}}) {
        const double got = convolved_sigma(a, b, ConvolutionGrid::for_widths(a, b));
        expect_rel(got, std::hypot(a, b), 1e-6);
    }
}

TEST(PhaseSpace, ConvolutionIsIndependentOfThreadCount) {
    const auto g = ConvolutionGrid::for_widths(0.7, 1.9);
    const double one = convolved_sigma(0.7, 1.9, g, 1);
    for (unsigned t : {2u, 3u, 8u}) EXPECT_EQ(convolved_sigma(0.7, 1.9, g, t), one);
}

TEST(PhaseSpace, UnderResolvedGridRejected) {
    // Width 0.01 on a grid spaced ~0.06 has well under 8 points per σ.
    EXPECT_THROW(convolved_sigma(0.01, 5.0, ConvolutionGrid::for_widths(0.01, 5.0)), UnderResolvedGridError);
    EXPECT_THROW(convolved_sigma(1.0, 1.0, ConvolutionGrid{12.0, 1}), UnderResolvedGridError);
}

TEST(PhaseSpace, ConvolutionCheckStateWithMomentum) {
    const auto c = convolution_check({0.5, 2.0, 1.0, 1.0});
    EXPECT_LE(c.dx_relative_error, 1e-6);
    EXPECT_LE(c.dp_relative_error, 1e-6);
    EXPECT_DOUBLE_EQ(c.dp_analytic, std::hypot(1.0, 0.25));
}

TEST(PhaseSpace, EgupHyperbolaWithoutCorrections) {
    const auto curve = egup_bound(0, 0, 1, linear_samples(0.1, 10, 100));
    for (const auto& s : curve.samples) {
        ASSERT_TRUE(s.feasible);
        EXPECT_LE(std::abs(s.dx * s.dp - 0.5), 1e-12);
        EXPECT_LE(egup_residual(curve, s), 1e-12);
    }
}

TEST(PhaseSpace, EgupPositionCorrectionOnly) {
    // η = 0, α = 1, ħ = 1: Δp = (1 + Δx²)/(2Δx).
    const auto curve = egup_bound(1, 0, 1, linear_samples(0.05, 20, 64));
    for (const auto& s : curve.samples) EXPECT_NEAR(s.dp, (1 + s.dx * s.dx) / (2 * s.dx), 1e-12 * s.dp);
}

TEST(PhaseSpace, EgupBothCorrectionsAtUnitScaleIsInfeasible) {
    const auto curve = egup_bound(1, 1, 1, linear_samples(0.1, 10, 50));
    for (const auto& s : curve.samples) {
        EXPECT_FALSE(s.feasible);
        EXPECT_TRUE(std::isnan(s.dp));
    }
    EXPECT_FALSE(egup_minimum_length(1, 1, 1).has_value());
}

TEST(PhaseSpace, EgupMinimumLengthSeparatesFeasibleRows) {
    const double alpha = 0.01, eta = 0.01;
    const double lmin = *egup_minimum_length(alpha, eta, 1);
    EXPECT_NEAR(lmin, 0.1 / std::sqrt(1 - 1e-4), 1e-15);
    const auto curve = egup_bound(alpha, eta, 1, linear_samples(0.02, 1.0, 200));
    bool saw_infeasible = false, saw_feasible = false;
    for (const auto& s : curve.samples) {
        EXPECT_EQ(s.feasible, s.dx >= lmin) << s.dx;
        if (s.feasible) EXPECT_LE(egup_residual(curve, s), 1e-12);
        saw_infeasible |= !s.feasible;
        saw_feasible |= s.feasible;
    }
    EXPECT_TRUE(saw_infeasible && saw_feasible);
    EXPECT_THROW(egup_residual(curve, curve.samples.front()), DomainError);
}

TEST(PhaseSpace, EgupBoundNeverBelowHeisenberg) {
    for (double a : {0.0, 0.1, 1.0})
        for (double e : {0.0, 0.001, 0.01}) {
            const auto curve = egup_bound(a, e, 1, linear_samples(0.5, 5, 30));
            for (const auto& s : curve.samples)
                if (s.feasible) EXPECT_GE(s.dx * s.dp, 0.5 - 1e-12);
        }
}

TEST(PhaseSpace, EgupRejectsInvalidInput) {
    EXPECT_THROW(egup_bound(-1, 0, 1, {1.0}), DomainError);
    EXPECT_THROW(egup_bound(0, 0, 0, {1.0}), DomainError);
    EXPECT_THROW(egup_bound(0, 0, 1, {0.0}), DomainError);
    EXPECT_THROW(linear_samples(2, 1, 3), DomainError);
    EXPECT_THROW(linear_samples(0, 1, 0), DomainError);
}

TEST(PhaseSpace, LinearSamplesHitEndpoints) {
    const auto v = linear_samples(0.1, 10, 100);
    EXPECT_EQ(v.front(), 0.1);
    EXPECT_EQ(v.back(), 10.0);
    EXPECT_EQ(linear_samples(3, 3, 1), std::vector<double>{3.0});
}

TEST(PhaseSpace, HeuristicRelationsReduceToHeisenberg) {
    const auto k = derive_constants(RawConstants{});
    EXPECT_DOUBLE_EQ(gup_heuristic_dx(2.0, 0.0, k), k.raw.hbar / 4.0);
    EXPECT_DOUBLE_EQ(eup_heuristic_dp(2.0, 0.0, k), k.raw.hbar / 4.0);
    EXPECT_GT(gup_heuristic_dx(k.m_pl * k.raw.c, 1.0, k), k.raw.hbar / (2 * k.m_pl * k.raw.c));
    const auto p = egup_parameters(k);
    expect_rel(p.alpha, 4 * k.raw.G / (k.raw.hbar * std::pow(k.raw.c, 3)), 1e-15);
    expect_rel(p.eta, k.raw.Lambda / 6, 1e-15);
}

}  // namespace
}  // namespace smearlab
