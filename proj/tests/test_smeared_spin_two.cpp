#include <gtest/gtest.h>

#include <algorithm>

#include "smearlab/smeared_spin_two.hpp"
#include "test_util.hpp"

namespace smearlab {
namespace {

using test::CR;
using test::cq;
using test::q;

TwoParticleOperators<CR> exact_pair(const Rational& d) {
    return build_two_particle(SmearingParams<CR>::from_delta(d));
}
TwoParticleOperators<Complex> float_pair(double d) {
    return build_two_particle(SmearingParams<Complex>::from_delta(d));
}

TEST(SmearedSpinTwo, CasimirTraceMatchesSpectrum) {
    // Twelve states at 2(ħ+β)² and four at 0: at δ = 1/4 the trace is 12·25/8.
    const auto ops = exact_pair(q(1, 4));
    EXPECT_EQ(trace(ops.S2), CR(q(75, 2)));
    EXPECT_EQ(trace(ops.S[2]), CR(0));
    // Casimir cubic: S²(S² − 2(ħ+β)²) = 0.
    const CR level(q(25, 8));
    EXPECT_EQ(ops.S2 * (ops.S2 - level * Matrix<CR>::identity(16)), Matrix<CR>(16, 16));
}

TEST(SmearedSpinTwo, SzSpectrumIsZeroAndPlusMinusTotal) {
    const auto ops = exact_pair(q(1, 4));
    const CR t(q(5, 4));
    const auto id = Matrix<CR>::identity(16);
    EXPECT_EQ(ops.S[2] * (ops.S[2] - t * id) * (ops.S[2] + t * id), Matrix<CR>(16, 16));
}

TEST(SmearedSpinTwo, OperatorSuitePassesExactly) {
    for (const Rational& d : {q(0), q(1, 4), q(1), q(9, 16)}) {
        const auto rep = verify_two_particle_operators(exact_pair(d));
        EXPECT_TRUE(rep.all_pass()) << d.get_str();
        EXPECT_EQ(rep.max_residual(), 0.0);
    }
}

TEST(SmearedSpinTwo, OperatorSuitePassesInFloat) {
    for (double d : {0.0, 1e-6, 0.25, 1.0}) EXPECT_TRUE(verify_two_particle_operators(float_pair(d)).all_pass()) << d;
}

TEST(SmearedSpinTwo, EigenfamiliesAlongEveryAxis) {
    const auto ops = exact_pair(q(1, 4));
    for (Axis a : kAxes) {
        const auto fam = eigenfamilies_along(ops, a);
        const auto rep = verify_eigenfamilies(ops, fam);
        EXPECT_TRUE(rep.all_pass()) << axis_name(a);
        EXPECT_EQ(rep.max_residual(), 0.0);
        for (Family f : kFamilies)
            for (const auto& m : fam[f]) EXPECT_EQ(pair_eigen_residual(ops, a, m), 0.0) << m.label;
    }
}

TEST(SmearedSpinTwo, FamilyEigenvalues) {
    const auto ops = exact_pair(q(1, 4));
    const auto fam = eigenfamilies(ops);
    const Rational t(5, 4), s2 = 2 * t * t;
    EXPECT_EQ(fam[Family::psi1][0].s_axis, t);
    EXPECT_EQ(fam[Family::psi2][3].s_axis, Rational(-t));
    EXPECT_EQ(fam[Family::psi3][1].s2, s2);
    EXPECT_EQ(fam[Family::phi][2].s2, 0);
}

TEST(SmearedSpinTwo, SixteenVectorsFormAnOrthonormalBasis) {
    const auto ops = float_pair(0.37);
    const auto fam = eigenfamilies(ops);
    std::vector<Ket<Complex>> all;
    for (Family f : kFamilies)
        for (const auto& m : fam[f]) all.push_back(m.normalized());
    ASSERT_EQ(all.size(), 16u);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) EXPECT_NEAR(std::abs(inner(all[i], all[j])), i == j ? 1.0 : 0.0, 1e-14);
}

TEST(SmearedSpinTwo, FlipsPassExactly) {
    for (const Rational& d : {q(0), q(1, 4), q(9, 16)}) {
        const auto rep = two_particle_flips(exact_pair(d));
        EXPECT_TRUE(rep.all_pass());
        EXPECT_EQ(rep.max_residual(), 0.0);
    }
}

TEST(SmearedSpinTwo, BellStatesPerAxis) {
    const auto ops = exact_pair(q(1, 4));
    for (Axis a : kAxes) {
        const auto rep = verify_bell_states(ops, a);
        EXPECT_TRUE(rep.all_pass()) << axis_name(a);
    }
}

TEST(SmearedSpinTwo, SzMapsPhiPlusToPhiMinus) {
    const auto ops = float_pair(0.25);
    const auto bell = bell_states(ops, Axis::z);
    const auto phi_p = bell[2].normalized(), phi_m = bell[3].normalized();
    const Ket<Complex> image = ops.S[2] * phi_p;
    EXPECT_LE(norm_of(Ket<Complex>(image - Complex(1.25) * phi_m)), 1e-14);
}

TEST(SmearedSpinTwo, GeneralMixingCoefficients) {
    const auto ops = float_pair(0.25);
    const auto fam = eigenfamilies(ops);
    const std::array<Complex, 4> alpha{Complex(0.5), Complex(0, 0.5), Complex(-0.5), Complex(0.5)};
    for (Family f : kFamilies) {
        const auto st = physical_state(fam, f, alpha);
        EXPECT_LE(pair_eigen_residual(ops, Axis::z, st.vector), 1e-14);
        EXPECT_NEAR(norm2(st.vector.normalized()), 1.0, 1e-14);
    }
    EXPECT_THROW(physical_state(fam, Family::psi1, {Complex(1), Complex(1), Complex(0), Complex(0)}),
                 NormalizationError);
}

TEST(SmearedSpinTwo, ExactPhysicalStateNeedsRationalRatios) {
    const std::array<CR, 4> alpha{cq(3, 5, 0), cq(0, 1, 4, 5), CR(0), CR(0)};
    // 1 + δ = 25/16 at δ = 9/16: ratios are squares.
    const auto ok = exact_pair(q(9, 16));
    const auto st = physical_state(eigenfamilies(ok), Family::psi1, alpha);
    EXPECT_EQ(pair_eigen_residual(ok, Axis::z, st.vector), 0.0);
    const auto bad = exact_pair(q(1, 4));
    EXPECT_THROW(physical_state(eigenfamilies(bad), Family::psi1, alpha), NotRepresentableError);
}

TEST(SmearedSpinTwo, PrintedCasimirTableIrregularities) {
    // Four entries of the closed-form S² table disagree with the construction;
    // every Hermitian-consistent entry agrees.
    const auto mism = pair_s2_fixture_mismatches(exact_pair(q(1, 4)));
    std::vector<std::pair<int, int>> where;
    for (const auto& m : mism) where.emplace_back(m.row, m.col);
    std::sort(where.begin(), where.end());
    const std::vector<std::pair<int, int>> expected{{3, 6}, {6, 12}, {9, 3}, {13, 7}};
    EXPECT_EQ(where, expected);
}

}  // namespace
}  // namespace smearlab
