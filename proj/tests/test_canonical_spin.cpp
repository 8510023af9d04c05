#include <gtest/gtest.h>

#include "smearlab/canonical_spin.hpp"
#include "test_util.hpp"

namespace smearlab {
namespace {

using test::CR;
using test::q;

TEST(CanonicalSpin, OperatorsAtUnitHbar) {
    const auto c = build_canonical<CR>();
    const CR half(q(1, 2));
    EXPECT_EQ(c.s[2], (Matrix<CR>{{half, CR(0)}, {CR(0), -half}}));
    EXPECT_EQ(c.s2, CR(q(3, 4)) * Matrix<CR>::identity(2));
    EXPECT_EQ(c.s_plus, (Matrix<CR>{{CR(0), CR(1)}, {CR(0), CR(0)}}));
    EXPECT_EQ(c.s_minus, dagger(c.s_plus));
}

TEST(CanonicalSpin, HbarScalesCasimir) {
    const auto c = build_canonical<CR>(q(3));
    EXPECT_EQ(c.s2, CR(q(27, 4)) * Matrix<CR>::identity(2));
    EXPECT_EQ(c.s2_total(0, 0), CR(q(18)));  // |↑↑⟩ is a triplet: s(s+1)ħ² = 2·9
}

TEST(CanonicalSpin, VerificationPassesInBothBackends) {
    const auto f = verify_canonical(canonical_two_particle<Complex>());
    EXPECT_TRUE(f.all_pass()) << f.failures();
    const auto e = verify_canonical(canonical_two_particle<CR>());
    EXPECT_TRUE(e.all_pass()) << e.failures();
    EXPECT_EQ(e.max_residual(), 0.0);
}

TEST(CanonicalSpin, EigenbasesPerAxis) {
    const auto c = build_canonical<Complex>();
    for (Axis a : kAxes) {
        const auto basis = canonical_eigenbasis<Complex>(a);
        const auto up = basis[0].normalized(), down = basis[1].normalized();
        EXPECT_LE(eigen_residual(c.s[index_of(a)], up, Complex(0.5)), 1e-15);
        EXPECT_LE(eigen_residual(c.s[index_of(a)], down, Complex(-0.5)), 1e-15);
        EXPECT_LE(std::abs(inner(up, down)), 1e-15);
    }
}

TEST(CanonicalSpin, BellStatesAreMaximallyEntangledAndOrthonormal) {
    for (Axis a : kAxes) {
        const auto bell = canonical_bell_states<Complex>(a);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const Complex ip = inner(bell[i].normalized(), bell[j].normalized());
                EXPECT_NEAR(std::abs(ip), i == j ? 1.0 : 0.0, 1e-15);
            }
        // Each Bell state has |amplitude|² = 1/2 on exactly two product states
        // of the axis basis, so the reduced state is maximally mixed.
        for (const auto& b : bell) {
            const auto v = b.normalized();
            const Complex rho00 = v[0] * std::conj(v[0]) + v[1] * std::conj(v[1]);
            const Complex rho01 = v[0] * std::conj(v[2]) + v[1] * std::conj(v[3]);
            EXPECT_NEAR(rho00.real(), 0.5, 1e-15);
            EXPECT_NEAR(std::abs(rho01), 0.0, 1e-15);
        }
    }
}

TEST(CanonicalSpin, SingletHasZeroTotalSpin) {
    const auto t = canonical_two_particle<CR>();
    EXPECT_EQ(t.ops.s2_total * t.singlet.raw, Ket<CR>(4));
    for (const auto& s : t.ops.s_total) EXPECT_EQ(s * t.singlet.raw, Ket<CR>(4));
}

TEST(CanonicalSpin, EmbeddingActsOnMatterOnly) {
    const auto s = pauli_matrices<CR>();
    EXPECT_EQ(embed_matter(s[2]), kron(s[2], Matrix<CR>::identity(2)));
    const auto big = embed_matter_pair(kron(s[2], Matrix<CR>::identity(2)));
    EXPECT_EQ(big.rows(), 16u);
    // Matter A up, geometry A down, matter B up, geometry B up: 8·0 + 4·1 + 2·0 + 0 = 4.
    const Ket<CR> k = embed_matter_pair_state(Ket<CR>{CR(1), CR(0), CR(0), CR(0)}, 1, 0);
    EXPECT_EQ(k[4], CR(1));
    EXPECT_EQ(big * k, k);
}

}  // namespace
}  // namespace smearlab
