#include <gtest/gtest.h>

#include <numbers>

#include "smearlab/su2_rep.hpp"
#include "test_util.hpp"

namespace smearlab {
namespace {

using test::CR;
using test::cq;
using test::q;

// u0 𝕀 + i u·σ on C², the ordinary SU(2) matrix.
Matrix<Complex> su2_2x2(const Quaternion<Complex>& u) {
    const Complex i(0, 1);
    return {{Complex(u.u0) + i * u.u3, i * u.u1 + u.u2}, {i * u.u1 - u.u2, Complex(u.u0) - i * u.u3}};
}

TEST(Su2Rep, GroupElementMatchesIndependentOracle) {
    // u = (1/2, 1/2, 1/2, 1/2) at δ = 1/4, computed from Σ_i = 2S_i/(ħ+β).
    const auto s = build_sigma<CR>(q(1, 4));
    const Quaternion<CR> u{q(1, 2), q(1, 2), q(1, 2), q(1, 2)};
    const auto m = group_element(u, s);
    EXPECT_EQ(m(0, 0), cq(1, 2, 1, 2));
    EXPECT_EQ(m(0, 1), cq(-1, 10, 3, 10));
    EXPECT_EQ(m(0, 2), cq(3, 5, 1, 5));
    EXPECT_EQ(m(0, 3), CR(0));
    EXPECT_EQ(m(3, 1), cq(-1, 5, 3, 5));
    EXPECT_EQ(m(3, 2), cq(-3, 10, -1, 10));
    EXPECT_EQ(m(3, 3), cq(1, 2, -1, 2));
    EXPECT_EQ(det(m), CR(1));
    EXPECT_EQ(trace(m), CR(2));
}

TEST(Su2Rep, ClosedFormEqualsConstructionExact) {
    for (const Rational& d : {q(0), q(1, 4), q(1), q(9, 16)}) {
        const auto s = build_sigma<CR>(d);
        const Rational sd = exact_sqrt(d);
        for (const auto& u : {rational_unit_quaternion(q(1, 2), q(1, 3), q(-2, 5)),
                              rational_unit_quaternion(q(3), q(0), q(1, 7)), Quaternion<CR>::identity()}) {
            EXPECT_EQ(printed_group_element(u, d, sd), quaternion_matrix(u, s));
        }
    }
}

TEST(Su2Rep, FundamentalRelationExact) {
    for (const Rational& d : {q(0), q(1, 4), q(1), q(9, 16), q(49, 9)})
        EXPECT_EQ(fundamental_relation_check(build_sigma<CR>(d)), 0.0);
}

TEST(Su2Rep, RationalUnitQuaternionsAreExactlyUnit) {
    for (long a = -3; a <= 3; ++a)
        for (long b = 1; b <= 4; ++b) EXPECT_EQ(rational_unit_quaternion(q(a, b), q(b, 5), q(-1, a * a + 1)).norm2(), 1);
}

TEST(Su2Rep, ComposeMatchesTwoByTwoProduct) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto u = random_unit_quaternion(seed), v = random_unit_quaternion(seed + 1000);
        const auto lhs = su2_2x2(u) * su2_2x2(v);
        EXPECT_LE(max_abs_diff(lhs, su2_2x2(compose(u, v))), 1e-14);
    }
}

TEST(Su2Rep, RepresentationPropertiesOnRandomQuaternions) {
    for (double d : {0.0, 0.25, 1.0, 2.3}) {
        const auto s = build_sigma<Complex>(d);
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            const auto u = random_unit_quaternion(seed);
            const auto m = group_element(u, s);
            EXPECT_LE(std::abs(det(m) - Complex(1)), 1e-10);
            EXPECT_LE(std::abs(trace(m) - Complex(4 * u.u0)), 1e-12);
            EXPECT_LE(max_abs_diff(Matrix<Complex>(dagger(m) * m), Matrix<Complex>::identity(4)), 1e-12);
            EXPECT_LE(closure_check(u, random_unit_quaternion(seed + 500), s), 1e-10);
        }
    }
}

TEST(Su2Rep, DeterminantOffTheUnitSphere) {
    const auto s = build_sigma<CR>(q(1, 4));
    const Quaternion<CR> u{q(1), q(1), q(0), q(1, 2)};
    EXPECT_EQ(det(quaternion_matrix(u, s)), CR(Rational(u.norm2() * u.norm2())));
    EXPECT_THROW(group_element(u, s), NormalizationError);
}

TEST(Su2Rep, SigmaFromSpinAgrees) {
    const auto ops = build_one_particle(SmearingParams<CR>::from_delta(q(1, 4)));
    const auto a = sigma_from_spin(ops), b = build_sigma<CR>(q(1, 4));
    for (int i = 0; i < 3; ++i) EXPECT_EQ(a.sigma[i], b.sigma[i]);
}

TEST(Su2Rep, LimitsOfTheGenerators) {
    const auto pauli = pauli_matrices<CR>();
    const auto id = Matrix<CR>::identity(2);
    const auto zero = build_sigma<CR>(q(0));
    const auto geometric = build_sigma_geometric_limit<CR>();
    const auto free = sigma_without_interaction<CR>(q(1));
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(zero.sigma[i], kron(pauli[i], id));
        EXPECT_EQ(geometric.sigma[i], kron(id, pauli[i]));
        EXPECT_EQ(free[i], CR(q(1, 2)) * (kron(pauli[i], id) + kron(id, pauli[i])));
    }
}

TEST(Su2Rep, HalfTurnAboutZAtCanonicalLimit) {
    const auto s = build_sigma<Complex>(0.0);
    const auto m = group_element(AxisAngle{{0, 0, 1}, std::numbers::pi}, s);
    const Complex i(0, 1);
    for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(m(k, k) - (k < 2 ? -i : i)), 1e-15);
}

TEST(Su2Rep, AxisAngleAgreesWithQuaternion) {
    const auto s = build_sigma<Complex>(0.25);
    const AxisAngle a{{0.6, 0.0, 0.8}, 1.1};
    EXPECT_LE(max_abs_diff(group_element(a, s), group_element(to_quaternion(a), s)), 1e-15);
    EXPECT_THROW(to_quaternion(AxisAngle{{1, 1, 0}, 1.0}), DomainError);
    EXPECT_THROW(to_quaternion(AxisAngle{{0, 0, 1}, 7.0}), DomainError);
}

TEST(Su2Rep, HamiltonProductBasics) {
    using Q = Quaternion<CR>;
    const Q i{q(0), q(1), q(0), q(0)}, j{q(0), q(0), q(1), q(0)}, k{q(0), q(0), q(0), q(1)};
    EXPECT_EQ(hamilton(i, j), k);
    EXPECT_EQ(hamilton(j, i), (Q{q(0), q(0), q(0), q(-1)}));
    EXPECT_EQ(compose(i, j), hamilton(j, i));
    const auto u = rational_unit_quaternion(q(1, 2), q(1, 3), q(1, 4));
    EXPECT_EQ(hamilton(u, conjugate(u)), Q::identity());
}

TEST(Su2Rep, RandomQuaternionsAreSeeded) {
    EXPECT_EQ(random_unit_quaternion(5), random_unit_quaternion(5));
    EXPECT_FALSE(random_unit_quaternion(5) == random_unit_quaternion(6));
    EXPECT_NEAR(random_unit_quaternion(5).norm2(), 1.0, 1e-15);
}

TEST(Su2Rep, InvalidDeltaRejected) {
    EXPECT_THROW(build_sigma<Complex>(-1.0), DomainError);
    EXPECT_THROW(build_sigma<CR>(q(1, 2)), NotRepresentableError);
}

TEST(Su2Rep, SuitePasses) {
    EXPECT_TRUE(verify_su2(build_sigma<Complex>(0.25)).all_pass());
    const auto e = verify_su2(build_sigma<CR>(q(1, 4)));
    EXPECT_TRUE(e.all_pass());
    EXPECT_EQ(e.max_residual(), 0.0);
}

}  // namespace
}  // namespace smearlab
