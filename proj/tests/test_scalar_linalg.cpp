#include <gtest/gtest.h>

#include "smearlab/linalg.hpp"
#include "smearlab/spin_common.hpp"
#include "test_util.hpp"

namespace smearlab {
namespace {

using test::CR;
using test::cq;
using test::q;

TEST(ComplexRational, ArithmeticIsExact) {
    const CR a = cq(1, 3, 1, 2);
    const CR b = cq(-2, 5, 3, 4);
    // (1/3 + i/2)(−2/5 + 3i/4) = −2/15 − 3/8 + i(1/4 − 1/5)
    EXPECT_EQ(a * b, cq(-61, 120, 1, 20));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a - a, CR(0));
    EXPECT_EQ(conj(a), cq(1, 3, -1, 2));
    EXPECT_EQ(norm(a), q(13, 36));
    EXPECT_THROW(a / CR(0), DomainError);
}

TEST(ComplexRational, ParseRationalLiterals) {
    EXPECT_EQ(parse_rational("3"), q(3));
    EXPECT_EQ(parse_rational("-1/4"), q(-1, 4));
    EXPECT_EQ(parse_rational("0.25"), q(1, 4));
    EXPECT_EQ(parse_rational("1e-6"), q(1, 1000000));
    EXPECT_EQ(parse_rational("2.5E+3"), q(2500));
    EXPECT_THROW(parse_rational("abc"), DomainError);
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(ComplexRational, ExactSquareRoots) {
    EXPECT_EQ(exact_sqrt(q(9, 16)), q(3, 4));
    EXPECT_EQ(exact_sqrt(q(0)), q(0));
    EXPECT_TRUE(is_rational_square(q(1, 4)));
    EXPECT_FALSE(is_rational_square(q(3, 10)));
    EXPECT_THROW(exact_sqrt(q(4, 5)), NotRepresentableError);
    EXPECT_THROW(exact_sqrt(q(-1)), DomainError);
}

TEST(Linalg, KroneckerPutsRowBlockOnFirstFactor) {
    const auto s = pauli_matrices<Complex>();
    const auto id = Matrix<Complex>::identity(2);
    const auto xi = kron(s[0], id);
    EXPECT_EQ(xi(0, 2), Complex(1));
    EXPECT_EQ(xi(0, 1), Complex(0));
    const auto ix = kron(id, s[0]);
    EXPECT_EQ(ix(0, 1), Complex(1));
    const Ket<Complex> up{1, 0}, down{0, 1};
    EXPECT_EQ(kron(up, down), (Ket<Complex>{0, 1, 0, 0}));
}

TEST(Linalg, PauliAlgebraExact) {
    const auto s = pauli_matrices<CR>();
    const CR i = imag_unit<CR>();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Matrix<CR> expected = a == b ? Matrix<CR>::identity(2) : Matrix<CR>(2, 2);
            const int c = a == b ? -1 : third_axis(a, b);
            if (c >= 0) expected += CR(levi_civita(a, b, c)) * i * s[c];
            EXPECT_EQ(s[a] * s[b], expected) << a << b;
        }
}

TEST(Linalg, DeterminantMatchesCofactorOracleFloat) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto m = test::random_matrix(rng, 4);
        const Complex d = det(m), oracle = test::cofactor_det(m);
        EXPECT_LE(std::abs(d - oracle), 1e-12 * std::max(1.0, std::abs(oracle)));
    }
}

TEST(Linalg, DeterminantMatchesCofactorOracleExact) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto m = test::random_rational_matrix(rng, 4);
        EXPECT_EQ(det(m), test::cofactor_det(m));
    }
    Matrix<CR> singular(3, 3);
    singular(0, 0) = CR(1);
    EXPECT_EQ(det(singular), CR(0));
}

TEST(Linalg, CommutatorAndTraceProperties) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const auto a = test::random_matrix(rng, 4), b = test::random_matrix(rng, 4), c = test::random_matrix(rng, 4);
        EXPECT_LE(max_abs(Matrix<Complex>(commutator(a, b) + commutator(b, a))), 1e-15);
        EXPECT_LE(std::abs(trace(Matrix<Complex>(a * b)) - trace(Matrix<Complex>(b * a))), 1e-13);
        // Jacobi identity.
        const auto j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
        EXPECT_LE(max_abs(j), 1e-13);
        EXPECT_EQ(dagger(dagger(a)), a);
        EXPECT_LE(max_abs_diff(dagger(Matrix<Complex>(a * b)), Matrix<Complex>(dagger(b) * dagger(a))), 1e-15);
    }
}

TEST(Linalg, ShapeMismatchThrows) {
    Matrix<Complex> a(2, 2), b(3, 3);
    EXPECT_THROW(a + b, DimensionError);
    EXPECT_THROW(a * b, DimensionError);
    Ket<Complex> k(3);
    EXPECT_THROW(a * k, DimensionError);
}

TEST(Linalg, ExpectationNeedsNormalizedState) {
    const auto s = pauli_matrices<Complex>();
    EXPECT_THROW(expectation(s[2], Ket<Complex>{1, 1}), NormalizationError);
    const Ket<Complex> up{1, 0};
    EXPECT_EQ(expectation(s[2], up), Complex(1));
    EXPECT_EQ(variance(s[2], up), 0.0);
    EXPECT_DOUBLE_EQ(variance(s[0], up), 1.0);
}

TEST(Linalg, VarianceIsNonnegativeForRandomStates) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    const auto s = pauli_matrices<Complex>();
    for (int t = 0; t < 100; ++t) {
        Ket<Complex> k{Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
        k = Complex(1.0 / norm_of(k)) * k;
        for (const auto& m : s) EXPECT_GE(variance(m, k), -1e-15);
    }
}

TEST(Linalg, ExactMaxAbsIsZeroOnlyForZero) {
    Matrix<CR> a = Matrix<CR>::identity(2);
    EXPECT_EQ(max_abs_diff(a, a), 0.0);
    EXPECT_EQ(max_abs(a), 1.0);
}

}  // namespace
}  // namespace smearlab
