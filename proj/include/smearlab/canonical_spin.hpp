#pragma once

#include <array>

#include "smearlab/spin_common.hpp"

namespace smearlab {

// Ordinary spin-1/2 operators: the β → 0 reference for every smeared object.
template <Scalar T>
struct CanonicalOperators {
    real_t<T> hbar;
    std::array<Matrix<T>, 3> pauli;
    std::array<Matrix<T>, 3> s;  // (ħ/2)σ_i
    Matrix<T> s2;
    Matrix<T> s_plus;
    Matrix<T> s_minus;
    // Two particles on C²⊗C², index 2·A + B.
    std::array<Matrix<T>, 3> s_a;
    std::array<Matrix<T>, 3> s_b;
    std::array<Matrix<T>, 3> s_total;
    Matrix<T> s2_total;
    Matrix<T> s_plus_total;
    Matrix<T> s_minus_total;
};

template <Scalar T>
CanonicalOperators<T> build_canonical(const real_t<T>& hbar = real_t<T>(1));

// {up, down} along the axis with eigenvalues ±ħ/2.
template <Scalar T>
std::array<BasisVector<T>, 2> canonical_eigenbasis(Axis axis, const real_t<T>& hbar = real_t<T>(1));

template <Scalar T>
struct CanonicalTwoParticle {
    CanonicalOperators<T> ops;
    std::array<PairVector<T>, 3> triplet;  // Ψ1 = ↑↑, Ψ2 = ↓↓, Ψ3 = (↑↓+↓↑)/√2
    PairVector<T> singlet;                 // Φ = (0,−1,1,0)/√2
    // Ψ+, Ψ−, Φ+, Φ− along z.
    std::array<PairVector<T>, 4> bell;
};

template <Scalar T>
CanonicalTwoParticle<T> canonical_two_particle(const real_t<T>& hbar = real_t<T>(1));

// Bell states along any axis from the one-particle eigenbasis:
// Ψ± = (↑↓ ± ↓↑)/√2, Φ± = (↑↑ ± ↓↓)/√2.
template <Scalar T>
std::array<PairVector<T>, 4> canonical_bell_states(Axis axis, const real_t<T>& hbar = real_t<T>(1));

// Lie and Clifford relations, Casimir values, triplet/singlet eigen checks and
// the two-particle flip table.
template <Scalar T>
ResidualReport verify_canonical(const CanonicalTwoParticle<T>& c, Tolerance tol = tolerance_for<T>());

// Lifts a one-particle matter operator to the smeared space as op ⊗ 𝕀.
template <Scalar T>
Matrix<T> embed_matter(const Matrix<T>& op);

// Lifts a two-particle matter operator (index 2·a + b) to the 16-dim smeared
// space, acting as the identity on both geometry factors.
template <Scalar T>
Matrix<T> embed_matter_pair(const Matrix<T>& op);

// Places a two-particle matter state into the 16-dim space with the geometry
// factors fixed to the given basis bits (0 = up, 1 = down).
template <Scalar T>
Ket<T> embed_matter_pair_state(const Ket<T>& matter, int geometry_a, int geometry_b);

}  // namespace smearlab
