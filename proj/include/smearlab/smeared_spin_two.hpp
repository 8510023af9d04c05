#pragma once

#include <array>
#include <string>
#include <vector>

#include "smearlab/smeared_spin_one.hpp"

namespace smearlab {

// Two smeared particles on (C²⊗C²)_A ⊗ (C²⊗C²)_B, index 4·A + B.
template <Scalar T>
struct TwoParticleOperators {
    SpinOperatorSet<T> one;  // the single-particle set both factors share
    std::array<Matrix<T>, 3> S_A;
    std::array<Matrix<T>, 3> S_B;
    std::array<Matrix<T>, 3> S;
    Matrix<T> S2;
    Matrix<T> Splus;
    Matrix<T> Sminus;

    const SmearingParams<T>& params() const { return one.params; }
};

template <Scalar T>
TwoParticleOperators<T> build_two_particle(const SmearingParams<T>& params);

enum class Family { psi1 = 0, psi2 = 1, psi3 = 2, phi = 3 };

inline constexpr std::array<Family, 4> kFamilies{Family::psi1, Family::psi2, Family::psi3, Family::phi};

std::string_view family_name(Family f);

// Sixteen simultaneous eigenvectors of S_i and S², four per family
// (members a, b, c, d), with (S_i, S²) eigenvalues
//   Ψ1: (+(ħ+β), 2(ħ+β)²)   Ψ2: (−(ħ+β), 2(ħ+β)²)
//   Ψ3: (0, 2(ħ+β)²)         Φ: (0, 0).
template <Scalar T>
struct EigenFamilies {
    Axis axis = Axis::z;
    std::array<std::array<PairVector<T>, 4>, 4> members;

    const std::array<PairVector<T>, 4>& operator[](Family f) const { return members[static_cast<int>(f)]; }
};

// The z-axis families from their closed-form amplitude lists.
template <Scalar T>
EigenFamilies<T> eigenfamilies(const TwoParticleOperators<T>& ops);

// (𝔘⊗𝔘) with 𝔘 the quarter-turn taking S_z to S_axis: 𝔘 = (𝕀 − iΣ_y)/√2 for
// x and (𝕀 + iΣ_x)/√2 for y. The pair rotation is rational. Identity for z.
template <Scalar T>
Matrix<T> pair_rotation_to(const TwoParticleOperators<T>& ops, Axis axis);

// Families along any axis: the z families carried over by pair_rotation_to.
template <Scalar T>
EigenFamilies<T> eigenfamilies_along(const TwoParticleOperators<T>& ops, Axis axis);

template <Scalar T>
struct PhysicalState {
    Family family;
    std::array<T, 4> coefficients;
    PairVector<T> vector;  // raw amplitudes with claimed norm²
};

// Σ_k α_k |member_k⟩ with Σ|α_k|² = 1. The raw vector is rescaled so only
// ratios of member normalizers enter; the exact backend throws
// NotRepresentableError when such a ratio has no rational square root.
template <Scalar T>
PhysicalState<T> physical_state(const EigenFamilies<T>& families, Family family, const std::array<T, 4>& coefficients);

// Mixing coefficients for the four families, in family order.
template <Scalar T>
using FamilyCoefficients = std::array<std::array<T, 4>, 4>;

// Every family reduced to its "a" member.
template <Scalar T>
FamilyCoefficients<T> default_family_coefficients();

// {Ψ+, Ψ−, Φ+, Φ−} along the axis: Ψ+ = Ψ3, Ψ− = Φ, Φ± = (Ψ1 ± Ψ2)/√2.
template <Scalar T>
std::array<PairVector<T>, 4> bell_states(const TwoParticleOperators<T>& ops, Axis axis,
                                         const FamilyCoefficients<T>& coefficients = default_family_coefficients<T>());

// Per-particle and total algebras, [S_Ai, S_Bj] = 0, [S_i, S²] = 0, the
// assembled S², ladder relations, and the closed-form 16x16 matrices.
template <Scalar T>
ResidualReport verify_two_particle_operators(const TwoParticleOperators<T>& ops, Tolerance tol = tolerance_for<T>());

// Eigen residuals against (S_i, S²), claimed norms, orthonormality of all 16,
// the product forms over one-particle kets, and the ladder annihilations.
template <Scalar T>
ResidualReport verify_eigenfamilies(const TwoParticleOperators<T>& ops, const EigenFamilies<T>& families,
                                    Tolerance tol = tolerance_for<T>());

// The eight flips of product states under S± plus annihilation of
// span{Ψ1, Φ} by S+ and span{Ψ2, Φ} by S−.
template <Scalar T>
ResidualReport two_particle_flips(const TwoParticleOperators<T>& ops, Tolerance tol = tolerance_for<T>());

// Eigen checks of a physical state or Bell state against (S_axis, S²).
template <Scalar T>
double pair_eigen_residual(const TwoParticleOperators<T>& ops, Axis axis, const PairVector<T>& v);

template <Scalar T>
ResidualReport verify_bell_states(const TwoParticleOperators<T>& ops, Axis axis,
                                  const FamilyCoefficients<T>& coefficients = default_family_coefficients<T>(),
                                  Tolerance tol = tolerance_for<T>());

// Entries where the closed-form S² table disagrees with the construction.
struct FixtureMismatch {
    int row;
    int col;
    double printed_re, printed_im;
    double constructed_re, constructed_im;
};

template <Scalar T>
std::vector<FixtureMismatch> pair_s2_fixture_mismatches(const TwoParticleOperators<T>& ops);

}  // namespace smearlab
