#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "smearlab/spin_common.hpp"

namespace smearlab {

// One-particle smeared spin on C²(matter) ⊗ C²(geometry), index 2·m + g.
//   𝒮_i  = (ħ/2) σ_i ⊗ 𝕀
//   𝒮′_i = (β/2) 𝕀 ⊗ σ_i
//   𝕊_i  = (√(ħβ)/2) Σ_jk ε_ijk σ_j ⊗ σ_k
//   S_i  = 𝒮_i + 𝒮′_i + 𝕊_i
template <Scalar T>
struct SpinOperatorSet {
    SmearingParams<T> params;
    std::array<Matrix<T>, 3> S;
    Matrix<T> S2;
    Matrix<T> Splus;
    Matrix<T> Sminus;
    std::array<Matrix<T>, 3> sub_S;
    std::array<Matrix<T>, 3> sub_Sprime;
    std::array<Matrix<T>, 3> sub_Scross;
};

// The three subcomponent families for raw constants. Exposed separately so the
// ħ → 0 substitution can reuse it without a valid SmearingParams.
template <Scalar T>
struct Subcomponents {
    std::array<Matrix<T>, 3> matter;
    std::array<Matrix<T>, 3> geometry;
    std::array<Matrix<T>, 3> cross;
};

template <Scalar T>
Subcomponents<T> spin_subcomponents(const real_t<T>& hbar, const real_t<T>& beta, const real_t<T>& sqrt_hbar_beta);

template <Scalar T>
SpinOperatorSet<T> build_one_particle(const SmearingParams<T>& params);

// The closed-form matrices for S_x, S_y, S_z and S± written entry by entry.
// Kept separate from the tensor construction so the two can be compared.
template <Scalar T>
struct PrintedOneParticle {
    std::array<Matrix<T>, 3> S;
    Matrix<T> Splus;
    Matrix<T> Sminus;
};

template <Scalar T>
PrintedOneParticle<T> printed_one_particle(const SmearingParams<T>& params);

// Constructed operators against the closed-form matrices, Hermiticity,
// tracelessness and the Casimir value of S².
template <Scalar T>
ResidualReport verify_golden_fixtures(const SpinOperatorSet<T>& ops, Tolerance tol = tolerance_for<T>());

// Subcomponent Lie and Clifford relations plus the rescaled algebra of S_i.
template <Scalar T>
ResidualReport verify_subalgebras(const SpinOperatorSet<T>& ops, Tolerance tol = tolerance_for<T>());

template <Scalar T>
struct QubitBasis {
    Axis axis;
    BasisVector<T> up;
    BasisVector<T> down;
    BasisVector<T> up_prime;
    BasisVector<T> down_prime;

    std::array<BasisVector<T>, 4> members() const { return {up, down, up_prime, down_prime}; }
};

// The closed-form eigenvectors along an axis, eigenvalues ±(ħ+β)/2.
template <Scalar T>
QubitBasis<T> eigenbasis(const SpinOperatorSet<T>& ops, Axis axis);

// All twelve eigen residuals against S_i and S², claimed norms, the z-basis
// re-expressions of the x and y vectors, z-basis orthonormality and the
// degeneracy of primed and unprimed partners.
template <Scalar T>
ResidualReport verify_eigenbases(const SpinOperatorSet<T>& ops, Tolerance tol = tolerance_for<T>());

// Normalized overlaps ⟨⟨a|b⟩⟩ over (up, down, up′, down′).
template <Scalar T>
using BraketTable = std::array<std::array<T, 4>, 4>;

template <Scalar T>
BraketTable<T> braket_table(const QubitBasis<T>& basis);

// |table − 𝕀|_max as a residual (exact squared moduli before conversion).
template <Scalar T>
double braket_deviation(const BraketTable<T>& table);

// (𝕀 ± Σ_i)/2 with Σ_i = 2 S_i/(ħ+β); projector onto the twofold
// eigenspace of S_i for the eigenvalue ±(ħ+β)/2.
template <Scalar T>
Matrix<T> eigenspace_projector(const SpinOperatorSet<T>& ops, Axis axis, Sign sign);

template <Scalar T>
struct MeasurementRecord {
    Axis axis;
    Sign sign;
    real_t<T> eigenvalue;
    real_t<T> probability;
    // Lüders projection Πψ before renormalization; ‖projected‖² = probability.
    Ket<T> projected;
    std::size_t subspace_dim = 2;

    // Πψ/‖Πψ‖. The exact backend throws NotRepresentableError if ‖Πψ‖ is
    // irrational.
    Ket<T> post_state() const {
        if (!(probability > 0)) throw DomainError("outcome has probability zero");
        real_t<T> n = ScalarTraits<T>::sqrt(probability);
        return T(real_t<T>(real_t<T>(1) / n)) * projected;
    }
};

// 64-bit Mersenne Twister (std::mt19937_64, fixed by the standard) seeded with
// the given value. Uniform draws take the top 53 bits: u = (x >> 11)·2⁻⁵³.
class MeasurementRng {
public:
    explicit MeasurementRng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

// With no seed both outcomes are enumerated; with a seed one outcome is drawn.
template <Scalar T>
std::vector<MeasurementRecord<T>> measure(const Ket<T>& state, const SpinOperatorSet<T>& ops, Axis axis,
                                          std::optional<std::uint64_t> seed = std::nullopt);

// One sampled outcome using an existing generator (for Monte Carlo loops).
template <Scalar T>
MeasurementRecord<T> measure_sampled(const Ket<T>& state, const SpinOperatorSet<T>& ops, Axis axis,
                                     MeasurementRng& rng);

template <Scalar T>
struct ConditionalProbability {
    real_t<T> probability;
    bool same_axis = false;
};

// Probability of `second_sign` along `second_axis` for the post-measurement
// state α|s_j⟩ + α′|s′_j⟩ of the first measurement (renormalized when the
// two closed-form vectors are not orthogonal).
template <Scalar T>
ConditionalProbability<T> conditional_probability(const SpinOperatorSet<T>& ops, Axis first_axis, Sign first_sign,
                                                  Axis second_axis, Sign second_sign, const T& alpha,
                                                  const T& alpha_prime);

// S± acting on the z-basis: four flips with coefficients √(1+δ)(ħ ± i√(ħβ))
// and the four annihilations.
template <Scalar T>
ResidualReport spin_flip_check(const SpinOperatorSet<T>& ops, const QubitBasis<T>& z_basis,
                               Tolerance tol = tolerance_for<T>());

// Variance bookkeeping for one axis. All covariance entries are symmetric
// sums cov(A,B) + cov(B,A), which are real.
struct AxisUncertainty {
    double delta_S = 0;
    double variance_direct = 0;
    double var_matter = 0;
    double var_geometry = 0;
    double var_cross = 0;
    double cov_matter_cross = 0;
    double cov_geometry_cross = 0;
    // cov(𝒮,𝒮′) + cov(𝒮′,𝒮): needed for the full decomposition, absent from
    // the shorter textbook form.
    double cov_matter_geometry = 0;
    double sum_without_matter_geometry = 0;
    double sum_full = 0;
    double residual_full = 0;
    double residual_without_matter_geometry = 0;
};

struct RobertsonCheck {
    Axis a;
    Axis b;
    double product = 0;  // ΔS_a ΔS_b
    double bound = 0;    // ((ħ+β)/2)|⟨S_c⟩|
    bool satisfied = false;
};

struct UncertaintyReport {
    std::array<AxisUncertainty, 3> axes;
    std::array<RobertsonCheck, 3> robertson;
    bool robertson_satisfied = false;
    double max_residual_full = 0;
    double max_matter_geometry_cov = 0;
};

UncertaintyReport gur_report(const Ket<Complex>& state, const SpinOperatorSet<Complex>& ops);

}  // namespace smearlab
