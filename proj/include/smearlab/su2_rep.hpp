#pragma once

#include <array>
#include <cstdint>

#include "smearlab/smeared_spin_one.hpp"

namespace smearlab {

// Σ_i = (σ_i⊗𝕀 + δ 𝕀⊗σ_i + √δ ε_ijk σ_j⊗σ_k)/(1+δ) = (2/(ħ+β)) S_i.
template <Scalar T>
struct SigmaSet {
    real_t<T> delta;
    std::array<Matrix<T>, 3> sigma;
};

// Throws DomainError for δ < 0 (and NotRepresentableError for an exact δ
// without a rational square root).
template <Scalar T>
SigmaSet<T> build_sigma(const real_t<T>& delta);

// (2/(ħ+β)) S_i from an existing one-particle operator set.
template <Scalar T>
SigmaSet<T> sigma_from_spin(const SpinOperatorSet<T>& ops);

// The geometry-only generators 𝕀⊗σ_i, reached by substituting ħ → 0 and
// β → ħ in the subcomponent construction rather than by a limit in δ.
template <Scalar T>
SigmaSet<T> build_sigma_geometric_limit();

// (σ_i⊗𝕀 + δ 𝕀⊗σ_i)/(1+δ): the generators with the cross term dropped.
// At δ = 1 this is (σ_i⊗𝕀 + 𝕀⊗σ_i)/2.
template <Scalar T>
std::array<Matrix<T>, 3> sigma_without_interaction(const real_t<T>& delta);

// max over (i, j) of ‖Σ_iΣ_j − δ_ij 𝕀 − i ε_ijk Σ_k‖_max.
template <Scalar T>
double fundamental_relation_check(const SigmaSet<T>& s);

template <Scalar T>
struct Quaternion {
    real_t<T> u0;
    real_t<T> u1;
    real_t<T> u2;
    real_t<T> u3;

    real_t<T> norm2() const { return real_t<T>(u0 * u0 + u1 * u1 + u2 * u2 + u3 * u3); }
    static Quaternion identity() { return {real_t<T>(1), real_t<T>(0), real_t<T>(0), real_t<T>(0)}; }
};

template <Scalar T>
bool operator==(const Quaternion<T>& a, const Quaternion<T>& b) {
    return a.u0 == b.u0 && a.u1 == b.u1 && a.u2 == b.u2 && a.u3 == b.u3;
}

template <Scalar T>
Quaternion<T> conjugate(const Quaternion<T>& q) {
    return {q.u0, real_t<T>(-q.u1), real_t<T>(-q.u2), real_t<T>(-q.u3)};
}

// Hamilton's product (a0, a)(b0, b) = (a0 b0 − a·b, a0 b + b0 a + a×b).
template <Scalar T>
Quaternion<T> hamilton(const Quaternion<T>& a, const Quaternion<T>& b) {
    using R = real_t<T>;
    return {R(a.u0 * b.u0 - a.u1 * b.u1 - a.u2 * b.u2 - a.u3 * b.u3),
            R(a.u0 * b.u1 + b.u0 * a.u1 + a.u2 * b.u3 - a.u3 * b.u2),
            R(a.u0 * b.u2 + b.u0 * a.u2 + a.u3 * b.u1 - a.u1 * b.u3),
            R(a.u0 * b.u3 + b.u0 * a.u3 + a.u1 * b.u2 - a.u2 * b.u1)};
}

// Parameters w with 𝔘(u)𝔘(v) = 𝔘(w). Since 𝔘 carries +i u·Σ, the order
// is reversed relative to Hamilton's convention: w = v∘u.
template <Scalar T>
Quaternion<T> compose(const Quaternion<T>& u, const Quaternion<T>& v) {
    return hamilton(v, u);
}

// Rotation angle θ ∈ [0, 2π] about the unit axis n; u0 = cos(θ/2) and
// u_i = −sin(θ/2) n_i.
struct AxisAngle {
    std::array<double, 3> n{0.0, 0.0, 1.0};
    double theta = 0.0;
};

// Throws DomainError unless ‖n‖ = 1 within 1e-12 and θ ∈ [0, 2π].
Quaternion<Complex> to_quaternion(const AxisAngle& a);

// u0 𝕀 + i u·Σ without checking the unit constraint.
template <Scalar T>
Matrix<T> quaternion_matrix(const Quaternion<T>& q, const SigmaSet<T>& s);

// As quaternion_matrix, but throws NormalizationError unless Σu² = 1
// (exactly for the exact backend, within 1e-12 otherwise).
template <Scalar T>
Matrix<T> group_element(const Quaternion<T>& q, const SigmaSet<T>& s);

// cos(θ/2) 𝕀 − i sin(θ/2) n·Σ.
Matrix<Complex> group_element(const AxisAngle& a, const SigmaSet<Complex>& s);

// The 4x4 closed form of u0 𝕀 + i u·Σ written entry by entry.
template <Scalar T>
Matrix<T> printed_group_element(const Quaternion<T>& q, const real_t<T>& delta, const real_t<T>& sqrt_delta);

// ‖𝔘(u)𝔘(v) − 𝔘(compose(u, v))‖_max.
template <Scalar T>
double closure_check(const Quaternion<T>& u, const Quaternion<T>& v, const SigmaSet<T>& s);

// Exactly unit rational quaternion from a point of Q³ by inverse
// stereographic projection: (|x|² − 1, 2x)/(|x|² + 1).
Quaternion<ComplexRational> rational_unit_quaternion(Rational a, Rational b, Rational c);

// Uniform unit quaternion from normalized Gaussian draws.
Quaternion<Complex> random_unit_quaternion(std::uint64_t seed);

// Σ_i properties, fundamental relation, the closed-form group element,
// trace and determinant identities, unitarity and closure over sample
// quaternions, and agreement with (2/(ħ+β)) S_i.
template <Scalar T>
ResidualReport verify_su2(const SigmaSet<T>& s, Tolerance tol = tolerance_for<T>());

}  // namespace smearlab
