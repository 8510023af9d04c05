#pragma once

#include <array>
#include <string>
#include <string_view>

#include "smearlab/checks.hpp"
#include "smearlab/linalg.hpp"

namespace smearlab {

enum class Axis { x = 0, y = 1, z = 2 };
enum class Sign { up, down };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

inline constexpr int index_of(Axis a) { return static_cast<int>(a); }
inline constexpr int sign_value(Sign s) { return s == Sign::up ? 1 : -1; }

std::string_view axis_name(Axis a);
Axis parse_axis(std::string_view text);

// Levi-Civita symbol with ε_xyz = +1.
inline constexpr int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

// The axis completing (i, j) to a permutation of {0,1,2}; i ≠ j.
inline constexpr int third_axis(int i, int j) { return 3 - i - j; }

template <Scalar T>
std::array<Matrix<T>, 3> pauli_matrices() {
    const T i = imag_unit<T>();
    return {Matrix<T>{{T(0), T(1)}, {T(1), T(0)}},
            Matrix<T>{{T(0), T(0) - i}, {i, T(0)}},
            Matrix<T>{{T(1), T(0)}, {T(0), T(-1)}}};
}

template <Scalar T>
Tolerance tolerance_for(double value = kDefaultTolerance) {
    return {ScalarTraits<T>::exact, value};
}

// A fixture eigenvector kept as raw amplitudes plus the squared norm the
// closed form claims for them. Residual and overlap checks use the pair
// directly, which keeps them exact even when the normalizer is irrational.
template <Scalar T>
struct BasisVector {
    std::string label;
    Ket<T> raw;
    real_t<T> norm2;
    real_t<T> eigenvalue;

    // raw/√norm2; the exact backend throws NotRepresentableError when the
    // normalizer is irrational.
    Ket<T> normalized() const {
        real_t<T> n = ScalarTraits<T>::sqrt(norm2);
        return T(real_t<T>(real_t<T>(1) / n)) * raw;
    }
};

// Two-particle simultaneous eigenvector of S_z (or S_i) and S².
template <Scalar T>
struct PairVector {
    std::string label;
    Ket<T> raw;
    real_t<T> norm2;
    real_t<T> s_axis;
    real_t<T> s2;

    Ket<T> normalized() const {
        real_t<T> n = ScalarTraits<T>::sqrt(norm2);
        return T(real_t<T>(real_t<T>(1) / n)) * raw;
    }
};

// ‖op·v − λv‖ / √norm2, computed exactly before the final conversion.
template <Scalar T>
double scaled_eigen_residual(const Matrix<T>& op, const Ket<T>& raw, const real_t<T>& norm2, const T& lambda) {
    real_t<T> r2 = smearlab::norm2(Ket<T>(op * raw - lambda * raw));
    return std::sqrt(ScalarTraits<T>::to_double(real_t<T>(r2 / norm2)));
}

// Relative distance between a vector and its claimed multiple:
// ‖lhs − rhs‖ / √scale2.
template <Scalar T>
double scaled_distance(const Ket<T>& lhs, const Ket<T>& rhs, const real_t<T>& scale2) {
    real_t<T> r2 = smearlab::norm2(Ket<T>(lhs - rhs));
    return std::sqrt(ScalarTraits<T>::to_double(real_t<T>(r2 / scale2)));
}

// One term of a flip identity op|a⟩ = √(1+δ) Σ_t z_t |b_t⟩, with |b_t⟩ given by
// raw amplitudes and their claimed squared norm.
template <Scalar T>
struct FlipTarget {
    T z;
    Ket<T> raw;
    real_t<T> norm2;
};

struct FlipResiduals {
    double state = 0;        // ‖op|a⟩ − Σ ...‖ on normalized vectors
    double coefficient = 0;  // worst |⟨b_t|op|a⟩ − √(1+δ) z_t| over the targets
};

// Multiplying by √n_a turns the identity into
//   op·raw_a = Σ_t z_t √((1+δ)·n_a/n_t) raw_t,
// and ⟨b_t|op|a⟩·√(n_a n_t) = ⟨raw_t|op·raw_a⟩ should equal z_t √((1+δ) n_a n_t)
// when the targets are mutually orthogonal. Every radicand here is a rational
// square for the fixture vectors, so the exact backend stays exact.
template <Scalar T>
FlipResiduals flip_residuals(const Matrix<T>& op, const Ket<T>& raw_a, const real_t<T>& norm2_a,
                             const std::vector<FlipTarget<T>>& targets, const real_t<T>& one_plus_delta) {
    using R = real_t<T>;
    const Ket<T> image = op * raw_a;
    Ket<T> expected(raw_a.dim());
    FlipResiduals out;
    for (const auto& t : targets) {
        const R k = ScalarTraits<T>::sqrt(R(one_plus_delta * norm2_a / t.norm2));
        expected += (t.z * ScalarTraits<T>::make(k)) * t.raw;
        const R m = ScalarTraits<T>::sqrt(R(one_plus_delta * norm2_a * t.norm2));
        const T diff = inner(t.raw, image) - t.z * ScalarTraits<T>::make(m);
        const R d2 = R(ScalarTraits<T>::abs2(diff) / (norm2_a * t.norm2));
        out.coefficient = std::max(out.coefficient, std::sqrt(ScalarTraits<T>::to_double(d2)));
    }
    out.state = scaled_distance(image, expected, norm2_a);
    return out;
}

// Validated smearing constants. δ = β/ħ, and √(ħβ) = ħ√δ is carried
// explicitly because the exact backend cannot take arbitrary square roots.
template <Scalar T>
class SmearingParams {
public:
    using Real = real_t<T>;

    static SmearingParams from_delta(const Real& delta, const Real& hbar = Real(1)) {
        check(hbar, delta);
        return SmearingParams(hbar, Real(hbar * delta), delta, ScalarTraits<T>::sqrt(delta));
    }

    static SmearingParams from_hbar_beta(const Real& hbar, const Real& beta) {
        if (!(hbar > 0)) throw DomainError("hbar must be positive");
        Real delta = beta / hbar;
        check(hbar, delta);
        return SmearingParams(hbar, beta, delta, ScalarTraits<T>::sqrt(delta));
    }

    const Real& hbar() const { return hbar_; }
    const Real& beta() const { return beta_; }
    const Real& delta() const { return delta_; }
    const Real& sqrt_delta() const { return sqrt_delta_; }
    Real sqrt_hbar_beta() const { return Real(hbar_ * sqrt_delta_); }
    Real total() const { return Real(hbar_ + beta_); }

private:
    SmearingParams(Real hbar, Real beta, Real delta, Real sqrt_delta)
        : hbar_(std::move(hbar)), beta_(std::move(beta)), delta_(std::move(delta)), sqrt_delta_(std::move(sqrt_delta)) {}

    static void check(const Real& hbar, const Real& delta) {
        if (!(hbar > 0)) throw DomainError("hbar must be positive");
        if (ScalarTraits<T>::is_negative(delta)) throw DomainError("beta (and delta) must be nonnegative");
    }

    Real hbar_;
    Real beta_;
    Real delta_;
    Real sqrt_delta_;
};

}  // namespace smearlab
